#pragma once

#include "lgr/transform.hpp"

namespace lgr {

/// A leftist grammar with insertion rules only.
class InsertionGrammar {
 public:
  explicit InsertionGrammar(Grammar g);
  const Grammar& grammar() const { return grammar_; }

 private:
  Grammar grammar_;
};

InsertionGrammar strip_to_insertion(const Grammar& g);

/// Bounded insertion relation I_G: pairs (u, v) with u over the alphabet,
/// |u| <= L, and u.g =>* v.g. The input always embeds in the output.
BoundedRelation insertion_relation(const InsertionGrammar& ig,
                                   const RelBounds& b);

/// A transformer with no temporaries and no rule erasing an output symbol.
class SimpleTransformer {
 public:
  explicit SimpleTransformer(Transformer t);
  const Transformer& base() const { return base_; }
  const Grammar& grammar() const { return base_.grammar(); }
  const SymbolSet& inputs() const { return base_.inputs(); }
  const SymbolSet& outputs() const { return base_.outputs(); }

 private:
  Transformer base_;
};

SimpleTransformer make_simple(const Grammar& g, const SymbolSet& inputs,
                              const SymbolSet& outputs);

/// A witness for u nabla_G v: a non-decreasing map h with deletion rules
/// c_h(i) -/> a_i and the insertion chain g -> c_m -> ... -> c_1.
struct NablaWitness {
  std::vector<int> h;  // 1-based images, one per input letter
};

/// Pointwise-least witness, if any.
std::optional<NablaWitness> nabla(const SimpleTransformer& st, const Word& u,
                                  const Word& v);

/// The canonical derivation a witness certifies: the output chain is
/// inserted right to left, deleting each input letter as its deleter
/// becomes adjacent; exactly |u| + |v| steps.
Derivation nabla_derivation(const SimpleTransformer& st, const Word& u,
                            const Word& v, const NablaWitness& w);

/// Lemma "k = |u| + |v|" check for a replayed A* -> C* derivation.
bool check_simple_length(const SimpleTransformer& st, const Derivation& d);

/// Factorization R_G = nabla_G . I_{G^ins} plus the two corollary
/// inclusions, all at matched bounds.
bool check_decomposition(const SimpleTransformer& st, const RelBounds& b);

/// Union of simple transformers over the same inputs with disjoint outputs.
SimpleTransformer union_transformers(const SimpleTransformer& a,
                                     const SimpleTransformer& b);

}  // namespace lgr
