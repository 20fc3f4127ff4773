#pragma once

#include <map>

#include "lgr/derivations.hpp"
#include "lgr/reach.hpp"
#include "lgr/relations.hpp"

namespace lgr {

/// A leftist transformer G : A |- C. Input symbols are inactive and never
/// inserted; the alphabet is partitioned as inputs, temporaries, outputs.
class Transformer {
 public:
  Transformer(Grammar grammar, SymbolSet inputs, SymbolSet temps,
              SymbolSet outputs);

  const Grammar& grammar() const { return grammar_; }
  const SymbolSet& inputs() const { return inputs_; }
  const SymbolSet& temps() const { return temps_; }
  const SymbolSet& outputs() const { return outputs_; }

 private:
  Grammar grammar_;
  SymbolSet inputs_, temps_, outputs_;
};

/// Validates the typing constraints and returns the typed transformer.
Transformer check_transformer(const Grammar& g, const SymbolSet& inputs,
                              const SymbolSet& temps,
                              const SymbolSet& outputs);

struct RelBounds {
  int max_input = 0;  // L: input word length
  int max_word = 0;   // M: intermediate word length, final symbol included
  int max_depth = 0;  // D: derivation length
};

/// The realized relation R_G materialized under explicit bounds: all pairs
/// (u, v) with u in A*, |u| <= L, v in C*, such that u.g =>* v.g within
/// depth D and width M.
struct BoundedRelation {
  WordRel pairs;
  RelBounds bounds;
};

BoundedRelation bounded_relation(const Transformer& t, const RelBounds& b,
                                 SearchMode mode = SearchMode::Exhaustive);

/// Checks the A*D* shape on every word reachable from the given inputs.
struct InvariantCheck {
  bool ok = true;
  std::optional<Derivation> counterexample;
};
InvariantCheck check_prefix_invariant(const Transformer& t,
                                      const std::vector<Word>& inputs,
                                      int max_depth, int max_word);

/// Bound-safe closure laws of R_G: stuttering on both sides and duplication
/// of input/output letters, each witnessed by a derivation found within
/// slightly enlarged bounds.
bool check_closure_property(const Transformer& t, const RelBounds& b);

struct Composition {
  Transformer result;
  std::vector<std::pair<Symbol, Symbol>> renamed;  // original -> fresh
};

/// Sequential composition G1.G2 = (A1, B1+C1+B2, C2, P1+P2, g). Requires
/// chainability (C1 = A2, A1 disjoint from C2); colliding temporaries are
/// renamed x -> x.1, x.2, ... automatically and recorded.
Composition compose(const Transformer& t1, const Transformer& t2);

/// Injective symbol substitution applied to a grammar or transformer.
Grammar relabel(const Grammar& g, const std::map<Symbol, Symbol>& map);
Transformer relabel(const Transformer& t, const std::map<Symbol, Symbol>& map);
Word relabel(const Word& w, const std::map<Symbol, Symbol>& map);

/// A name like `base` that collides with nothing in `used`; tries base,
/// then base.1, base.2, ...
Symbol fresh_symbol(const std::string& base, const SymbolSet& used);

}  // namespace lgr
