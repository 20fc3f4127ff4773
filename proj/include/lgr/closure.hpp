#pragma once

#include "lgr/transform.hpp"

namespace lgr {

/// A leftist transformer with two distinguished temporary anchors; the
/// anchored relation S_G relates u to v when b1.u.g =>* b2.v.g.
class AnchoredTransformer {
 public:
  AnchoredTransformer(Transformer base, Symbol b1, Symbol b2);
  const Transformer& base() const { return base_; }
  const Grammar& grammar() const { return base_.grammar(); }
  Symbol b1() const { return b1_; }
  Symbol b2() const { return b2_; }

 private:
  Transformer base_;
  Symbol b1_, b2_;
};

/// Bijection between output and input symbols, lifted to words.
class Renaming {
 public:
  Renaming() = default;
  Renaming(const SymbolSet& from_c, const SymbolSet& to_a,
           std::vector<std::pair<Symbol, Symbol>> pairs);
  Symbol apply(Symbol c) const;
  Symbol inverse(Symbol a) const;
  Word apply_word(const Word& w) const;
  const std::vector<std::pair<Symbol, Symbol>>& pairs() const {
    return pairs_;
  }

 private:
  std::vector<std::pair<Symbol, Symbol>> pairs_;  // (c_i, a_i)
};

/// Bounded S_G: pairs (u, v), u over inputs with |u| <= L, v over outputs,
/// such that b1.u.g reaches b2.v.g within the bounds.
BoundedRelation anchored_relation(const AnchoredTransformer& at,
                                  const RelBounds& b,
                                  SearchMode mode = SearchMode::Exhaustive);

/// Raw variant for lemma-level checks: for each input u, every word
/// reachable from b1.u.g within the bounds (trailing g kept).
std::vector<std::pair<Word, std::vector<Word>>> anchored_images(
    const AnchoredTransformer& at, const RelBounds& b,
    SearchMode mode = SearchMode::Exhaustive);

/// The renamer R of C to A with anchors (b2, b1): erases a C word and
/// emits any A word covering its renaming, then swaps the anchors back.
AnchoredTransformer build_renamer(const SymbolSet& c, const SymbolSet& a,
                                  const Renaming& h, Symbol b2, Symbol b1,
                                  Symbol final_symbol);

enum class WrapRuleClass { Kept, Replace, Mirror, Clean, BRule };

struct WrappedTransformer {
  AnchoredTransformer at;
  AnchoredTransformer inner;             // the grammar that was wrapped
  Symbol sq1, sq2;                       // the wrapping anchors
  std::map<Symbol, Symbol> prime;        // alphabet -> primed copies
  std::vector<std::pair<Rule, WrapRuleClass>> classified;
};

/// F_{G,sq1,sq2}: primes the working alphabet, reroutes deletions of
/// input-side letters through the primed copies, and adds the cleanup and
/// anchor-swap rules.
WrappedTransformer wrap(const AnchoredTransformer& g, Symbol sq1, Symbol sq2);

/// H: plain union of the two wrapped rule sets (not a transformer).
Grammar glue(const WrappedTransformer& fg, const WrappedTransformer& fr);

struct HPrimeParts {
  AnchoredTransformer at;
  Symbol sq1_dot, sq2_dot;
  std::map<Symbol, Symbol> dot;  // A and the squares -> dotted copies
};

/// H' extends H with dotted input copies and dotted anchors.
HPrimeParts extend_hprime(const Grammar& h, const SymbolSet& a,
                          const SymbolSet& a_prime, Symbol b1, Symbol b1_prime,
                          Symbol sq1, Symbol sq2);

struct Finishers {
  AnchoredTransformer t1, t2;
  std::map<Symbol, Symbol> ddot;  // A, A', b1, b1', sq1 -> double-dotted
  Symbol o1, o2;
};

/// T1 checks the sq1.alpha.b1 prefix shape while double-dotting the word;
/// T2 erases everything but the double-dotted A part.
Finishers build_finishers(const SymbolSet& a, const SymbolSet& a_prime,
                          Symbol b1, Symbol b1_prime, Symbol sq1,
                          Symbol sq2_dot, Symbol final_symbol);

struct ClosurePipeline {
  AnchoredTransformer g;
  Renaming h;
  AnchoredTransformer renamer;
  WrappedTransformer fg, fr;
  Grammar glued;
  HPrimeParts hprime;
  Finishers fin;
  AnchoredTransformer gplus_raw;  // dotted inputs |- double-dotted outputs
  AnchoredTransformer gplus;      // renamed back to A |- C
  std::map<Symbol, Symbol> final_renaming;
  bool precheck_ran = false;
  bool precheck_sc = false;  // S = S . subword_C at the bounds
  bool precheck_ac = false;  // S = subword_A . S . subword_C at the bounds
  RelBounds precheck_bounds;
  std::vector<std::string> metadata;
};

/// The whole construction: renamer, both wraps, glue, extension, finishers,
/// final renaming. The bounded precondition S_G = S_G . subword_C is
/// checked at `precheck_bounds` unless skipped; failure throws unless
/// `force` is set.
ClosurePipeline transitive_closure(const AnchoredTransformer& at,
                                   const Renaming& h,
                                   const RelBounds& precheck_bounds,
                                   bool skip_precheck = false,
                                   bool force = false);

/// Mimics a derivation u.g =>+ v.g of the wrapped grammar's core inside the
/// wrapper, for a chosen primed-side context alpha; the constructive half
/// of the wrapper round-trip.
Derivation mimic_wrapped(const WrappedTransformer& fg, const Derivation& core,
                         const Word& alpha);

/// Word-language diagnostics for the glued grammar's two working modes.
bool in_mode_ac(const Word& w, const WrappedTransformer& fg);
bool in_mode_ca(const Word& w, const WrappedTransformer& fg);

}  // namespace lgr
