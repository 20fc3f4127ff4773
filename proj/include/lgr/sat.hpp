#pragma once

#include <array>

#include "lgr/simple.hpp"

namespace lgr {

struct Literal {
  int var = 0;          // 1-based variable index
  bool positive = true;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

/// Raw DIMACS clauses before preprocessing; clauses keep their input width.
struct RawCnf {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;
};

RawCnf parse_dimacs(std::string_view text);

struct PreprocessResult {
  std::optional<CnfFormula> formula;  // empty when an empty clause occurred
  bool unsat_short_circuit = false;
  int dropped_tautologies = 0;
  int padded_clauses = 0;
  int forcing_var = 0;  // the appended variable forced to true
  std::vector<std::string> notes;
};

/// Normalizes a raw CNF for the reduction: drops tautological clauses, pads
/// short clauses by repeating their last literal, and appends a fresh
/// forcing variable with a unit clause so every satisfying assignment sets
/// the last variable true. Equisatisfiable with the input.
PreprocessResult preprocess(const RawCnf& raw);

/// Assignment of variables 1..n.
struct Valuation {
  std::vector<bool> value;  // index 0 unused
  bool get(int var) const { return value[static_cast<size_t>(var)]; }
};

bool satisfies(const CnfFormula& f, const Valuation& v);
std::optional<Valuation> truth_table_sat(const CnfFormula& f);

/// Level symbols T<i>.<j>, U<i>.<j> and their primed copies.
Symbol level_symbol(char letter, bool primed, int clause, int level);
struct LevelSymbolInfo {
  char letter;  // 'T' or 'U'
  bool primed;
  int clause;
  int level;
};
std::optional<LevelSymbolInfo> decode_level_symbol(Symbol s);
Symbol sat_final_symbol();

/// The per-variable transformer G_j^b: inputs are all level j-1 symbols,
/// outputs the chosen copy at level j. Fixed insertions build any level-j
/// word top-down from g; fixed deletions move each symbol to the next
/// level; conditional deletions let a determined T absorb an undetermined
/// U when the chosen literal satisfies the clause.
SimpleTransformer build_level_transformer(const CnfFormula& f, int level,
                                          bool positive);

/// The full reduction (G_1^T + G_1^F) . ... . (G_n^T + G_n^F).
Transformer build_phi_grammar(const CnfFormula& f);

/// Source U_1^0..U_m^0 and target T_1^n..T_m^n words (final symbol not
/// included).
Word phi_source(const CnfFormula& f);
Word phi_target(const CnfFormula& f);

/// 2mn-step derivation from a satisfying assignment, level by level.
Derivation witness_derivation(const CnfFormula& f, const Valuation& theta);

/// Reads the per-level copy choice out of a derivation between the phi
/// endpoints and verifies it against the formula.
Valuation decode_assignment(const CnfFormula& f, const Derivation& d);

/// The mu-minimality gadget: G_phi plus a bypass chain of k extra symbols
/// and its canonical 2m+2k derivation.
struct HardInstance {
  Grammar grammar;
  Derivation pi;
};
HardInstance build_hard_instance(const CnfFormula& f, int k);

}  // namespace lgr
