#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "lgr/symbols.hpp"

namespace lgr {

/// Rules are stored in shorthand form: Insertion(a, b) is "a -> ba" (a
/// inserts b to its left), Deletion(d, c) is "cd -> d" (d deletes c to its
/// left). The active symbol is the actor and is never changed by a step.
enum class RuleKind : uint8_t { Insertion, Deletion };

struct Rule {
  RuleKind kind;
  Symbol actor;
  Symbol patient;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

inline Rule ins(Symbol actor, Symbol patient) {
  return {RuleKind::Insertion, actor, patient};
}
inline Rule del(Symbol actor, Symbol patient) {
  return {RuleKind::Deletion, actor, patient};
}

std::string to_string(const Rule& r);

/// A leftist grammar: alphabet, final symbol g (not part of the alphabet)
/// and a duplicate-free rule set. Rules may use g as actor but never as
/// patient: nothing inserts or deletes the axiom.
class Grammar {
 public:
  Grammar(SymbolSet alphabet, Symbol final_symbol, std::vector<Rule> rules);

  const SymbolSet& alphabet() const { return alphabet_; }
  Symbol final_symbol() const { return final_; }
  const std::vector<Rule>& rules() const { return rules_; }

  bool has_rule(const Rule& r) const;
  /// Insertion rules with the given actor, in patient-name order.
  std::span<const Rule> insertions_by(Symbol actor) const;
  /// Deletion rules with the given actor, in patient-name order.
  std::span<const Rule> deletions_by(Symbol actor) const;
  bool can_delete(Symbol actor, Symbol patient) const;

  /// True when the may-act-upon graph (actor -> patient over all rules)
  /// has no directed cycle.
  bool acyclic() const;

  friend bool operator==(const Grammar& a, const Grammar& b) {
    return a.alphabet_ == b.alphabet_ && a.final_ == b.final_ &&
           a.rules_ == b.rules_;
  }

 private:
  SymbolSet alphabet_;
  Symbol final_;
  std::vector<Rule> rules_;
  std::unordered_map<Symbol, std::vector<Rule>, SymbolHash> ins_;
  std::unordered_map<Symbol, std::vector<Rule>, SymbolHash> del_;
};

/// Builds a grammar whose alphabet is collected from the rules plus
/// `extra`, excluding the final symbol.
Grammar make_grammar(Symbol final_symbol, std::vector<Rule> rules,
                     SymbolSet extra = {});

/// One rewrite step: `position` is the 1-based index of the active letter
/// in the word BEFORE the step. An insertion places the new letter at
/// `position` and shifts the actor right; a deletion removes the letter at
/// `position - 1`.
struct Step {
  Rule rule;
  int position = 0;
  friend auto operator<=>(const Step&, const Step&) = default;
};

std::string to_string(const Step& s);

enum class StepErrorKind {
  RuleNotInGrammar,
  PositionOutOfRange,
  PatientMismatch,
  ActorMismatch,
};

struct StepError : DomainError {
  StepErrorKind kind;
  StepError(StepErrorKind k, const std::string& msg)
      : DomainError(msg), kind(k) {}
};

bool step_valid(const Grammar& g, const Word& w, const Step& s);
Word apply_step(const Grammar& g, const Word& w, const Step& s);
/// Applies without validity checks; behaviour is undefined on bad steps.
Word apply_step_unchecked(const Word& w, const Step& s);

/// All steps applicable to `w`, ordered by position ascending, then
/// Insertion before Deletion, then patient name ascending.
std::vector<Step> enabled_steps(const Grammar& g, const Word& w);
void enabled_steps(const Grammar& g, const Word& w, std::vector<Step>& out);

/// Shortest stuttering-equivalent word: runs of equal letters collapse.
Word stutter_canonical(const Word& w);

/// Whether x embeds in y by deleting letters; with `allowed`, every
/// deleted letter must belong to the allowed set.
bool is_subword(const Word& x, const Word& y);
bool is_subword(const Word& x, const Word& y, const SymbolSet& allowed);

}  // namespace lgr
