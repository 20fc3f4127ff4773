#include "lgr/core.hpp"

#include <algorithm>

namespace lgr {

std::string to_string(const Rule& r) {
  const char* arrow = r.kind == RuleKind::Insertion ? " -> " : " -/> ";
  return r.actor.name() + arrow + r.patient.name();
}

std::string to_string(const Step& s) {
  return to_string(s.rule) + " @ " + std::to_string(s.position);
}

Grammar::Grammar(SymbolSet alphabet, Symbol final_symbol,
                 std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), final_(final_symbol) {
  if (!final_.valid()) throw DomainError("grammar has no final symbol");
  if (alphabet_.contains(final_))
    throw DomainError("final symbol '" + final_.name() +
                      "' must not belong to the alphabet");
  std::sort(rules.begin(), rules.end());
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  for (const Rule& r : rules) {
    if (r.patient == final_)
      throw DomainError("rule touches axiom as patient: " + to_string(r));
    if (!alphabet_.contains(r.actor) && r.actor != final_)
      throw DomainError("rule actor '" + r.actor.name() +
                        "' not in alphabet: " + to_string(r));
    if (!alphabet_.contains(r.patient))
      throw DomainError("rule patient '" + r.patient.name() +
                        "' not in alphabet: " + to_string(r));
  }
  rules_ = std::move(rules);
  for (const Rule& r : rules_) {
    auto& bucket = (r.kind == RuleKind::Insertion ? ins_ : del_)[r.actor];
    bucket.push_back(r);
  }
  auto by_patient_name = [](const Rule& a, const Rule& b) {
    return a.patient.name() < b.patient.name();
  };
  for (auto& [sym, bucket] : ins_)
    std::sort(bucket.begin(), bucket.end(), by_patient_name);
  for (auto& [sym, bucket] : del_)
    std::sort(bucket.begin(), bucket.end(), by_patient_name);
}

bool Grammar::has_rule(const Rule& r) const {
  return std::binary_search(rules_.begin(), rules_.end(), r);
}

std::span<const Rule> Grammar::insertions_by(Symbol actor) const {
  auto it = ins_.find(actor);
  if (it == ins_.end()) return {};
  return it->second;
}

std::span<const Rule> Grammar::deletions_by(Symbol actor) const {
  auto it = del_.find(actor);
  if (it == del_.end()) return {};
  return it->second;
}

bool Grammar::can_delete(Symbol actor, Symbol patient) const {
  return has_rule(del(actor, patient));
}

bool Grammar::acyclic() const {
  // iterative DFS over actor -> patient edges
  std::unordered_map<Symbol, std::vector<Symbol>, SymbolHash> adj;
  for (const Rule& r : rules_) adj[r.actor].push_back(r.patient);
  std::unordered_map<Symbol, int, SymbolHash> state;  // 0 new, 1 open, 2 done
  for (const auto& [start, ignored] : adj) {
    if (state[start]) continue;
    std::vector<std::pair<Symbol, size_t>> stack{{start, 0}};
    state[start] = 1;
    while (!stack.empty()) {
      auto& [sym, idx] = stack.back();
      auto it = adj.find(sym);
      if (it == adj.end() || idx >= it->second.size()) {
        state[sym] = 2;
        stack.pop_back();
        continue;
      }
      Symbol next = it->second[idx++];
      int st = state[next];
      if (st == 1) return false;
      if (st == 0) {
        state[next] = 1;
        stack.push_back({next, 0});
      }
    }
  }
  return true;
}

Grammar make_grammar(Symbol final_symbol, std::vector<Rule> rules,
                     SymbolSet extra) {
  std::vector<Symbol> syms;
  for (const Rule& r : rules) {
    if (r.actor != final_symbol) syms.push_back(r.actor);
    syms.push_back(r.patient);
  }
  for (Symbol s : extra)
    if (s != final_symbol) syms.push_back(s);
  return Grammar(SymbolSet(std::move(syms)), final_symbol, std::move(rules));
}

namespace {

StepErrorKind check_step(const Grammar& g, const Word& w, const Step& s) {
  if (!g.has_rule(s.rule)) return StepErrorKind::RuleNotInGrammar;
  int lo = s.rule.kind == RuleKind::Deletion ? 2 : 1;
  if (s.position < lo || s.position > static_cast<int>(w.size()))
    return StepErrorKind::PositionOutOfRange;
  if (s.rule.kind == RuleKind::Deletion &&
      w[s.position - 2] != s.rule.patient)
    return StepErrorKind::PatientMismatch;
  if (w[s.position - 1] != s.rule.actor) return StepErrorKind::ActorMismatch;
  return static_cast<StepErrorKind>(-1);
}

}  // namespace

bool step_valid(const Grammar& g, const Word& w, const Step& s) {
  return check_step(g, w, s) == static_cast<StepErrorKind>(-1);
}

Word apply_step(const Grammar& g, const Word& w, const Step& s) {
  switch (check_step(g, w, s)) {
    case StepErrorKind::RuleNotInGrammar:
      throw StepError(StepErrorKind::RuleNotInGrammar,
                      "rule not in grammar: " + to_string(s.rule));
    case StepErrorKind::PositionOutOfRange:
      throw StepError(StepErrorKind::PositionOutOfRange,
                      "position out of range: " + to_string(s) +
                          " in word of length " + std::to_string(w.size()));
    case StepErrorKind::PatientMismatch:
      throw StepError(StepErrorKind::PatientMismatch,
                      "patient mismatch: " + to_string(s) + " in '" +
                          to_string(w) + "'");
    case StepErrorKind::ActorMismatch:
      throw StepError(StepErrorKind::ActorMismatch,
                      "actor mismatch: " + to_string(s) + " in '" +
                          to_string(w) + "'");
    default:
      return apply_step_unchecked(w, s);
  }
}

Word apply_step_unchecked(const Word& w, const Step& s) {
  Word out;
  if (s.rule.kind == RuleKind::Insertion) {
    out.reserve(w.size() + 1);
    out.assign(w.begin(), w.begin() + (s.position - 1));
    out.push_back(s.rule.patient);
    out.insert(out.end(), w.begin() + (s.position - 1), w.end());
  } else {
    out.reserve(w.size() - 1);
    out.assign(w.begin(), w.begin() + (s.position - 2));
    out.insert(out.end(), w.begin() + (s.position - 1), w.end());
  }
  return out;
}

void enabled_steps(const Grammar& g, const Word& w, std::vector<Step>& out) {
  out.clear();
  for (int p = 1; p <= static_cast<int>(w.size()); ++p) {
    Symbol actor = w[p - 1];
    for (const Rule& r : g.insertions_by(actor)) out.push_back({r, p});
    if (p >= 2) {
      for (const Rule& r : g.deletions_by(actor)) {
        if (r.patient == w[p - 2]) out.push_back({r, p});
      }
    }
  }
}

std::vector<Step> enabled_steps(const Grammar& g, const Word& w) {
  std::vector<Step> out;
  enabled_steps(g, w, out);
  return out;
}

Word stutter_canonical(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (out.empty() || out.back() != s) out.push_back(s);
  }
  return out;
}

bool is_subword(const Word& x, const Word& y) {
  size_t i = 0;
  for (size_t j = 0; j < y.size() && i < x.size(); ++j) {
    if (y[j] == x[i]) ++i;
  }
  return i == x.size();
}

bool is_subword(const Word& x, const Word& y, const SymbolSet& allowed) {
  // greedy leftmost matching; skipped letters must be deletable
  size_t i = 0;
  for (size_t j = 0; j < y.size(); ++j) {
    if (i < x.size() && y[j] == x[i]) {
      ++i;
    } else if (!allowed.contains(y[j])) {
      return false;
    }
  }
  return i == x.size();
}

}  // namespace lgr
