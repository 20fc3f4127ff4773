#include "lgr/sat.hpp"

#include <algorithm>
#include <sstream>

namespace lgr {

RawCnf parse_dimacs(std::string_view text) {
  RawCnf cnf;
  int declared_clauses = -1;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Literal> clause;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hdr(line);
      std::string p, fmt;
      if (!(hdr >> p >> fmt >> cnf.num_vars >> declared_clauses) ||
          fmt != "cnf")
        throw ParseError(lineno, 1, "bad DIMACS header");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, 1, "clause before header");
    std::istringstream body(line);
    int lit;
    while (body >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(clause);
        clause.clear();
      } else {
        int var = std::abs(lit);
        if (var > cnf.num_vars)
          throw ParseError(lineno, 1,
                           "literal " + std::to_string(lit) +
                               " out of range");
        clause.push_back({var, lit > 0});
      }
    }
  }
  if (!have_header) throw ParseError(1, 1, "missing DIMACS header");
  if (!clause.empty()) cnf.clauses.push_back(clause);  // tolerate missing 0
  return cnf;
}

PreprocessResult preprocess(const RawCnf& raw) {
  PreprocessResult res;
  std::vector<std::vector<Literal>> kept;
  for (const auto& clause : raw.clauses) {
    if (clause.empty()) {
      res.unsat_short_circuit = true;
      res.notes.push_back("empty clause: formula unsatisfiable");
      return res;
    }
    if (clause.size() > 3)
      throw DomainError("clause width > 3 is not supported");
    bool tautology = false;
    for (const Literal& a : clause)
      for (const Literal& b : clause)
        if (a.var == b.var && a.positive != b.positive) tautology = true;
    if (tautology) {
      ++res.dropped_tautologies;
      continue;
    }
    kept.push_back(clause);
  }
  CnfFormula f;
  f.num_vars = raw.num_vars + 1;
  res.forcing_var = f.num_vars;
  for (auto& clause : kept) {
    if (clause.size() < 3) ++res.padded_clauses;
    while (clause.size() < 3) clause.push_back(clause.back());
    f.clauses.push_back({clause[0], clause[1], clause[2]});
  }
  Literal force{f.num_vars, true};
  f.clauses.push_back({force, force, force});
  if (res.dropped_tautologies)
    res.notes.push_back(std::to_string(res.dropped_tautologies) +
                        " tautological clause(s) dropped");
  res.notes.push_back("forcing variable x" + std::to_string(res.forcing_var) +
                      " appended");
  res.formula = std::move(f);
  return res;
}

bool satisfies(const CnfFormula& f, const Valuation& v) {
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (const Literal& l : c)
      if (v.get(l.var) == l.positive) sat = true;
    if (!sat) return false;
  }
  return true;
}

std::optional<Valuation> truth_table_sat(const CnfFormula& f) {
  int n = f.num_vars;
  for (uint64_t bits = 0; bits < (1ull << n); ++bits) {
    Valuation v;
    v.value.assign(n + 1, false);
    for (int i = 1; i <= n; ++i) v.value[i] = (bits >> (i - 1)) & 1;
    if (satisfies(f, v)) return v;
  }
  return std::nullopt;
}

Symbol sat_final_symbol() { return Symbol::intern("g"); }

Symbol level_symbol(char letter, bool primed, int clause, int level) {
  std::string name(1, letter);
  if (primed) name += '\'';
  name += std::to_string(clause) + "." + std::to_string(level);
  return Symbol::intern(name);
}

std::optional<LevelSymbolInfo> decode_level_symbol(Symbol s) {
  const std::string& name = s.name();
  if (name.empty() || (name[0] != 'T' && name[0] != 'U')) return std::nullopt;
  LevelSymbolInfo info{name[0], false, 0, 0};
  size_t at = 1;
  if (at < name.size() && name[at] == '\'') {
    info.primed = true;
    ++at;
  }
  size_t dot = name.find('.', at);
  if (dot == std::string::npos) return std::nullopt;
  try {
    info.clause = std::stoi(name.substr(at, dot - at));
    info.level = std::stoi(name.substr(dot + 1));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return info;
}

namespace {

bool clause_has(const Clause& c, int var, bool positive) {
  for (const Literal& l : c)
    if (l.var == var && l.positive == positive) return true;
  return false;
}

// does the prefix valuation on x_1..x_level already satisfy the clause
bool prefix_satisfies(const Clause& c, const Valuation& theta, int level) {
  for (const Literal& l : c)
    if (l.var <= level && theta.get(l.var) == l.positive) return true;
  return false;
}

}  // namespace

SimpleTransformer build_level_transformer(const CnfFormula& f, int level,
                                          bool positive) {
  int n = f.num_vars;
  int m = static_cast<int>(f.clauses.size());
  if (level < 1 || level > n) throw DomainError("level out of range");
  Symbol g = sat_final_symbol();
  bool primed = !positive;
  auto out_sym = [&](char letter, int i) {
    return level_symbol(letter, primed, i, level);
  };
  std::vector<Rule> rules;
  // fixed insertions: any level word can be built downward from g
  for (char letter : {'T', 'U'}) rules.push_back(ins(g, out_sym(letter, m)));
  for (int i = 1; i + 1 <= m; ++i)
    for (char upper : {'T', 'U'})
      for (char lower : {'T', 'U'})
        rules.push_back(ins(out_sym(upper, i + 1), out_sym(lower, i)));
  // fixed deletions: both copies of the previous level move up unchanged
  for (int i = 1; i <= m; ++i) {
    for (char letter : {'T', 'U'}) {
      rules.push_back(
          del(out_sym(letter, i), level_symbol(letter, false, i, level - 1)));
      rules.push_back(
          del(out_sym(letter, i), level_symbol(letter, true, i, level - 1)));
    }
    // conditional: the chosen literal may determine clause i
    if (clause_has(f.clauses[i - 1], level, positive)) {
      rules.push_back(
          del(out_sym('T', i), level_symbol('U', false, i, level - 1)));
      rules.push_back(
          del(out_sym('T', i), level_symbol('U', true, i, level - 1)));
    }
  }
  std::vector<Symbol> in_syms, out_syms;
  for (int i = 1; i <= m; ++i) {
    for (char letter : {'T', 'U'}) {
      in_syms.push_back(level_symbol(letter, false, i, level - 1));
      in_syms.push_back(level_symbol(letter, true, i, level - 1));
      out_syms.push_back(out_sym(letter, i));
    }
  }
  SymbolSet inputs{std::vector<Symbol>(in_syms)};
  SymbolSet outputs{std::vector<Symbol>(out_syms)};
  Grammar grammar(inputs.set_union(outputs), g, std::move(rules));
  return make_simple(grammar, inputs, outputs);
}

Transformer build_phi_grammar(const CnfFormula& f) {
  int n = f.num_vars;
  auto level_union = [&](int j) {
    return union_transformers(build_level_transformer(f, j, true),
                              build_level_transformer(f, j, false));
  };
  Transformer acc = level_union(1).base();
  for (int j = 2; j <= n; ++j) {
    Composition c = compose(acc, level_union(j).base());
    if (!c.renamed.empty())
      throw Error("phi grammar composition unexpectedly renamed symbols");
    acc = std::move(c.result);
  }
  return acc;
}

Word phi_source(const CnfFormula& f) {
  Word w;
  for (int i = 1; i <= static_cast<int>(f.clauses.size()); ++i)
    w.push_back(level_symbol('U', false, i, 0));
  return w;
}

Word phi_target(const CnfFormula& f) {
  Word w;
  for (int i = 1; i <= static_cast<int>(f.clauses.size()); ++i)
    w.push_back(level_symbol('T', false, i, f.num_vars));
  return w;
}

Derivation witness_derivation(const CnfFormula& f, const Valuation& theta) {
  if (!satisfies(f, theta))
    throw DomainError("assignment does not satisfy the formula");
  int n = f.num_vars;
  int m = static_cast<int>(f.clauses.size());
  Transformer phi = build_phi_grammar(f);
  Symbol g = sat_final_symbol();
  Word initial = phi_source(f);
  initial.push_back(g);
  std::vector<Step> steps;
  Word prev = phi_source(f);
  for (int j = 1; j <= n; ++j) {
    bool primed = !theta.get(j);
    Word next;
    for (int i = 1; i <= m; ++i) {
      char letter =
          prefix_satisfies(f.clauses[i - 1], theta, j) ? 'T' : 'U';
      next.push_back(level_symbol(letter, primed, i, j));
    }
    // chain down, deleting the previous level as we go: 2m steps
    for (int i = m; i >= 1; --i) {
      Symbol actor = (i == m) ? g : next[i];
      steps.push_back({ins(actor, next[i - 1]), i + 1});
      steps.push_back({del(next[i - 1], prev[i - 1]), i + 1});
    }
    prev = std::move(next);
  }
  return Derivation{phi.grammar(), std::move(initial), std::move(steps)};
}

Valuation decode_assignment(const CnfFormula& f, const Derivation& d) {
  auto words = replay(d);
  Symbol g = sat_final_symbol();
  Word source = phi_source(f);
  source.push_back(g);
  Word target = phi_target(f);
  target.push_back(g);
  if (words.front() != source || words.back() != target)
    throw DomainError("derivation endpoints do not match the reduction");
  int n = f.num_vars;
  std::vector<bool> saw_plain(n + 1, false), saw_primed(n + 1, false);
  for (const Word& w : words) {
    for (Symbol s : w) {
      auto info = decode_level_symbol(s);
      if (!info || info->level < 1) continue;
      (info->primed ? saw_primed : saw_plain)[info->level] = true;
    }
  }
  // per level: unprimed means true, primed means false; ambiguous levels
  // try both, verified against the formula
  std::vector<int> free_levels;
  Valuation v;
  v.value.assign(n + 1, false);
  for (int j = 1; j <= n; ++j) {
    if (saw_plain[j] && !saw_primed[j])
      v.value[j] = true;
    else if (!saw_plain[j] && saw_primed[j])
      v.value[j] = false;
    else
      free_levels.push_back(j);
  }
  uint64_t combos = 1ull << free_levels.size();
  for (uint64_t bits = 0; bits < combos; ++bits) {
    for (size_t k = 0; k < free_levels.size(); ++k)
      v.value[free_levels[k]] = !((bits >> k) & 1);  // try true first
    if (satisfies(f, v)) return v;
  }
  throw DomainError(
      "decoded assignment fails verification (implementation bug)");
}

HardInstance build_hard_instance(const CnfFormula& f, int k) {
  int n = f.num_vars;
  int m = static_cast<int>(f.clauses.size());
  if (k <= m * (n - 1))
    throw DomainError("padding count too small: need k > m(n-1) = " +
                      std::to_string(m * (n - 1)));
  Transformer phi = build_phi_grammar(f);
  Symbol g = sat_final_symbol();
  SymbolSet used = phi.grammar().alphabet();
  used.insert(g);
  std::vector<Symbol> extra;
  for (int i = 1; i <= k; ++i) {
    Symbol a = fresh_symbol("a" + std::to_string(i), used);
    used.insert(a);
    extra.push_back(a);
  }
  Word target = phi_target(f);
  std::vector<Rule> rules = phi.grammar().rules();
  Symbol a0 = target[0];  // T_1^n plays the role of a_0
  for (int i = 1; i <= k; ++i) {
    Symbol lower = i == 1 ? a0 : extra[i - 2];
    rules.push_back(ins(lower, extra[i - 1]));
    rules.push_back(del(lower, extra[i - 1]));
  }
  for (int i = 1; i <= m; ++i)
    rules.push_back(del(extra[k - 1], level_symbol('U', false, i, 0)));
  Grammar grammar = make_grammar(g, std::move(rules),
                                 phi.grammar().alphabet());

  // the bypass derivation: insert the target, hide behind the chain,
  // erase the source, unwind the chain; segments m, k, m, k
  Word initial = phi_source(f);
  initial.push_back(g);
  std::vector<Step> steps;
  for (int i = m; i >= 1; --i) {
    Symbol actor = (i == m) ? g : target[i];
    steps.push_back({ins(actor, target[i - 1]), m + 1});
  }
  for (int i = 1; i <= k; ++i) {
    Symbol lower = i == 1 ? a0 : extra[i - 2];
    steps.push_back({ins(lower, extra[i - 1]), m + 1});
  }
  for (int i = m; i >= 1; --i)
    steps.push_back(
        {del(extra[k - 1], level_symbol('U', false, i, 0)), i + 1});
  for (int i = k; i >= 1; --i) {
    Symbol lower = i == 1 ? a0 : extra[i - 2];
    steps.push_back({del(lower, extra[i - 1]), 2});
  }
  return {grammar, Derivation{grammar, std::move(initial), std::move(steps)}};
}

}  // namespace lgr
