#include "lgr/transform.hpp"

#include <algorithm>

namespace lgr {

Transformer::Transformer(Grammar grammar, SymbolSet inputs, SymbolSet temps,
                         SymbolSet outputs)
    : grammar_(std::move(grammar)),
      inputs_(std::move(inputs)),
      temps_(std::move(temps)),
      outputs_(std::move(outputs)) {}

Transformer check_transformer(const Grammar& g, const SymbolSet& inputs,
                              const SymbolSet& temps,
                              const SymbolSet& outputs) {
  if (inputs.intersects(temps) || inputs.intersects(outputs) ||
      temps.intersects(outputs))
    throw DomainError("transformer parts overlap");
  SymbolSet covered = inputs.set_union(temps).set_union(outputs);
  if (!(covered == g.alphabet())) {
    SymbolSet missing = g.alphabet().set_minus(covered);
    SymbolSet extra = covered.set_minus(g.alphabet());
    std::string what = "transformer parts do not partition the alphabet:";
    for (const auto& n : missing.sorted_names()) what += " uncovered " + n;
    for (const auto& n : extra.sorted_names()) what += " foreign " + n;
    throw DomainError(what);
  }
  for (const Rule& r : g.rules()) {
    if (inputs.contains(r.actor))
      throw DomainError("input symbol active: " + to_string(r));
    if (r.kind == RuleKind::Insertion && inputs.contains(r.patient))
      throw DomainError("input symbol inserted: " + to_string(r));
  }
  return Transformer(g, inputs, temps, outputs);
}

BoundedRelation bounded_relation(const Transformer& t, const RelBounds& b,
                                 SearchMode mode) {
  if (b.max_input < 0 || b.max_word <= 0 || b.max_depth < 0)
    throw DomainError("relation bounds must be finite and positive");
  BoundedRelation rel;
  rel.bounds = b;
  Symbol fin = t.grammar().final_symbol();
  for (const Word& u : words_over(t.inputs(), b.max_input)) {
    Word start = u;
    start.push_back(fin);
    auto reached = reachable_words(t.grammar(), start, b.max_depth,
                                   b.max_word, mode);
    for (const auto& [w, depth] : reached) {
      if (w.empty() || w.back() != fin) continue;
      Word v(w.begin(), w.end() - 1);
      if (word_over(v, t.outputs())) rel.pairs.emplace(u, std::move(v));
    }
  }
  return rel;
}

InvariantCheck check_prefix_invariant(const Transformer& t,
                                      const std::vector<Word>& inputs,
                                      int max_depth, int max_word) {
  Symbol fin = t.grammar().final_symbol();
  SymbolSet working = t.temps().set_union(t.outputs());
  for (const Word& u : inputs) {
    if (!word_over(u, t.inputs()))
      throw DomainError("invariant check input not over A: " + to_string(u));
    Word start = u;
    start.push_back(fin);
    auto reached = reachable_words(t.grammar(), start, max_depth, max_word,
                                   SearchMode::Exhaustive);
    for (const auto& [w, depth] : reached) {
      Word body(w.begin(), w.end() - (w.empty() ? 0 : 1));
      bool seen_working = false;
      bool ok = true;
      for (Symbol s : body) {
        if (t.inputs().contains(s)) {
          if (seen_working) {
            ok = false;
            break;
          }
        } else if (working.contains(s)) {
          seen_working = true;
        } else {
          ok = false;
          break;
        }
      }
      if (!ok) {
        SearchBounds sb;
        sb.max_depth = max_depth;
        sb.max_word = max_word;
        auto res = bounded_reach(t.grammar(), start, w, sb);
        return {false, res.derivation};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

bool derivable(const Grammar& g, const Word& from, const Word& to, int depth,
               int width) {
  SearchBounds b;
  b.max_depth = depth;
  b.max_word = width;
  return bounded_reach(g, from, to, b).verdict == Verdict::Found;
}

}  // namespace

bool check_closure_property(const Transformer& t, const RelBounds& b) {
  BoundedRelation rel = bounded_relation(t, b);
  const Grammar& g = t.grammar();
  Symbol fin = g.final_symbol();
  auto with_g = [&](const Word& w) {
    Word out = w;
    out.push_back(fin);
    return out;
  };
  for (const auto& [u, v] : rel.pairs) {
    // stuttering on both sides
    if (!derivable(g, with_g(stutter_canonical(u)),
                   with_g(stutter_canonical(v)), b.max_depth + 2,
                   b.max_word + 1))
      return false;
    // duplicating an input letter (Fact B.1 instances)
    for (size_t i = 0; i < u.size(); ++i) {
      Word padded = u;
      padded.insert(padded.begin() + i, u[i]);
      if (!derivable(g, with_g(padded), with_g(v), b.max_depth + 2,
                     b.max_word + 1))
        return false;
    }
    // duplicating an output letter (Fact B.2 instances)
    for (size_t i = 0; i < v.size(); ++i) {
      Word padded = v;
      padded.insert(padded.begin() + i, v[i]);
      if (!derivable(g, with_g(u), with_g(padded), b.max_depth + 2,
                     b.max_word + 1))
        return false;
    }
  }
  return true;
}

Symbol fresh_symbol(const std::string& base, const SymbolSet& used) {
  Symbol cand = Symbol::intern(base);
  if (!used.contains(cand)) return cand;
  for (int i = 1;; ++i) {
    cand = Symbol::intern(base + "." + std::to_string(i));
    if (!used.contains(cand)) return cand;
  }
}

namespace {

Symbol mapped(const std::map<Symbol, Symbol>& m, Symbol s) {
  auto it = m.find(s);
  return it == m.end() ? s : it->second;
}

SymbolSet map_set(const SymbolSet& set, const std::map<Symbol, Symbol>& m) {
  std::vector<Symbol> out;
  for (Symbol s : set) out.push_back(mapped(m, s));
  SymbolSet mapped_set(std::move(out));
  if (mapped_set.size() != set.size())
    throw DomainError("relabeling is not injective on the alphabet");
  return mapped_set;
}

}  // namespace

Grammar relabel(const Grammar& g, const std::map<Symbol, Symbol>& m) {
  std::vector<Rule> rules;
  rules.reserve(g.rules().size());
  for (const Rule& r : g.rules())
    rules.push_back({r.kind, mapped(m, r.actor), mapped(m, r.patient)});
  return Grammar(map_set(g.alphabet(), m), mapped(m, g.final_symbol()),
                 std::move(rules));
}

Transformer relabel(const Transformer& t, const std::map<Symbol, Symbol>& m) {
  return Transformer(relabel(t.grammar(), m), map_set(t.inputs(), m),
                     map_set(t.temps(), m), map_set(t.outputs(), m));
}

Word relabel(const Word& w, const std::map<Symbol, Symbol>& m) {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(mapped(m, s));
  return out;
}

Composition compose(const Transformer& t1, const Transformer& t2) {
  if (t1.grammar().final_symbol() != t2.grammar().final_symbol())
    throw DomainError("not chainable: different final symbols");
  if (!(t1.outputs() == t2.inputs()))
    throw DomainError("not chainable: C1 != A2");
  if (t1.inputs().intersects(t2.outputs()))
    throw DomainError("not chainable: A1 meets C2");

  SymbolSet used = t1.grammar().alphabet().set_union(t2.grammar().alphabet());
  used.insert(t1.grammar().final_symbol());
  Composition out{t1, {}};

  // rename temporaries of either side that collide with the other side
  std::map<Symbol, Symbol> m1, m2;
  SymbolSet clash1 = t1.temps().set_intersect(
      t2.temps().set_union(t2.outputs()));
  for (Symbol s : clash1) {
    Symbol fresh = fresh_symbol(s.name() + ".1", used);
    used.insert(fresh);
    m1[s] = fresh;
    out.renamed.emplace_back(s, fresh);
  }
  SymbolSet clash2 = t2.temps().set_intersect(t1.inputs().set_union(
      t1.temps().set_minus(clash1)));
  for (Symbol s : clash2) {
    Symbol fresh = fresh_symbol(s.name() + ".1", used);
    used.insert(fresh);
    m2[s] = fresh;
    out.renamed.emplace_back(s, fresh);
  }
  Transformer a = m1.empty() ? t1 : relabel(t1, m1);
  Transformer b = m2.empty() ? t2 : relabel(t2, m2);

  std::vector<Rule> rules = a.grammar().rules();
  rules.insert(rules.end(), b.grammar().rules().begin(),
               b.grammar().rules().end());
  SymbolSet alphabet = a.grammar().alphabet().set_union(b.grammar().alphabet());
  Grammar g(alphabet, a.grammar().final_symbol(), std::move(rules));
  SymbolSet temps =
      a.temps().set_union(a.outputs()).set_union(b.temps());
  out.result = check_transformer(g, a.inputs(), temps, b.outputs());
  return out;
}

}  // namespace lgr
