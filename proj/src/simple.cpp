#include "lgr/simple.hpp"

#include <algorithm>

namespace lgr {

InsertionGrammar::InsertionGrammar(Grammar g) : grammar_(std::move(g)) {
  for (const Rule& r : grammar_.rules())
    if (r.kind == RuleKind::Deletion)
      throw DomainError("insertion grammar contains a deletion rule: " +
                        to_string(r));
}

InsertionGrammar strip_to_insertion(const Grammar& g) {
  std::vector<Rule> rules;
  for (const Rule& r : g.rules())
    if (r.kind == RuleKind::Insertion) rules.push_back(r);
  return InsertionGrammar(
      Grammar(g.alphabet(), g.final_symbol(), std::move(rules)));
}

BoundedRelation insertion_relation(const InsertionGrammar& ig,
                                   const RelBounds& b) {
  if (b.max_input < 0 || b.max_word <= 0 || b.max_depth < 0)
    throw DomainError("relation bounds must be finite and positive");
  BoundedRelation rel;
  rel.bounds = b;
  const Grammar& g = ig.grammar();
  Symbol fin = g.final_symbol();
  for (const Word& u : words_over(g.alphabet(), b.max_input)) {
    Word start = u;
    start.push_back(fin);
    auto reached = reachable_words(g, start, b.max_depth, b.max_word,
                                   SearchMode::Exhaustive);
    for (const auto& [w, depth] : reached) {
      Word v(w.begin(), w.end() - 1);
      rel.pairs.emplace(u, std::move(v));
    }
  }
  return rel;
}

SimpleTransformer::SimpleTransformer(Transformer t) : base_(std::move(t)) {
  if (!base_.temps().empty())
    throw DomainError("simple transformer must have no temporaries");
  for (const Rule& r : base_.grammar().rules()) {
    if (r.kind == RuleKind::Deletion && base_.outputs().contains(r.patient))
      throw DomainError("simple transformer erases an output symbol: " +
                        to_string(r));
  }
}

SimpleTransformer make_simple(const Grammar& g, const SymbolSet& inputs,
                              const SymbolSet& outputs) {
  return SimpleTransformer(check_transformer(g, inputs, {}, outputs));
}

std::optional<NablaWitness> nabla(const SimpleTransformer& st, const Word& u,
                                  const Word& v) {
  if (!word_over(u, st.inputs()))
    throw DomainError("nabla input not over A: " + to_string(u));
  if (!word_over(v, st.outputs()))
    throw DomainError("nabla output not over C: " + to_string(v));
  const Grammar& g = st.grammar();
  int n = static_cast<int>(u.size());
  int m = static_cast<int>(v.size());
  // the insertion chain g -> c_m -> ... -> c_1 does not depend on h
  Symbol upper = g.final_symbol();
  for (int j = m; j >= 1; --j) {
    if (!g.has_rule(ins(upper, v[j - 1]))) return std::nullopt;
    upper = v[j - 1];
  }
  NablaWitness w;
  int floor = 1;
  for (int i = 1; i <= n; ++i) {
    int j = floor;
    while (j <= m && !g.can_delete(v[j - 1], u[i - 1])) ++j;
    if (j > m) return std::nullopt;
    w.h.push_back(j);
    floor = j;
  }
  return w;
}

Derivation nabla_derivation(const SimpleTransformer& st, const Word& u,
                            const Word& v, const NablaWitness& w) {
  const Grammar& g = st.grammar();
  int n = static_cast<int>(u.size());
  int m = static_cast<int>(v.size());
  if (static_cast<int>(w.h.size()) != n)
    throw DomainError("witness arity mismatch");
  Word initial = u;
  initial.push_back(g.final_symbol());
  std::vector<Step> steps;
  int remaining = n;   // input letters still present
  int head = m + 1;    // chain head index into v; m+1 means empty chain
  while (head > 1 || remaining > 0) {
    if (remaining > 0 && head <= m && w.h[remaining - 1] == head) {
      steps.push_back({del(v[head - 1], u[remaining - 1]), remaining + 1});
      --remaining;
    } else if (head > 1) {
      Symbol actor = head == m + 1 ? g.final_symbol() : v[head - 1];
      steps.push_back({ins(actor, v[head - 2]), remaining + 1});
      --head;
    } else {
      throw DomainError("witness does not certify the pair");
    }
  }
  return Derivation{g, std::move(initial), std::move(steps)};
}

bool check_simple_length(const SimpleTransformer& st, const Derivation& d) {
  auto words = replay(d);
  const Word& first = words.front();
  const Word& last = words.back();
  Symbol fin = st.grammar().final_symbol();
  if (first.empty() || first.back() != fin || last.empty() ||
      last.back() != fin)
    throw DomainError("endpoint shape violation: words must end in g");
  Word u(first.begin(), first.end() - 1);
  Word v(last.begin(), last.end() - 1);
  if (!word_over(u, st.inputs()) || !word_over(v, st.outputs()))
    throw DomainError("endpoint shape violation: A* and C* expected");
  return d.steps.size() == u.size() + v.size();
}

namespace {

bool subword_has_nabla(const SimpleTransformer& st, const Word& u,
                       const Word& v) {
  // try every subsequence of v as the nabla image
  int m = static_cast<int>(v.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Word sub;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) sub.push_back(v[i]);
    if (nabla(st, u, sub)) return true;
  }
  return false;
}

}  // namespace

bool check_decomposition(const SimpleTransformer& st, const RelBounds& b) {
  const Grammar& g = st.grammar();
  Symbol fin = g.final_symbol();
  BoundedRelation r = bounded_relation(st.base(), b);
  InsertionGrammar ins_g = strip_to_insertion(g);
  RelBounds ib{b.max_word, b.max_word, b.max_depth};
  BoundedRelation i_rel = insertion_relation(ins_g, ib);

  auto with_g = [&](const Word& w) {
    Word out = w;
    out.push_back(fin);
    return out;
  };

  // R ⊆ nabla . I and R ⊆ nabla . ⊑_C
  for (const auto& [u, v] : r.pairs) {
    bool factored = false;
    for (const auto& [w, v2] : i_rel.pairs) {
      if (v2 != v || !word_over(w, st.outputs())) continue;
      if (nabla(st, u, w)) {
        factored = true;
        break;
      }
    }
    if (!factored) return false;
    if (!subword_has_nabla(st, u, v)) return false;  // Cor. 5.3 right side
  }

  // nabla . I ⊆ R with depth slack |u| + |v|
  for (const Word& u : words_over(st.inputs(), b.max_input)) {
    for (const auto& [w, v] : i_rel.pairs) {
      if (!word_over(w, st.outputs()) || !word_over(v, st.outputs()))
        continue;
      auto witness = nabla(st, u, w);
      if (!witness) continue;
      int depth = static_cast<int>(u.size() + v.size());
      SearchBounds sb;
      sb.max_depth = depth;
      sb.max_word = b.max_word + 1;
      if (bounded_reach(g, with_g(u), with_g(v), sb).verdict !=
          Verdict::Found)
        return false;
      // Cor. 5.3 left side: nabla pairs are realized
      Derivation cert = nabla_derivation(st, u, w, *witness);
      if (replay(cert).back() != with_g(w)) return false;
    }
  }
  return true;
}

SimpleTransformer union_transformers(const SimpleTransformer& a,
                                     const SimpleTransformer& b) {
  if (!(a.inputs() == b.inputs()))
    throw DomainError("union requires identical input alphabets");
  if (a.outputs().intersects(b.outputs()))
    throw DomainError("union requires disjoint output alphabets");
  if (a.grammar().final_symbol() != b.grammar().final_symbol())
    throw DomainError("union requires the same final symbol");
  std::vector<Rule> rules = a.grammar().rules();
  rules.insert(rules.end(), b.grammar().rules().begin(),
               b.grammar().rules().end());
  SymbolSet alphabet =
      a.grammar().alphabet().set_union(b.grammar().alphabet());
  Grammar g(alphabet, a.grammar().final_symbol(), std::move(rules));
  return make_simple(g, a.inputs(), a.outputs().set_union(b.outputs()));
}

}  // namespace lgr
