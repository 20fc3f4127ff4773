#include "lgr/closure.hpp"

#include <algorithm>

namespace lgr {

AnchoredTransformer::AnchoredTransformer(Transformer base, Symbol b1,
                                         Symbol b2)
    : base_(std::move(base)), b1_(b1), b2_(b2) {
  if (b1_ == b2_) throw DomainError("anchors must be distinct");
  if (!base_.temps().contains(b1_) || !base_.temps().contains(b2_))
    throw DomainError("anchors must be temporary symbols");
}

Renaming::Renaming(const SymbolSet& from_c, const SymbolSet& to_a,
                   std::vector<std::pair<Symbol, Symbol>> pairs)
    : pairs_(std::move(pairs)) {
  if (from_c.size() != to_a.size())
    throw DomainError("renaming requires |C| = |A|");
  SymbolSet lhs, rhs;
  for (const auto& [c, a] : pairs_) {
    lhs.insert(c);
    rhs.insert(a);
  }
  if (!(lhs == from_c) || !(rhs == to_a) || pairs_.size() != from_c.size())
    throw DomainError("renaming must be a bijection from C onto A");
}

Symbol Renaming::apply(Symbol c) const {
  for (const auto& [from, to] : pairs_)
    if (from == c) return to;
  throw DomainError("symbol not in renaming domain: " + c.name());
}

Symbol Renaming::inverse(Symbol a) const {
  for (const auto& [from, to] : pairs_)
    if (to == a) return from;
  throw DomainError("symbol not in renaming range: " + a.name());
}

Word Renaming::apply_word(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(apply(s));
  return out;
}

BoundedRelation anchored_relation(const AnchoredTransformer& at,
                                  const RelBounds& b, SearchMode mode) {
  BoundedRelation rel;
  rel.bounds = b;
  const Grammar& g = at.grammar();
  Symbol fin = g.final_symbol();
  for (const Word& u : words_over(at.base().inputs(), b.max_input)) {
    Word start{at.b1()};
    start.insert(start.end(), u.begin(), u.end());
    start.push_back(fin);
    auto reached =
        reachable_words(g, start, b.max_depth, b.max_word, mode);
    for (const auto& [w, depth] : reached) {
      if (w.size() < 2 || w.front() != at.b2() || w.back() != fin) continue;
      Word v(w.begin() + 1, w.end() - 1);
      if (word_over(v, at.base().outputs())) rel.pairs.emplace(u, std::move(v));
    }
  }
  return rel;
}

std::vector<std::pair<Word, std::vector<Word>>> anchored_images(
    const AnchoredTransformer& at, const RelBounds& b, SearchMode mode) {
  std::vector<std::pair<Word, std::vector<Word>>> out;
  const Grammar& g = at.grammar();
  Symbol fin = g.final_symbol();
  for (const Word& u : words_over(at.base().inputs(), b.max_input)) {
    Word start{at.b1()};
    start.insert(start.end(), u.begin(), u.end());
    start.push_back(fin);
    auto reached =
        reachable_words(g, start, b.max_depth, b.max_word, mode);
    std::vector<Word> words;
    words.reserve(reached.size());
    for (const auto& [w, depth] : reached) words.push_back(w);
    std::sort(words.begin(), words.end());
    out.emplace_back(u, std::move(words));
  }
  return out;
}

AnchoredTransformer build_renamer(const SymbolSet& c, const SymbolSet& a,
                                  const Renaming& h, Symbol b2, Symbol b1,
                                  Symbol final_symbol) {
  if (c.size() != a.size()) throw DomainError("renamer requires |C| = |A|");
  if (c.contains(b1) || c.contains(b2) || a.contains(b1) || a.contains(b2))
    throw DomainError("renamer anchors must be fresh for A and C");
  std::vector<Rule> rules;
  for (Symbol ai : a) {
    rules.push_back(ins(final_symbol, ai));
    for (Symbol aj : a) rules.push_back(ins(ai, aj));
    rules.push_back(ins(ai, b1));
    rules.push_back(del(ai, h.inverse(ai)));
  }
  rules.push_back(del(b1, b2));
  SymbolSet alphabet = c.set_union(a);
  alphabet.insert(b1);
  alphabet.insert(b2);
  Grammar g(alphabet, final_symbol, std::move(rules));
  Transformer t = check_transformer(g, c, SymbolSet{b1, b2}, a);
  return AnchoredTransformer(std::move(t), b2, b1);
}

namespace {

std::map<Symbol, Symbol> mint_copies(const SymbolSet& over,
                                     const std::string& suffix,
                                     const SymbolSet& universe) {
  std::map<Symbol, Symbol> out;
  for (Symbol s : over) {
    Symbol copy = Symbol::intern(s.name() + suffix);
    if (universe.contains(copy))
      throw DomainError("freshness violation: '" + copy.name() +
                        "' already in use");
    out[s] = copy;
  }
  return out;
}

SymbolSet image(const std::map<Symbol, Symbol>& m, const SymbolSet& over) {
  std::vector<Symbol> syms;
  for (Symbol s : over) syms.push_back(m.at(s));
  return SymbolSet(std::move(syms));
}

}  // namespace

WrappedTransformer wrap(const AnchoredTransformer& g, Symbol sq1, Symbol sq2) {
  const Grammar& core = g.grammar();
  Symbol fin = core.final_symbol();
  const SymbolSet& a = g.base().inputs();
  Symbol b1 = g.b1();
  Symbol b2 = g.b2();
  SymbolSet d = g.base().temps().set_union(g.base().outputs());

  SymbolSet universe = core.alphabet();
  universe.insert(fin);
  if (sq1 == sq2 || universe.contains(sq1) || universe.contains(sq2))
    throw DomainError("freshness violation: wrapping anchors must be fresh");
  universe.insert(sq1);
  universe.insert(sq2);
  std::map<Symbol, Symbol> prime = mint_copies(core.alphabet(), "'", universe);

  SymbolSet a_side = a;  // A plus the first anchor: protected letters
  a_side.insert(b1);
  for (const Rule& r : core.rules()) {
    if (r.actor == b1 || (r.kind == RuleKind::Insertion && r.patient == b1))
      throw DomainError(
          "wrap requires an inactive, never-inserted first anchor");
  }

  std::vector<std::pair<Rule, WrapRuleClass>> classified;
  for (const Rule& r : core.rules()) {
    if (r.kind == RuleKind::Deletion && a_side.contains(r.patient)) {
      if (r.actor == fin)
        throw DomainError("wrap cannot reroute a deletion performed by g: " +
                          to_string(r));
      classified.push_back(
          {del(prime.at(r.actor), r.patient), WrapRuleClass::Replace});
    } else {
      classified.push_back({r, WrapRuleClass::Kept});
    }
  }
  // the first anchor is inactive by precondition, so its mirror rule would
  // only break the wrapper's own typing
  for (Symbol x : d)
    if (x != b1)
      classified.push_back({ins(x, prime.at(x)), WrapRuleClass::Mirror});
  SymbolSet d_primed_free;  // D' without the primed first anchor
  for (Symbol x : d)
    if (x != b1) d_primed_free.insert(prime.at(x));
  for (Symbol x : d_primed_free)
    for (Symbol y : d_primed_free)
      classified.push_back({del(x, y), WrapRuleClass::Clean});
  for (Symbol x : a) classified.push_back({del(sq2, prime.at(x)),
                                           WrapRuleClass::Clean});
  classified.push_back({del(sq2, prime.at(b1)), WrapRuleClass::Clean});
  classified.push_back({del(sq2, sq1), WrapRuleClass::BRule});
  for (Symbol x : d_primed_free)
    classified.push_back({ins(x, sq2), WrapRuleClass::BRule});

  // typing: inputs gain the primed copies of the input side, the second
  // anchor and all free primed working symbols become outputs
  SymbolSet inputs = a.set_union(image(prime, a));
  inputs.insert(b1);
  inputs.insert(prime.at(b1));
  SymbolSet temps{sq1, sq2};
  temps = temps.set_union(g.base().temps().set_minus(SymbolSet{b1, b2}));
  SymbolSet outputs = g.base().outputs();
  outputs.insert(b2);
  for (Symbol x : core.alphabet())
    if (!a.contains(x) && x != b1) outputs.insert(prime.at(x));

  std::vector<Rule> rules;
  rules.reserve(classified.size());
  for (const auto& [r, cls] : classified) rules.push_back(r);
  SymbolSet alphabet = inputs.set_union(temps).set_union(outputs);
  Grammar wrapped(alphabet, fin, std::move(rules));
  Transformer t = check_transformer(wrapped, inputs, temps, outputs);
  return WrappedTransformer{AnchoredTransformer(std::move(t), sq1, sq2), g,
                            sq1, sq2, std::move(prime),
                            std::move(classified)};
}

Grammar glue(const WrappedTransformer& fg, const WrappedTransformer& fr) {
  if (fg.at.grammar().final_symbol() != fr.at.grammar().final_symbol())
    throw DomainError("glue requires the same final symbol");
  if (!fr.at.grammar().alphabet().subset_of(fg.at.grammar().alphabet()))
    throw DomainError("symbol-universe mismatch: the renamer wrap must not "
                      "use new symbols");
  std::vector<Rule> rules = fg.at.grammar().rules();
  rules.insert(rules.end(), fr.at.grammar().rules().begin(),
               fr.at.grammar().rules().end());
  return Grammar(fg.at.grammar().alphabet(),
                 fg.at.grammar().final_symbol(), std::move(rules));
}

HPrimeParts extend_hprime(const Grammar& h, const SymbolSet& a,
                          const SymbolSet& a_prime, Symbol b1,
                          Symbol b1_prime, Symbol sq1, Symbol sq2) {
  SymbolSet universe = h.alphabet();
  universe.insert(h.final_symbol());
  SymbolSet dotted_over = a;
  dotted_over.insert(sq1);
  dotted_over.insert(sq2);
  std::map<Symbol, Symbol> dot = mint_copies(dotted_over, ".d", universe);
  Symbol sq1_dot = dot.at(sq1);
  Symbol sq2_dot = dot.at(sq2);

  std::vector<Rule> rules = h.rules();
  rules.push_back(del(sq2_dot, sq1_dot));
  rules.push_back(ins(sq1, sq2_dot));
  for (Symbol x : a) rules.push_back(del(x, dot.at(x)));

  SymbolSet inputs = image(dot, a);
  SymbolSet outputs = a.set_union(a_prime);
  outputs.insert(sq1);
  outputs.insert(b1);
  outputs.insert(b1_prime);
  SymbolSet alphabet = h.alphabet();
  alphabet.insert(sq1_dot);
  alphabet.insert(sq2_dot);
  alphabet = alphabet.set_union(inputs);
  SymbolSet temps = alphabet.set_minus(inputs).set_minus(outputs);
  Grammar extended(alphabet, h.final_symbol(), std::move(rules));
  Transformer t = check_transformer(extended, inputs, temps, outputs);
  return HPrimeParts{AnchoredTransformer(std::move(t), sq1_dot, sq2_dot),
                     sq1_dot, sq2_dot, std::move(dot)};
}

Finishers build_finishers(const SymbolSet& a, const SymbolSet& a_prime,
                          Symbol b1, Symbol b1_prime, Symbol sq1,
                          Symbol sq2_dot, Symbol final_symbol) {
  SymbolSet in1 = a.set_union(a_prime);
  in1.insert(b1);
  in1.insert(b1_prime);
  in1.insert(sq1);
  SymbolSet universe = in1;
  universe.insert(sq2_dot);
  universe.insert(final_symbol);
  std::map<Symbol, Symbol> ddot = mint_copies(in1, ".dd", universe);
  for (const auto& [orig, copy] : ddot) universe.insert(copy);
  Symbol o1 = fresh_symbol("o1", universe);
  universe.insert(o1);
  Symbol o2 = fresh_symbol("o2", universe);
  universe.insert(o2);

  SymbolSet dd_a = image(ddot, a);
  SymbolSet dd_a_prime = image(ddot, a_prime);
  Symbol dd_b1 = ddot.at(b1);
  Symbol dd_b1_prime = ddot.at(b1_prime);
  Symbol dd_sq1 = ddot.at(sq1);
  SymbolSet dd_prime_side = dd_a_prime;  // the primed block plus b1's copy
  dd_prime_side.insert(dd_b1_prime);

  // T1: double-dot the word while checking its sq1.alpha.b1.u shape; the
  // chain from g fixes the order in which originals can be consumed.
  std::vector<Rule> p1;
  for (Symbol l : in1) p1.push_back(del(ddot.at(l), l));
  for (Symbol x : dd_a) {
    p1.push_back(ins(final_symbol, x));
    for (Symbol y : dd_a) p1.push_back(ins(x, y));
    p1.push_back(ins(x, dd_b1));
  }
  for (Symbol x : dd_prime_side) {
    p1.push_back(ins(dd_b1, x));
    for (Symbol y : dd_prime_side) p1.push_back(ins(x, y));
    p1.push_back(ins(x, dd_sq1));
  }
  p1.push_back(ins(dd_sq1, o1));
  p1.push_back(del(o1, sq2_dot));

  SymbolSet out1 = dd_a.set_union(dd_prime_side);
  out1.insert(dd_b1);
  out1.insert(dd_sq1);
  SymbolSet temps1{sq2_dot, o1};
  SymbolSet alpha1 = in1.set_union(out1).set_union(temps1);
  Grammar g1(alpha1, final_symbol, std::move(p1));
  AnchoredTransformer t1(check_transformer(g1, in1, temps1, out1), sq2_dot,
                         o1);

  // T2: a fresh double-dotted A chain absorbs the junk and the matching
  // originals, so the output covers the largest A-part as a subword.
  std::vector<Rule> p2;
  SymbolSet in2 = dd_prime_side;
  in2.insert(dd_b1);
  in2.insert(dd_sq1);
  for (Symbol x : dd_a) {
    p2.push_back(ins(final_symbol, x));
    for (Symbol y : dd_a) p2.push_back(ins(x, y));
    p2.push_back(ins(x, o2));
    p2.push_back(del(x, x));
    for (Symbol l : in2) p2.push_back(del(x, l));
  }
  p2.push_back(del(o2, o1));
  SymbolSet temps2{o1, o2};
  SymbolSet alpha2 = in2.set_union(dd_a).set_union(temps2);
  Grammar g2(alpha2, final_symbol, std::move(p2));
  AnchoredTransformer t2(check_transformer(g2, in2, temps2, dd_a), o1, o2);

  return Finishers{std::move(t1), std::move(t2), std::move(ddot), o1, o2};
}

namespace {

// bounded check of S ⊇ (subword_A . S . subword_C); with relax_input false
// only the output side is extended (the theorem's S = S . subword_C form)
bool precheck_closure(const WordRel& s, const SymbolSet& c, int out_cap,
                      bool relax_input) {
  std::vector<Word> outputs = words_over(c, out_cap);
  for (const auto& [u, z] : s) {
    for (const Word& v : outputs) {
      if (!is_subword(z, v, c)) continue;
      if (!relax_input) {
        if (!s.count({u, v})) return false;
      } else {
        int n = static_cast<int>(u.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          Word x;
          for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) x.push_back(u[i]);
          if (!s.count({x, v})) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

ClosurePipeline transitive_closure(const AnchoredTransformer& at,
                                   const Renaming& h,
                                   const RelBounds& precheck_bounds,
                                   bool skip_precheck, bool force) {
  const SymbolSet& a = at.base().inputs();
  const SymbolSet& c = at.base().outputs();
  Symbol fin = at.grammar().final_symbol();
  Symbol b1 = at.b1();

  bool pre_sc = false, pre_ac = false, pre_ran = false;
  if (!skip_precheck) {
    pre_ran = true;
    WordRel s = anchored_relation(at, precheck_bounds).pairs;
    int out_cap = std::min(precheck_bounds.max_word - 2,
                           precheck_bounds.max_input + 2);
    pre_sc = precheck_closure(s, c, out_cap, false);
    pre_ac = precheck_closure(s, c, out_cap, true);
    if (!pre_sc && !force)
      throw DomainError(
          "bounded precondition S = S . subword_C fails at the given "
          "bounds; pass force to build anyway");
  }

  AnchoredTransformer renamer = build_renamer(c, a, h, at.b2(), b1, fin);

  SymbolSet universe = at.grammar().alphabet();
  universe.insert(fin);
  Symbol sq1 = fresh_symbol("q1", universe);
  universe.insert(sq1);
  Symbol sq2 = fresh_symbol("q2", universe);
  universe.insert(sq2);

  WrappedTransformer fg = wrap(at, sq1, sq2);
  WrappedTransformer fr = wrap(renamer, sq2, sq1);
  Grammar glued = glue(fg, fr);

  SymbolSet a_prime = image(fg.prime, a);
  Symbol b1_prime = fg.prime.at(b1);
  HPrimeParts hp = extend_hprime(glued, a, a_prime, b1, b1_prime, sq1, sq2);
  Finishers fin_parts =
      build_finishers(a, a_prime, b1, b1_prime, sq1, hp.sq2_dot, fin);

  // union of H', T1 and T2, typed dotted A |- double-dotted A
  std::vector<Rule> rules = hp.at.grammar().rules();
  for (const Rule& r : fin_parts.t1.grammar().rules()) rules.push_back(r);
  for (const Rule& r : fin_parts.t2.grammar().rules()) rules.push_back(r);
  SymbolSet alphabet = hp.at.grammar()
                           .alphabet()
                           .set_union(fin_parts.t1.grammar().alphabet())
                           .set_union(fin_parts.t2.grammar().alphabet());
  SymbolSet inputs;
  for (Symbol x : a) inputs.insert(hp.dot.at(x));
  SymbolSet outputs;
  for (Symbol x : a) outputs.insert(fin_parts.ddot.at(x));
  SymbolSet temps = alphabet.set_minus(inputs).set_minus(outputs);
  Grammar raw_grammar(alphabet, fin, std::move(rules));
  AnchoredTransformer gplus_raw(
      check_transformer(raw_grammar, inputs, temps, outputs), hp.sq1_dot,
      fin_parts.o2);

  // rename the interface back onto A |- C; the original A and C symbols
  // stay inside as internal copies
  std::map<Symbol, Symbol> back;
  SymbolSet used = alphabet;
  used.insert(fin);
  for (Symbol x : a) {
    Symbol internal = fresh_symbol(x.name() + ".t", used);
    used.insert(internal);
    back[x] = internal;
  }
  for (Symbol x : c) {
    Symbol internal = fresh_symbol(x.name() + ".t", used);
    used.insert(internal);
    back[x] = internal;
  }
  for (Symbol x : a) {
    back[hp.dot.at(x)] = x;
    back[fin_parts.ddot.at(x)] = h.inverse(x);
  }
  AnchoredTransformer gplus(
      relabel(gplus_raw.base(), back),
      gplus_raw.b1(), gplus_raw.b2());

  ClosurePipeline pipe{at,
                       h,
                       std::move(renamer),
                       std::move(fg),
                       std::move(fr),
                       std::move(glued),
                       std::move(hp),
                       std::move(fin_parts),
                       std::move(gplus_raw),
                       std::move(gplus),
                       std::move(back),
                       pre_ran,
                       pre_sc,
                       pre_ac,
                       precheck_bounds,
                       {}};
  pipe.metadata.push_back(
      "closure: primed/dotted copies minted with ', .d, .dd suffixes");
  pipe.metadata.push_back(
      "precheck bounds L=" + std::to_string(precheck_bounds.max_input) +
      " M=" + std::to_string(precheck_bounds.max_word) +
      " D=" + std::to_string(precheck_bounds.max_depth) +
      (pre_ran ? std::string(" sc=") + (pre_sc ? "pass" : "fail") + " ac=" +
                     (pre_ac ? "pass" : "fail")
               : std::string(" skipped")));
  return pipe;
}

Derivation mimic_wrapped(const WrappedTransformer& fg, const Derivation& core,
                         const Word& alpha) {
  const AnchoredTransformer& inner = fg.inner;
  const Grammar& p = inner.grammar();
  Symbol fin = p.final_symbol();
  Symbol b1 = inner.b1();
  Symbol b2 = inner.b2();
  SymbolSet a_side = inner.base().inputs();
  a_side.insert(b1);
  SymbolSet alpha_ok;
  for (Symbol x : inner.base().inputs()) alpha_ok.insert(fg.prime.at(x));
  alpha_ok.insert(fg.prime.at(b1));
  if (!word_over(alpha, alpha_ok))
    throw DomainError("alpha must range over the primed input side");

  auto words = replay(core);
  const Word& start = words.front();
  const Word& finish = words.back();
  if (start.empty() || start.back() != fin || finish.size() < 2 ||
      finish.back() != fin)
    throw DomainError("core derivation must run between ...g words");
  Word v_final(finish.begin(), finish.end() - 1);
  SymbolSet out_side = inner.base().outputs();
  out_side.insert(b2);
  if (!word_over(v_final, out_side))
    throw DomainError("core derivation must end in a (C+b2)+ word");

  int offset = 1 + static_cast<int>(alpha.size());
  Word initial{fg.sq1};
  initial.insert(initial.end(), alpha.begin(), alpha.end());
  initial.insert(initial.end(), start.begin(), start.end());

  std::vector<Step> steps;
  bool have_gamma = false;
  Symbol gamma;
  for (size_t k = 0; k < core.steps.size(); ++k) {
    const Word& w = words[k];
    const Step& s = core.steps[k];
    int v1len = 0;
    while (v1len < static_cast<int>(w.size()) && a_side.contains(w[v1len]))
      ++v1len;
    if (s.rule.kind == RuleKind::Deletion &&
        a_side.contains(s.rule.patient)) {
      if (s.position != v1len + 1)
        throw Error("mimicry lost track of the A-side boundary");
      Symbol d = s.rule.actor;
      Symbol dp = fg.prime.at(d);
      if (dp == fg.prime.at(b1))
        throw DomainError("unsupported: the first anchor erases letters");
      int dpos = offset + v1len + (have_gamma ? 1 : 0) + 1;
      steps.push_back({ins(d, dp), dpos});
      if (have_gamma) {
        steps.push_back({del(dp, gamma), offset + v1len + 2});
      }
      steps.push_back({del(dp, s.rule.patient), offset + v1len + 1});
      gamma = dp;
      have_gamma = true;
    } else {
      if (s.position <= v1len)
        throw DomainError("unsupported: activity inside the A-side prefix");
      int shift = (have_gamma && s.position > v1len) ? 1 : 0;
      steps.push_back({s.rule, s.position + offset + shift});
    }
  }
  // finish: mint beta from the head of v, clean up, swap the anchors
  Symbol head = v_final.front();
  Symbol beta = fg.prime.at(head);
  int pos_head = offset + (have_gamma ? 1 : 0) + 1;
  steps.push_back({ins(head, beta), pos_head});
  if (have_gamma) steps.push_back({del(beta, gamma), offset + 2});
  steps.push_back({ins(beta, fg.sq2), offset + 1});
  for (int j = static_cast<int>(alpha.size()); j >= 1; --j)
    steps.push_back({del(fg.sq2, alpha[j - 1]), j + 2});
  steps.push_back({del(fg.sq2, fg.sq1), 2});
  return Derivation{fg.at.grammar(), std::move(initial), std::move(steps)};
}

namespace {

struct ModeClasses {
  SymbolSet a_side, a_side_primed, d_free, d_free_primed;
  Symbol sq1, sq2;
};

ModeClasses mode_classes(const WrappedTransformer& fg) {
  const AnchoredTransformer& inner = fg.inner;
  ModeClasses mc;
  mc.sq1 = fg.sq1;
  mc.sq2 = fg.sq2;
  mc.a_side = inner.base().inputs();
  mc.a_side.insert(inner.b1());
  for (Symbol x : mc.a_side) mc.a_side_primed.insert(fg.prime.at(x));
  SymbolSet d = inner.base().temps().set_union(inner.base().outputs());
  for (Symbol x : d) {
    if (x == inner.b1()) continue;
    mc.d_free.insert(x);
    mc.d_free_primed.insert(fg.prime.at(x));
  }
  return mc;
}

bool match_mode(const Word& w, Symbol head, const SymbolSet& c1, Symbol mid,
                const SymbolSet& c3, const SymbolSet& c4, const SymbolSet& c5,
                Symbol fin) {
  if (w.size() < 2 || w.front() != head || w.back() != fin) return false;
  size_t i = 1, end = w.size() - 1;
  int n1 = 0, n2 = 0, n3 = 0, n4 = 0, n5 = 0;
  while (i < end && c1.contains(w[i])) ++i, ++n1;
  while (i < end && w[i] == mid) ++i, ++n2;
  while (i < end && c3.contains(w[i])) ++i, ++n3;
  while (i < end && c4.contains(w[i])) ++i, ++n4;
  while (i < end && c5.contains(w[i])) ++i, ++n5;
  if (i != end) return false;
  if (n2 > 1) return false;
  if (n1 == 0 && n2 == 0) return false;
  if (n2 > 0 && n3 != 0) return false;
  if (n3 == 0 && n4 == 0) return false;
  if (n4 > 0 && n5 == 0) return false;
  return true;
}

}  // namespace

bool in_mode_ac(const Word& w, const WrappedTransformer& fg) {
  ModeClasses mc = mode_classes(fg);
  return match_mode(w, mc.sq1, mc.a_side_primed, mc.sq2, mc.a_side,
                    mc.d_free_primed, mc.d_free,
                    fg.at.grammar().final_symbol());
}

bool in_mode_ca(const Word& w, const WrappedTransformer& fg) {
  ModeClasses mc = mode_classes(fg);
  return match_mode(w, mc.sq2, mc.d_free_primed, mc.sq1, mc.d_free,
                    mc.a_side_primed, mc.a_side,
                    fg.at.grammar().final_symbol());
}

}  // namespace lgr
