#include <doctest.h>

#include <random>

#include "lgr/core.hpp"
#include "support/catalog.hpp"

using namespace lgr;
using cat::S;

TEST_SUITE_BEGIN("core");

TEST_CASE("apply_step basic shapes") {
  Grammar g = cat::g0();
  Word ag{S("a"), S("g")};
  Word acg = apply_step(g, ag, {ins(S("g"), S("c")), 2});
  CHECK(acg == Word{S("a"), S("c"), S("g")});
  Word cg = apply_step(g, acg, {del(S("c"), S("a")), 2});
  CHECK(cg == Word{S("c"), S("g")});

  // patient is checked before the actor
  CHECK_THROWS_WITH_AS(apply_step(g, cg, {del(S("c"), S("a")), 2}),
                       doctest::Contains("patient mismatch"), StepError);
  CHECK_THROWS_WITH_AS(apply_step(g, ag, {del(S("c"), S("a")), 2}),
                       doctest::Contains("actor mismatch"), StepError);
  CHECK_THROWS_WITH_AS(apply_step(g, ag, {ins(S("g"), S("c")), 5}),
                       doctest::Contains("position out of range"), StepError);
  CHECK_THROWS_WITH_AS(apply_step(g, ag, {ins(S("g"), S("d")), 2}),
                       doctest::Contains("rule not in grammar"), StepError);
}

TEST_CASE("apply_step length change") {
  Grammar g = cat::g0_selfdel();
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto rc = cat::random_case(rng, 4);
    auto words = replay(rc.derivation);
    for (size_t k = 0; k < rc.derivation.steps.size(); ++k) {
      int delta = static_cast<int>(words[k + 1].size()) -
                  static_cast<int>(words[k].size());
      CHECK(delta == (rc.derivation.steps[k].rule.kind == RuleKind::Insertion
                          ? 1
                          : -1));
    }
  }
}

TEST_CASE("enabled_steps on the running example") {
  Grammar g = cat::g0();
  auto steps = enabled_steps(g, {S("a"), S("g")});
  REQUIRE(steps.size() == 1);
  CHECK(steps[0] == Step{ins(S("g"), S("c")), 2});

  auto steps2 = enabled_steps(g, {S("a"), S("c"), S("g")});
  REQUIRE(steps2.size() == 3);
  CHECK(steps2[0] == Step{ins(S("c"), S("c")), 2});
  CHECK(steps2[1] == Step{del(S("c"), S("a")), 2});
  CHECK(steps2[2] == Step{ins(S("g"), S("c")), 3});

  CHECK(enabled_steps(g, {}).empty());
}

TEST_CASE("enabled_steps sound and complete") {
  // exhaustive: a step is enabled iff apply_step succeeds
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto rc = cat::random_case(rng, 3);
    Word w = replay(rc.derivation).back();
    auto enabled = enabled_steps(rc.grammar, w);
    std::set<Step> enabled_set(enabled.begin(), enabled.end());
    for (const Rule& r : rc.grammar.rules()) {
      for (int p = 1; p <= static_cast<int>(w.size()); ++p) {
        Step s{r, p};
        bool ok = true;
        try {
          apply_step(rc.grammar, w, s);
        } catch (const StepError&) {
          ok = false;
        }
        CHECK(ok == (enabled_set.count(s) > 0));
      }
    }
  }
}

TEST_CASE("stutter canonical") {
  CHECK(stutter_canonical({S("a"), S("a"), S("b"), S("b"), S("a")}) ==
        Word{S("a"), S("b"), S("a")});
  CHECK(stutter_canonical({}) == Word{});
  CHECK(stutter_canonical({S("a"), S("b"), S("a")}) ==
        Word{S("a"), S("b"), S("a")});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> len(0, 8), pick(0, 1);
  for (int i = 0; i < 200; ++i) {
    Word w;
    for (int k = len(rng); k > 0; --k)
      w.push_back(pick(rng) ? S("a") : S("b"));
    Word c = stutter_canonical(w);
    CHECK(c.size() <= w.size());
    CHECK(stutter_canonical(c) == c);  // idempotent
    CHECK(is_subword(c, w));
  }
}

TEST_CASE("subword order") {
  Word ab{S("a"), S("b")}, acb{S("a"), S("c"), S("b")}, ba{S("b"), S("a")};
  CHECK(is_subword(ab, acb));
  CHECK_FALSE(is_subword(ab, acb, SymbolSet{S("d")}));
  CHECK(is_subword(ab, acb, SymbolSet{S("c")}));
  CHECK_FALSE(is_subword(ba, ab));

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> len(0, 6), pick(0, 2);
  auto rand_word = [&]() {
    Word w;
    for (int k = len(rng); k > 0; --k)
      w.push_back(S(pick(rng) == 0 ? "a" : pick(rng) == 1 ? "b" : "c"));
    return w;
  };
  for (int i = 0; i < 300; ++i) {
    Word x = rand_word(), y = rand_word(), z = rand_word();
    CHECK(is_subword(x, x));  // reflexive
    if (is_subword(x, y) && is_subword(y, z)) CHECK(is_subword(x, z));
    if (is_subword(x, y) && is_subword(y, x)) CHECK(x == y);  // antisymmetry
    // monotone in the allowed set
    if (is_subword(x, y, SymbolSet{S("a")}))
      CHECK(is_subword(x, y, SymbolSet{S("a"), S("b")}));
  }
}

TEST_CASE("closure under adjunction") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> len(0, 3);
  for (int i = 0; i < 200; ++i) {
    auto rc = cat::random_case(rng, 3);
    if (rc.derivation.steps.empty()) continue;
    Word u = rc.derivation.initial;
    Step s = rc.derivation.steps.front();
    Word result = apply_step(rc.grammar, u, s);
    auto names = rc.grammar.alphabet().sorted_names();
    std::uniform_int_distribution<size_t> pick(0, names.size() - 1);
    Word v, w;
    for (int k = len(rng); k > 0; --k) v.push_back(S(names[pick(rng)].c_str()));
    for (int k = len(rng); k > 0; --k) w.push_back(S(names[pick(rng)].c_str()));
    Word framed = v;
    framed.insert(framed.end(), u.begin(), u.end());
    framed.insert(framed.end(), w.begin(), w.end());
    Step shifted{s.rule, s.position + static_cast<int>(v.size())};
    Word framed_result = apply_step(rc.grammar, framed, shifted);
    Word expected = v;
    expected.insert(expected.end(), result.begin(), result.end());
    expected.insert(expected.end(), w.begin(), w.end());
    CHECK(framed_result == expected);
  }
}

TEST_CASE("grammar invariants") {
  Symbol g = S("g"), a = S("a");
  CHECK_THROWS_AS(make_grammar(g, {ins(g, g)}), DomainError);
  CHECK_THROWS_AS(make_grammar(g, {del(a, g)}), DomainError);
  CHECK(cat::g0().acyclic() == false);  // c -> c is a self-loop
  Grammar chain = make_grammar(g, {ins(g, S("b")), del(S("b"), a)});
  CHECK(chain.acyclic());
}

TEST_SUITE_END();
