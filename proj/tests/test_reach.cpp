#include <doctest.h>

#include "lgr/reach.hpp"
#include "support/catalog.hpp"
#include "support/oracle.hpp"

using namespace lgr;
using cat::S;

TEST_SUITE_BEGIN("reach");

TEST_CASE("oracle_enumerate on the running example") {
  // frozen from the hand expansion: a.g, a.c.g at 1, c.g and a.c.c.g at 2
  SearchBounds b;
  b.max_depth = 2;
  b.max_word = 4;
  auto seen = oracle_enumerate(cat::g0(), {S("a"), S("g")}, b);
  REQUIRE(seen.size() == 4);
  CHECK(seen.at({S("a"), S("g")}) == 0);
  CHECK(seen.at({S("a"), S("c"), S("g")}) == 1);
  CHECK(seen.at({S("c"), S("g")}) == 2);
  CHECK(seen.at({S("a"), S("c"), S("c"), S("g")}) == 2);

  b.max_depth = 0;
  CHECK(oracle_enumerate(cat::g0(), {S("a"), S("g")}, b).size() == 1);

  Grammar empty = make_grammar(S("g"), {}, SymbolSet{S("a")});
  b.max_depth = 5;
  CHECK(oracle_enumerate(empty, {S("a"), S("g")}, b).size() == 1);
}

TEST_CASE("oracle matches the independent layer enumeration") {
  for (const Grammar& g : cat::search_catalog()) {
    Word from;
    for (const auto& n : g.alphabet().sorted_names()) {
      from.push_back(S(n.c_str()));
      if (from.size() >= 2) break;
    }
    from.push_back(g.final_symbol());
    auto lay = test_oracle::layers(g, from, 6, 7);
    SearchBounds b;
    b.max_depth = 6;
    b.max_word = 7;
    auto seen = oracle_enumerate(g, from, b);
    for (const auto& [w, steps] : seen)
      CHECK(test_oracle::min_steps(lay, w) == steps);
    std::set<Word> all;
    for (const auto& layer : lay) all.insert(layer.begin(), layer.end());
    CHECK(all.size() == seen.size());
  }
}

TEST_CASE("bounded_reach spec examples") {
  Grammar g = cat::g0();
  Word from{S("a"), S("g")}, to{S("c"), S("g")};
  SearchBounds b;
  b.max_depth = 2;
  b.max_word = 5;
  auto r = bounded_reach(g, from, to, b);
  REQUIRE(r.verdict == Verdict::Found);
  CHECK(r.derivation->steps.size() == 2);
  CHECK(replay(*r.derivation).back() == to);

  b.exact = true;
  b.max_depth = 3;
  b.max_word = 4;
  CHECK(bounded_reach(g, from, to, b).verdict == Verdict::NotFound);

  b.exact = false;
  b.max_depth = 0;
  CHECK(bounded_reach(g, from, from, b).verdict == Verdict::Found);
  CHECK(bounded_reach(g, from, from, b).derivation->steps.empty());
}

TEST_CASE("reach agreement with the oracle, both modes") {
  int checks = 0;
  for (const Grammar& g : cat::search_catalog()) {
    std::vector<Word> starts;
    auto names = g.alphabet().sorted_names();
    Word w1{S(names[0].c_str()), g.final_symbol()};
    starts.push_back(w1);
    if (names.size() >= 2) {
      starts.push_back({S(names[0].c_str()), S(names[1].c_str()),
                        g.final_symbol()});
    }
    for (const Word& from : starts) {
      auto lay = test_oracle::layers(g, from, 6, 6);
      std::set<Word> all;
      for (const auto& layer : lay) all.insert(layer.begin(), layer.end());
      for (const Word& to : all) {
        for (int d = 0; d <= 6; ++d) {
          SearchBounds b;
          b.max_depth = d;
          b.max_word = 6;
          b.exact = false;
          bool le_expect = false;
          for (int k = 0; k <= d; ++k)
            le_expect |= test_oracle::exact_reachable(lay, to, k);
          auto le = bounded_reach(g, from, to, b);
          CHECK(le.verdict == (le_expect ? Verdict::Found : Verdict::NotFound));
          if (le.derivation) {
            CHECK(replay(*le.derivation).back() == to);
            CHECK(static_cast<int>(le.derivation->steps.size()) <= d);
          }
          b.exact = true;
          auto ex = bounded_reach(g, from, to, b);
          bool ex_expect = test_oracle::exact_reachable(lay, to, d);
          CHECK(ex.verdict == (ex_expect ? Verdict::Found : Verdict::NotFound));
          if (ex.derivation)
            CHECK(static_cast<int>(ex.derivation->steps.size()) == d);

          b.exact = false;
          auto gr = greedy_reach(g, from, to, b);
          CHECK(gr.verdict == le.verdict);
          if (gr.derivation) {
            CHECK(replay(*gr.derivation).back() == to);
            CHECK(classify(*gr.derivation).pure);
            CHECK(classify(*gr.derivation).leftmost);
          }
          checks += 3;
        }
      }
    }
  }
  CHECK(checks >= 1000);
}

TEST_CASE("greedy rejects exact mode") {
  SearchBounds b;
  b.exact = true;
  b.max_depth = 1;
  CHECK_THROWS_AS(
      greedy_reach(cat::g0(), {S("a"), S("g")}, {S("g")}, b), DomainError);
}

TEST_CASE("monotonicity in <= mode") {
  Grammar g = cat::g0();
  Word from{S("a"), S("g")}, to{S("c"), S("c"), S("g")};
  std::optional<int> first_found;
  for (int d = 0; d <= 6; ++d) {
    SearchBounds b;
    b.max_depth = d;
    b.max_word = 6;
    auto r = bounded_reach(g, from, to, b);
    if (r.verdict == Verdict::Found && !first_found) first_found = d;
    if (first_found) CHECK(r.verdict == Verdict::Found);
  }
  CHECK(first_found.has_value());
}

TEST_CASE("determinism of found witnesses") {
  Grammar g = cat::g0_selfdel();
  Word from{S("a"), S("a"), S("g")}, to{S("c"), S("g")};
  SearchBounds b;
  b.max_depth = 6;
  b.max_word = 6;
  auto r1 = bounded_reach(g, from, to, b);
  auto r2 = bounded_reach(g, from, to, b);
  REQUIRE(r1.verdict == Verdict::Found);
  CHECK(r1.derivation->steps == r2.derivation->steps);
  auto g1 = greedy_reach(g, from, to, b);
  auto g2 = greedy_reach(g, from, to, b);
  REQUIRE(g1.verdict == Verdict::Found);
  CHECK(g1.derivation->steps == g2.derivation->steps);
}

TEST_CASE("budget exhaustion is a verdict") {
  SearchBounds b;
  b.max_depth = 6;
  b.max_word = 8;
  b.budget = 2;
  auto r = bounded_reach(cat::g0(), {S("a"), S("g")},
                         {S("c"), S("c"), S("g")}, b);
  CHECK(r.verdict == Verdict::BudgetExceeded);
}

TEST_SUITE_END();
