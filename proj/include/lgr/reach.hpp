#pragma once

#include <unordered_map>

#include "lgr/derivations.hpp"

namespace lgr {

struct SearchBounds {
  int max_depth = 0;
  int max_word = -1;  // -1 selects |from| + |to| + 2*|rules|
  bool exact = false;
  uint64_t budget = 50'000'000;
};

struct SearchStats {
  uint64_t nodes_expanded = 0;
  uint64_t max_frontier = 0;
  uint64_t dedup_hits = 0;
};

enum class Verdict { Found, NotFound, BudgetExceeded };

struct SearchResult {
  Verdict verdict = Verdict::NotFound;
  std::optional<Derivation> derivation;
  SearchStats stats;
};

int default_max_word(const Grammar& g, const Word& from, const Word& to);

/// Decides whether `to` is reachable from `from` in exactly (exact mode)
/// or at most max_depth steps, every intermediate word at most max_word
/// long. Deterministic: the witness is the lexicographically least
/// derivation in enabled_steps order.
SearchResult bounded_reach(const Grammar& g, const Word& from, const Word& to,
                           const SearchBounds& b);

/// The brute-force oracle: plain breadth-first enumeration with a visited
/// map and no pruning of any kind. Returns every word reachable within the
/// bounds together with its minimal step count.
std::unordered_map<Word, int, WordHash> oracle_enumerate(
    const Grammar& g, const Word& from, const SearchBounds& b,
    SearchStats* stats = nullptr);

/// Reachability restricted to derivations whose prefixes stay greedy as
/// far as that is decidable online (leftmost and purity exactly, eagerness
/// at letter deaths). Complete in <= mode because every derivation has a
/// greedy equivalent of no greater length; rejects exact mode.
SearchResult greedy_reach(const Grammar& g, const Word& from, const Word& to,
                          const SearchBounds& b);

enum class SearchMode { Exhaustive, Greedy };

/// Admissibility bound for searches directed at a fixed target: the step
/// parity and length gap must fit the remaining depth, and letters of
/// symbols no rule deletes must embed, in order, into the target.
class TargetFilter {
 public:
  TargetFilter(const Grammar& g, const Word& to, int max_depth,
               bool exact = false);
  bool admissible(const Word& w, int depth) const;

 private:
  SymbolSet permanent_;
  Word target_perm_;
  int target_len_ = 0;
  int max_depth_ = 0;
  bool exact_ = false;
};

/// Words reachable within the bounds with their minimal detected depth;
/// Greedy mode enumerates along greedy-prefix derivations only.
std::unordered_map<Word, int, WordHash> reachable_words(
    const Grammar& g, const Word& from, int max_depth, int max_word,
    SearchMode mode, uint64_t budget = 50'000'000, bool* exceeded = nullptr);

}  // namespace lgr
