#include "lgr/derivations.hpp"
#include "lgr/reach.hpp"

namespace lgr {

// Mu-minimality by exhaustive enumeration. Any equivalent derivation with a
// strictly smaller measure has length at most n (length dominates the
// lexicographic order), so it suffices to look for (a) a shorter derivation
// between the endpoints, found by iterative deepening, or (b) a length-n
// derivation whose position vector is lexicographically smaller.
MuResult is_mu_minimal(const Derivation& d, uint64_t budget) {
  MuResult res{MuVerdict::Minimal, std::nullopt, 0};
  int n = static_cast<int>(d.steps.size());
  Word target = replay(d).back();
  if (n == 0) return res;

  // (a) minimal length via greedy search, sound and complete in <= mode;
  // the greedy equivalent of a minimal-length derivation is no longer.
  // Width along any length-<=n derivation between the endpoints never
  // exceeds (|u0| + |target| + n) / 2: insertions done so far and deletions
  // still owed both count against n.
  int max_word = (static_cast<int>(d.initial.size() + target.size()) + n) / 2;
  SearchBounds gb;
  gb.max_depth = n;
  gb.max_word = max_word;
  gb.budget = budget;
  SearchResult shortest = greedy_reach(d.grammar, d.initial, target, gb);
  res.nodes_expanded += shortest.stats.nodes_expanded;
  if (shortest.verdict == Verdict::BudgetExceeded) {
    res.verdict = MuVerdict::BudgetExceeded;
    return res;
  }
  if (shortest.verdict != Verdict::Found)
    throw Error("mu-minimality search lost the input derivation's endpoints");
  int shortest_len = static_cast<int>(shortest.derivation->steps.size());

  struct Key {
    Word w;
    int rem;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return WordHash()(k.w) * 1000003u + static_cast<size_t>(k.rem);
    }
  };
  struct Budget {};
  std::unordered_map<Key, bool, KeyHash> memo;
  uint64_t nodes = 0;
  TargetFilter filter(d.grammar, target, n, /*exact=*/true);

  // exact-length feasibility with shared memo
  auto exists = [&](auto&& self, const Word& w, int rem) -> bool {
    if (rem == 0) return w == target;
    if (!filter.admissible(w, n - rem)) return false;
    Key key{w, rem};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (++nodes > budget) throw Budget{};
    bool found = false;
    for (const Step& s : enabled_steps(d.grammar, w)) {
      if (s.rule.kind == RuleKind::Insertion &&
          static_cast<int>(w.size()) >= max_word)
        continue;
      if (self(self, apply_step_unchecked(w, s), rem - 1)) {
        found = true;
        break;
      }
    }
    memo.emplace(std::move(key), found);
    return found;
  };

  auto least = [&](Word w, int rem) {
    std::vector<Step> out;
    while (rem > 0) {
      bool advanced = false;
      for (const Step& s : enabled_steps(d.grammar, w)) {
        Word next = apply_step_unchecked(w, s);
        if (exists(exists, next, rem - 1)) {
          out.push_back(s);
          w = std::move(next);
          advanced = true;
          break;
        }
      }
      if (!advanced) throw Error("mu witness extraction out of sync");
      --rem;
    }
    return out;
  };

  try {
    if (shortest_len < n) {
      // lex-least witness at the minimal length
      int len = 0;
      while (!exists(exists, d.initial, len)) ++len;
      res.verdict = MuVerdict::NotMinimal;
      res.witness = Derivation{d.grammar, d.initial, least(d.initial, len)};
      res.nodes_expanded += nodes;
      return res;
    }

    // (b) walk length-n derivations bounded by d's position vector; the
    // first one found is the least, and equality with d means minimal.
    std::vector<Step> prefix;
    auto walk = [&](auto&& self, const Word& w, int t) -> bool {
      if (t == n) return w == target;
      for (const Step& s : enabled_steps(d.grammar, w)) {
        if (s.position > d.steps[t].position) break;
        if (s.rule.kind == RuleKind::Insertion &&
            static_cast<int>(w.size()) >= max_word)
          continue;
        Word next = apply_step_unchecked(w, s);
        if (s.position < d.steps[t].position) {
          // strictly below the boundary: the remainder is unconstrained
          if (exists(exists, next, n - t - 1)) {
            prefix.push_back(s);
            for (const Step& rest : least(next, n - t - 1))
              prefix.push_back(rest);
            return true;
          }
        } else {
          if (++nodes > budget) throw Budget{};
          prefix.push_back(s);
          if (self(self, next, t + 1)) return true;
          prefix.pop_back();
        }
      }
      return false;
    };
    if (walk(walk, d.initial, 0)) {
      Derivation cand{d.grammar, d.initial, prefix};
      if (measure_of(cand) < measure_of(d)) {
        res.verdict = MuVerdict::NotMinimal;
        res.witness = std::move(cand);
      }
    }
  } catch (const Budget&) {
    res.verdict = MuVerdict::BudgetExceeded;
    res.witness.reset();
  }
  res.nodes_expanded += nodes;
  return res;
}

}  // namespace lgr
