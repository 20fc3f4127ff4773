#include "lgr/reach.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace lgr {

int default_max_word(const Grammar& g, const Word& from, const Word& to) {
  return static_cast<int>(from.size() + to.size() + 2 * g.rules().size());
}

TargetFilter::TargetFilter(const Grammar& g, const Word& to, int max_depth,
                           bool exact)
    : max_depth_(max_depth), exact_(exact) {
  SymbolSet patients;
  for (const Rule& r : g.rules())
    if (r.kind == RuleKind::Deletion) patients.insert(r.patient);
  for (Symbol s : g.alphabet())
    if (!patients.contains(s)) permanent_.insert(s);
  permanent_.insert(g.final_symbol());
  target_len_ = static_cast<int>(to.size());
  for (Symbol s : to)
    if (permanent_.contains(s)) target_perm_.push_back(s);
}

bool TargetFilter::admissible(const Word& w, int depth) const {
  int gap = static_cast<int>(w.size()) - target_len_;
  int remaining = max_depth_ - depth;
  if (gap > remaining || -gap > remaining) return false;
  // the step parity must work out only when the length is exact
  if (exact_ && (gap + remaining) % 2 != 0) return false;
  size_t i = 0;
  for (Symbol s : w) {
    if (!permanent_.contains(s)) continue;
    while (i < target_perm_.size() && target_perm_[i] != s) ++i;
    if (i >= target_perm_.size()) return false;
    ++i;
  }
  return true;
}

namespace {

struct Node {
  Word w;
  int parent;  // -1 for the root
  Step step;
  int depth;
};

Derivation derivation_from(const Grammar& g, const std::deque<Node>& arena,
                           int idx) {
  std::vector<Step> steps;
  for (int at = idx; arena[at].parent >= 0; at = arena[at].parent)
    steps.push_back(arena[at].step);
  std::reverse(steps.begin(), steps.end());
  return Derivation{g, arena.front().w, std::move(steps)};
}

// Breadth-first search keeping first-wins parents; expansion in
// enabled_steps order makes the first path to any word the
// lexicographically least one of minimal length.
SearchResult bfs_reach(const Grammar& g, const Word& from, const Word& to,
                       int max_depth, int max_word, uint64_t budget) {
  SearchResult res;
  TargetFilter filter(g, to, max_depth);
  if (!filter.admissible(from, 0) && from != to) {
    res.verdict = Verdict::NotFound;
    return res;
  }
  std::deque<Node> arena;
  std::unordered_map<Word, int, WordHash> seen;
  arena.push_back({from, -1, {}, 0});
  seen.emplace(from, 0);
  if (from == to) {
    res.verdict = Verdict::Found;
    res.derivation = Derivation{g, from, {}};
    return res;
  }
  std::vector<Step> steps;
  for (size_t head = 0; head < arena.size(); ++head) {
    Node node = arena[head];
    if (node.depth >= max_depth) continue;
    if (++res.stats.nodes_expanded > budget) {
      res.verdict = Verdict::BudgetExceeded;
      return res;
    }
    enabled_steps(g, node.w, steps);
    for (const Step& s : steps) {
      Word next = apply_step_unchecked(node.w, s);
      if (static_cast<int>(next.size()) > max_word) continue;
      if (!filter.admissible(next, node.depth + 1)) continue;
      auto [it, fresh] = seen.emplace(next, static_cast<int>(arena.size()));
      if (!fresh) {
        ++res.stats.dedup_hits;
        continue;
      }
      arena.push_back({std::move(next), static_cast<int>(head), s,
                       node.depth + 1});
      if (arena.back().w == to) {
        res.verdict = Verdict::Found;
        res.derivation =
            derivation_from(g, arena, static_cast<int>(arena.size()) - 1);
        res.stats.max_frontier = arena.size();
        return res;
      }
    }
    res.stats.max_frontier = std::max(res.stats.max_frontier, arena.size());
  }
  res.verdict = Verdict::NotFound;
  return res;
}

struct ExactKey {
  Word w;
  int remaining;
  bool operator==(const ExactKey&) const = default;
};

struct ExactKeyHash {
  size_t operator()(const ExactKey& k) const {
    return WordHash()(k.w) * 1000003u + static_cast<size_t>(k.remaining);
  }
};

/// Memoized "does a derivation of exactly `remaining` steps reach `to`".
class ExactSearch {
 public:
  ExactSearch(const Grammar& g, const Word& to, int max_depth, int max_word,
              uint64_t budget)
      : g_(g),
        to_(to),
        filter_(g, to, max_depth, /*exact=*/true),
        max_depth_(max_depth),
        max_word_(max_word),
        budget_(budget) {}

  bool exists(const Word& w, int remaining) {
    if (remaining == 0) return w == to_;
    if (!filter_.admissible(w, max_depth_ - remaining)) return false;
    ExactKey key{w, remaining};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (++nodes_ > budget_) throw BudgetHit{};
    bool found = false;
    std::vector<Step> steps = enabled_steps(g_, w);
    for (const Step& s : steps) {
      Word next = apply_step_unchecked(w, s);
      if (static_cast<int>(next.size()) > max_word_) continue;
      if (exists(next, remaining - 1)) {
        found = true;
        break;
      }
    }
    memo_.emplace(std::move(key), found);
    return found;
  }

  /// Extracts the lexicographically least exact-length witness; call only
  /// when exists() holds.
  std::vector<Step> least_witness(Word w, int remaining) {
    std::vector<Step> out;
    while (remaining > 0) {
      bool advanced = false;
      for (const Step& s : enabled_steps(g_, w)) {
        Word next = apply_step_unchecked(w, s);
        if (static_cast<int>(next.size()) > max_word_) continue;
        if (exists(next, remaining - 1)) {
          out.push_back(s);
          w = std::move(next);
          --remaining;
          advanced = true;
          break;
        }
      }
      if (!advanced) throw Error("exact witness extraction out of sync");
    }
    return out;
  }

  struct BudgetHit {};

  uint64_t nodes() const { return nodes_; }

 private:
  const Grammar& g_;
  Word to_;
  TargetFilter filter_;
  int max_depth_;
  int max_word_;
  uint64_t budget_;
  uint64_t nodes_ = 0;
  std::unordered_map<ExactKey, bool, ExactKeyHash> memo_;
};

}  // namespace

std::unordered_map<Word, int, WordHash> oracle_enumerate(const Grammar& g,
                                                         const Word& from,
                                                         const SearchBounds& b,
                                                         SearchStats* stats) {
  int max_word = b.max_word >= 0 ? b.max_word
                                 : default_max_word(g, from, {});
  std::unordered_map<Word, int, WordHash> seen;
  std::deque<Word> frontier;
  seen.emplace(from, 0);
  frontier.push_back(from);
  SearchStats local;
  std::vector<Step> steps;
  for (int depth = 0; depth < b.max_depth && !frontier.empty(); ++depth) {
    std::deque<Word> next_frontier;
    for (const Word& w : frontier) {
      ++local.nodes_expanded;
      enabled_steps(g, w, steps);
      for (const Step& s : steps) {
        Word next = apply_step_unchecked(w, s);
        if (static_cast<int>(next.size()) > max_word) continue;
        auto [it, fresh] = seen.emplace(std::move(next), depth + 1);
        if (fresh)
          next_frontier.push_back(it->first);
        else
          ++local.dedup_hits;
      }
    }
    local.max_frontier = std::max(local.max_frontier,
                                  static_cast<uint64_t>(next_frontier.size()));
    frontier = std::move(next_frontier);
  }
  if (stats) *stats = local;
  return seen;
}

SearchResult bounded_reach(const Grammar& g, const Word& from, const Word& to,
                           const SearchBounds& b) {
  int max_word = b.max_word >= 0 ? b.max_word : default_max_word(g, from, to);
  if (!b.exact) return bfs_reach(g, from, to, b.max_depth, max_word, b.budget);

  // exact mode: reachability prefilter, then depth-exact memoized search
  SearchResult res;
  auto reach = oracle_enumerate(g, from, {b.max_depth, max_word}, &res.stats);
  if (!reach.count(to)) {
    res.verdict = Verdict::NotFound;
    return res;
  }
  ExactSearch search(g, to, b.max_depth, max_word, b.budget);
  try {
    if (search.exists(from, b.max_depth)) {
      res.verdict = Verdict::Found;
      res.derivation =
          Derivation{g, from, search.least_witness(from, b.max_depth)};
    } else {
      res.verdict = Verdict::NotFound;
    }
  } catch (const ExactSearch::BudgetHit&) {
    res.verdict = Verdict::BudgetExceeded;
  }
  res.stats.nodes_expanded += search.nodes();
  return res;
}

// ---------------------------------------------------------------------------
// Greedy-restricted search.
//
// Letters carry three online flags. FROZEN letters sat left of some step's
// active letter; a later step acting through them would break leftmostness,
// so such steps are pruned (this is exact). INS_INERT marks inserted letters
// that have not acted; deleting one is a purity violation (exact). MARKED
// records an insertion performed while an adjacent deletable pair with an
// inert left context was available; if the marked letter dies with the mark
// intact the derivation is not eager (kills are conservative, so some
// non-eager derivations survive - harmless for verdicts).
// ---------------------------------------------------------------------------

namespace {

constexpr uint8_t kFrozen = 1;
constexpr uint8_t kInsInert = 2;
constexpr uint8_t kMarked = 4;

struct GLetter {
  Symbol sym;
  uint8_t flags = 0;
  bool operator==(const GLetter&) const = default;
};

using GState = std::vector<GLetter>;

struct GStateHash {
  size_t operator()(const GState& st) const {
    uint64_t h = 1469598103934665603ull;
    for (const GLetter& l : st) {
      h ^= (static_cast<uint64_t>(l.sym.id()) << 3) | l.flags;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

Word project(const GState& st) {
  Word w;
  w.reserve(st.size());
  for (const GLetter& l : st) w.push_back(l.sym);
  return w;
}

std::optional<GState> greedy_transition(const Grammar& g, const GState& st,
                                        const Step& s) {
  int ai = s.position - 1;
  if (st[ai].flags & kFrozen) return std::nullopt;
  GState out = st;
  for (size_t i = ai; i < out.size(); ++i) out[i].flags &= ~kMarked;
  out[ai].flags &= ~kInsInert;
  if (s.rule.kind == RuleKind::Insertion) {
    for (int q = 0; q < ai && q + 1 < static_cast<int>(out.size()); ++q) {
      if (g.can_delete(out[q + 1].sym, out[q].sym)) out[q].flags |= kMarked;
    }
    for (int i = 0; i < ai; ++i) out[i].flags |= kFrozen;
    out.insert(out.begin() + ai, GLetter{s.rule.patient, kInsInert});
  } else {
    if (out[ai - 1].flags & (kInsInert | kMarked)) return std::nullopt;
    for (int i = 0; i < ai; ++i) out[i].flags |= kFrozen;
    out.erase(out.begin() + (ai - 1));
  }
  return out;
}

struct GNode {
  GState st;
  int parent;
  Step step;
  int depth;
};

}  // namespace

SearchResult greedy_reach(const Grammar& g, const Word& from, const Word& to,
                          const SearchBounds& b) {
  if (b.exact)
    throw DomainError(
        "greedy search is restricted to <= mode; exact step counts may "
        "require non-greedy derivations");
  int max_word = b.max_word >= 0 ? b.max_word : default_max_word(g, from, to);
  SearchResult res;
  TargetFilter filter(g, to, b.max_depth);
  if (from == to) {
    res.verdict = Verdict::Found;
    res.derivation = Derivation{g, from, {}};
    return res;
  }
  if (!filter.admissible(from, 0)) {
    res.verdict = Verdict::NotFound;
    return res;
  }
  std::deque<GNode> arena;
  std::unordered_set<GState, GStateHash> seen;
  GState root;
  for (Symbol s : from) root.push_back({s, 0});
  seen.insert(root);
  arena.push_back({std::move(root), -1, {}, 0});
  std::vector<Step> steps;
  for (size_t head = 0; head < arena.size(); ++head) {
    GNode node = arena[head];
    if (node.depth >= b.max_depth) continue;
    if (++res.stats.nodes_expanded > b.budget) {
      res.verdict = Verdict::BudgetExceeded;
      return res;
    }
    Word w = project(node.st);
    enabled_steps(g, w, steps);
    for (const Step& s : steps) {
      if (s.rule.kind == RuleKind::Insertion &&
          static_cast<int>(w.size()) + 1 > max_word)
        continue;
      auto next = greedy_transition(g, node.st, s);
      if (!next) continue;
      Word next_word = project(*next);
      if (next_word != to && !filter.admissible(next_word, node.depth + 1))
        continue;
      if (!seen.insert(*next).second) {
        ++res.stats.dedup_hits;
        continue;
      }
      bool hit = next_word == to;
      arena.push_back({std::move(*next), static_cast<int>(head), s,
                       node.depth + 1});
      if (hit) {
        res.verdict = Verdict::Found;
        std::vector<Step> path;
        for (int at = static_cast<int>(arena.size()) - 1;
             arena[at].parent >= 0; at = arena[at].parent)
          path.push_back(arena[at].step);
        std::reverse(path.begin(), path.end());
        res.derivation = Derivation{g, from, std::move(path)};
        res.stats.max_frontier = arena.size();
        return res;
      }
    }
    res.stats.max_frontier = std::max(res.stats.max_frontier, arena.size());
  }
  res.verdict = Verdict::NotFound;
  return res;
}

std::unordered_map<Word, int, WordHash> reachable_words(
    const Grammar& g, const Word& from, int max_depth, int max_word,
    SearchMode mode, uint64_t budget, bool* exceeded) {
  if (exceeded) *exceeded = false;
  if (mode == SearchMode::Exhaustive) {
    SearchBounds b;
    b.max_depth = max_depth;
    b.max_word = max_word;
    b.budget = budget;
    return oracle_enumerate(g, from, b);
  }
  std::unordered_map<Word, int, WordHash> result;
  std::unordered_set<GState, GStateHash> seen;
  std::deque<std::pair<GState, int>> frontier;
  GState root;
  for (Symbol s : from) root.push_back({s, 0});
  result.emplace(from, 0);
  seen.insert(root);
  frontier.emplace_back(std::move(root), 0);
  uint64_t nodes = 0;
  std::vector<Step> steps;
  while (!frontier.empty()) {
    auto [st, depth] = std::move(frontier.front());
    frontier.pop_front();
    if (depth >= max_depth) continue;
    if (++nodes > budget) {
      if (exceeded) *exceeded = true;
      break;
    }
    Word w = project(st);
    enabled_steps(g, w, steps);
    for (const Step& s : steps) {
      if (s.rule.kind == RuleKind::Insertion &&
          static_cast<int>(w.size()) + 1 > max_word)
        continue;
      auto next = greedy_transition(g, st, s);
      if (!next) continue;
      if (!seen.insert(*next).second) continue;
      result.emplace(project(*next), depth + 1);
      frontier.emplace_back(std::move(*next), depth + 1);
    }
  }
  return result;
}

}  // namespace lgr
