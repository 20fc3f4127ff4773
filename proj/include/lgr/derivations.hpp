#pragma once

#include <compare>
#include <optional>

#include "lgr/core.hpp"

namespace lgr {

/// A derivation: an initial word plus steps that must replay cleanly.
struct Derivation {
  Grammar grammar;
  Word initial;
  std::vector<Step> steps;
};

struct ReplayError : DomainError {
  int step_index;  // 1-based index of the failing step
  ReplayError(int idx, const std::string& msg)
      : DomainError("invalid step at index " + std::to_string(idx) + ": " +
                    msg),
        step_index(idx) {}
};

/// The n+1 words u_0 .. u_n; throws ReplayError at the first bad step.
std::vector<Word> replay(const Derivation& d);

/// Letter identity tracking across a derivation. A letter is an occurrence
/// followed through consecutive words; ids are dense, initial letters
/// first in word order, then inserted letters in step order.
struct Letter {
  Symbol sym;
  int birth_step = 0;     // 0 = initial, else the inserting step (1-based)
  int inserted_by = -1;   // letter id of the inserting actor
  int death_step = -1;    // -1 = survives, else the deleting step (1-based)
  int deleted_by = -1;    // letter id of the deleting actor
  std::vector<int> active_at;  // steps (1-based) where this letter acts
};

struct TracedDerivation {
  std::vector<Letter> letters;
  std::vector<std::vector<int>> words;  // letter ids of each u_i
  std::vector<int> actor_of_step;       // per step, acting letter id
  std::vector<int> subject_of_step;     // inserted/deleted letter id
  std::vector<bool> useful;             // per letter id
  std::vector<int> useless_letters() const;
};

TracedDerivation trace(const Derivation& d);

/// Derivation measure <n, p_1..p_n>, compared lexicographically with the
/// length first.
struct Measure {
  int length = 0;
  std::vector<int> positions;
  friend std::strong_ordering operator<=>(const Measure& a, const Measure& b) {
    if (a.length != b.length) return a.length <=> b.length;
    return a.positions <=> b.positions;
  }
  friend bool operator==(const Measure&, const Measure&) = default;
};

Measure measure_of(const Derivation& d);
std::string to_string(const Measure& m);

struct DerivationReport {
  bool leftmost = false;
  bool eager = false;
  bool pure = false;
  bool greedy = false;
  Measure measure;
  std::vector<int> useless;  // letter ids
};

DerivationReport classify(const Derivation& d);

/// Repairs the derivation into an equivalent greedy one with measure no
/// larger than the input's. Fixpoint on already-greedy inputs.
Derivation greedy_normalize(const Derivation& d);

enum class MuVerdict { Minimal, NotMinimal, BudgetExceeded };

struct MuResult {
  MuVerdict verdict;
  std::optional<Derivation> witness;  // strictly smaller, least measure
  uint64_t nodes_expanded = 0;
};

/// Exhaustive check for mu-minimality among derivations with the same
/// extremities; any strictly smaller equivalent has length <= |d.steps|.
MuResult is_mu_minimal(const Derivation& d, uint64_t budget = 5'000'000);

}  // namespace lgr
