#include "lgr/derivations.hpp"

#include <algorithm>
#include <cassert>

namespace lgr {

std::vector<Word> replay(const Derivation& d) {
  std::vector<Word> words;
  words.reserve(d.steps.size() + 1);
  words.push_back(d.initial);
  for (size_t k = 0; k < d.steps.size(); ++k) {
    try {
      words.push_back(apply_step(d.grammar, words.back(), d.steps[k]));
    } catch (const StepError& e) {
      throw ReplayError(static_cast<int>(k) + 1, e.what());
    }
  }
  return words;
}

std::vector<int> TracedDerivation::useless_letters() const {
  std::vector<int> out;
  for (size_t i = 0; i < useful.size(); ++i)
    if (!useful[i]) out.push_back(static_cast<int>(i));
  return out;
}

TracedDerivation trace(const Derivation& d) {
  TracedDerivation t;
  std::vector<int> cur;
  Word cur_syms = d.initial;
  for (size_t i = 0; i < d.initial.size(); ++i) {
    t.letters.push_back({d.initial[i], 0, -1, -1, -1, {}});
    cur.push_back(static_cast<int>(i));
  }
  t.words.push_back(cur);
  for (size_t k0 = 0; k0 < d.steps.size(); ++k0) {
    const Step& s = d.steps[k0];
    int k = static_cast<int>(k0) + 1;
    if (!step_valid(d.grammar, cur_syms, s)) {
      try {
        apply_step(d.grammar, cur_syms, s);
      } catch (const StepError& e) {
        throw ReplayError(k, e.what());
      }
    }
    int ai = s.position - 1;  // 0-based index of the active letter
    int actor = cur[ai];
    t.letters[actor].active_at.push_back(k);
    t.actor_of_step.push_back(actor);
    if (s.rule.kind == RuleKind::Insertion) {
      int id = static_cast<int>(t.letters.size());
      t.letters.push_back({s.rule.patient, k, actor, -1, -1, {}});
      cur.insert(cur.begin() + ai, id);
      t.subject_of_step.push_back(id);
    } else {
      int victim = cur[ai - 1];
      t.letters[victim].death_step = k;
      t.letters[victim].deleted_by = actor;
      cur.erase(cur.begin() + (ai - 1));
      t.subject_of_step.push_back(victim);
    }
    cur_syms = apply_step_unchecked(cur_syms, s);
    t.words.push_back(cur);
  }
  // useful letters: in u_0 or u_n, or acting on a useful letter
  t.useful.assign(t.letters.size(), false);
  std::vector<int> queue;
  for (size_t i = 0; i < t.letters.size(); ++i) {
    if (t.letters[i].birth_step == 0 || t.letters[i].death_step == -1) {
      t.useful[i] = true;
      queue.push_back(static_cast<int>(i));
    }
  }
  while (!queue.empty()) {
    int y = queue.back();
    queue.pop_back();
    for (int x : {t.letters[y].inserted_by, t.letters[y].deleted_by}) {
      if (x >= 0 && !t.useful[x]) {
        t.useful[x] = true;
        queue.push_back(x);
      }
    }
  }
  return t;
}

Measure measure_of(const Derivation& d) {
  Measure m;
  m.length = static_cast<int>(d.steps.size());
  m.positions.reserve(d.steps.size());
  for (const Step& s : d.steps) m.positions.push_back(s.position);
  return m;
}

std::string to_string(const Measure& m) {
  std::string out = "<" + std::to_string(m.length);
  for (int p : m.positions) out += "," + std::to_string(p);
  return out + ">";
}

namespace {

int last_activity(const Letter& l) {
  return l.active_at.empty() ? 0 : l.active_at.back();
}

bool check_leftmost(const TracedDerivation& t, const Derivation& d) {
  for (size_t k0 = 0; k0 < d.steps.size(); ++k0) {
    int i = static_cast<int>(k0) + 1;
    int p = d.steps[k0].position;
    const auto& ids = t.words[k0];
    for (int q = 0; q < p - 1; ++q) {
      if (last_activity(t.letters[ids[q]]) > i) return false;
    }
  }
  return true;
}

struct EagerViolation {
  int step;     // 1-based index of the violating (insertion) step
  int pair_at;  // 0-based index q of the deletable letter b
  int death;    // step deleting b
};

/// Finds the first eagerness violation; a step u = w1.b.a.w2 with rule
/// a -/> b available, w1.b inert from this step on, b eventually deleted,
/// while the step performed is an insertion.
std::optional<EagerViolation> find_eager_violation(const TracedDerivation& t,
                                                   const Derivation& d) {
  for (size_t k0 = 0; k0 < d.steps.size(); ++k0) {
    int i = static_cast<int>(k0) + 1;
    if (d.steps[k0].rule.kind != RuleKind::Insertion) continue;
    const auto& ids = t.words[k0];
    int inert_below = 0;  // ids[0..inert_below-1] have no activity >= i
    while (inert_below < static_cast<int>(ids.size()) &&
           last_activity(t.letters[ids[inert_below]]) < i)
      ++inert_below;
    for (int q = 0; q + 1 < static_cast<int>(ids.size()); ++q) {
      if (q >= inert_below) break;  // w1.b must be inert from step i on
      const Letter& b = t.letters[ids[q]];
      const Letter& a = t.letters[ids[q + 1]];
      if (b.death_step == -1) continue;
      if (!d.grammar.can_delete(a.sym, b.sym)) continue;
      return EagerViolation{i, q, b.death_step};
    }
  }
  return std::nullopt;
}

}  // namespace

DerivationReport classify(const Derivation& d) {
  TracedDerivation t = trace(d);
  DerivationReport r;
  r.leftmost = check_leftmost(t, d);
  r.eager = !find_eager_violation(t, d).has_value();
  r.useless = t.useless_letters();
  r.pure = r.useless.empty();
  r.greedy = r.leftmost && r.eager && r.pure;
  r.measure = measure_of(d);
  return r;
}

namespace {

int position_of_letter(const std::vector<int>& word_ids, int letter) {
  auto it = std::find(word_ids.begin(), word_ids.end(), letter);
  assert(it != word_ids.end());
  return static_cast<int>(it - word_ids.begin()) + 1;
}

// Lemma A.6 repair: drop a useless inserted-inert-deleted letter's birth
// and death, shifting intermediate positions down where needed.
bool repair_purity(Derivation& d, const TracedDerivation& t) {
  auto useless = t.useless_letters();
  if (useless.empty()) return false;
  int z = useless.front();
  while (!t.letters[z].active_at.empty()) {
    int first_action = t.letters[z].active_at.front();
    z = t.subject_of_step[first_action - 1];  // acted-on letters are useless too
  }
  int s = t.letters[z].birth_step;
  int e = t.letters[z].death_step;
  assert(s >= 1 && e > s);
  std::vector<Step> steps;
  steps.reserve(d.steps.size() - 2);
  for (int k = 1; k <= static_cast<int>(d.steps.size()); ++k) {
    if (k == s || k == e) continue;
    Step st = d.steps[k - 1];
    if (k > s && k < e) {
      int pz = position_of_letter(t.words[k - 1], z);
      assert(st.position != pz);
      if (st.position > pz) --st.position;
    }
    steps.push_back(st);
  }
  d.steps = std::move(steps);
  return true;
}

// Lemma A.5 repair: perform the available deletion of b now and skip its
// later death step.
bool repair_eagerness(Derivation& d, const TracedDerivation& t) {
  auto v = find_eager_violation(t, d);
  if (!v) return false;
  int i = v->step, j = v->death;
  const auto& ids = t.words[i - 1];
  int b = ids[v->pair_at];
  Symbol b_sym = t.letters[b].sym;
  Symbol a_sym = t.letters[ids[v->pair_at + 1]].sym;
  int pos_a = v->pair_at + 2;
  assert(d.steps[i - 1].position >= pos_a);
  std::vector<Step> steps(d.steps.begin(), d.steps.begin() + (i - 1));
  steps.push_back({del(a_sym, b_sym), pos_a});
  for (int k = i; k <= j - 1; ++k) {
    Step st = d.steps[k - 1];
    int pb = position_of_letter(t.words[k - 1], b);
    assert(st.position != pb);
    if (st.position > pb) --st.position;
    steps.push_back(st);
  }
  steps.insert(steps.end(), d.steps.begin() + j, d.steps.end());
  d.steps = std::move(steps);
  return true;
}

// Lemma A.3 repair: swap adjacent non-interfering steps.
bool repair_leftmost(Derivation& d) {
  for (size_t k = 0; k + 1 < d.steps.size(); ++k) {
    const Step s1 = d.steps[k];  // by value: the slots are overwritten
    const Step s2 = d.steps[k + 1];
    bool swappable =
        s2.position < s1.position - 1 ||
        (s2.position == s1.position - 1 &&
         s1.rule.kind == RuleKind::Insertion);
    if (!swappable) continue;
    int shifted = s1.position +
                  (s2.rule.kind == RuleKind::Insertion ? 1 : -1);
    d.steps[k] = s2;
    d.steps[k + 1] = {s1.rule, shifted};
    return true;
  }
  return false;
}

}  // namespace

Derivation greedy_normalize(const Derivation& d) {
  Derivation cur = d;
  // each repair strictly decreases the measure, which is well-founded
  for (;;) {
    TracedDerivation t = trace(cur);
    if (repair_purity(cur, t)) continue;
    if (repair_eagerness(cur, t)) continue;
    if (repair_leftmost(cur)) continue;
    return cur;
  }
}

}  // namespace lgr
