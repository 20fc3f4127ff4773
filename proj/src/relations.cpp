#include "lgr/relations.hpp"

#include <algorithm>
#include <map>

namespace lgr {

WordRel rel_compose(const WordRel& r1, const WordRel& r2) {
  std::map<Word, std::vector<Word>> by_input;
  for (const auto& [x, y] : r2) by_input[x].push_back(y);
  WordRel out;
  for (const auto& [x, z] : r1) {
    auto it = by_input.find(z);
    if (it == by_input.end()) continue;
    for (const Word& y : it->second) out.emplace(x, y);
  }
  return out;
}

WordRel rel_union(const WordRel& r1, const WordRel& r2) {
  WordRel out = r1;
  out.insert(r2.begin(), r2.end());
  return out;
}

WordRel rel_iterate_closure(const WordRel& s,
                            const std::function<Word(const Word&)>& step) {
  std::map<Word, std::vector<Word>> s_by_input;
  for (const auto& [x, y] : s) s_by_input[x].push_back(y);
  WordRel result = s;
  for (;;) {
    WordRel next = result;
    for (const auto& [u, v] : result) {
      auto it = s_by_input.find(step(v));
      if (it == s_by_input.end()) continue;
      for (const Word& y : it->second) next.emplace(u, y);
    }
    if (next == result) return result;
    result.swap(next);
  }
}

std::vector<Word> words_over(const SymbolSet& alphabet, int max_len) {
  std::vector<Symbol> letters;
  for (const auto& name : alphabet.sorted_names())
    letters.push_back(Symbol::intern(name));
  std::vector<Word> out{{}};
  size_t layer_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t layer_end = out.size();
    for (size_t i = layer_begin; i < layer_end; ++i) {
      for (Symbol s : letters) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

bool word_over(const Word& w, const SymbolSet& alphabet) {
  return std::all_of(w.begin(), w.end(),
                     [&](Symbol s) { return alphabet.contains(s); });
}

}  // namespace lgr
