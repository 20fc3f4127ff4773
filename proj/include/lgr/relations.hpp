#pragma once

#include <functional>
#include <set>

#include "lgr/symbols.hpp"

namespace lgr {

using WordPair = std::pair<Word, Word>;
using WordRel = std::set<WordPair>;

WordRel rel_compose(const WordRel& r1, const WordRel& r2);
WordRel rel_union(const WordRel& r1, const WordRel& r2);

/// s . (step . s)^*  where `step` maps each output word to the next input.
/// Terminates because both component relations are finite sets.
WordRel rel_iterate_closure(const WordRel& s,
                            const std::function<Word(const Word&)>& step);

/// All words over the alphabet with length <= max_len, shortest first and
/// name-lexicographic within a length.
std::vector<Word> words_over(const SymbolSet& alphabet, int max_len);

bool word_over(const Word& w, const SymbolSet& alphabet);

}  // namespace lgr
