#pragma once

#include <optional>
#include <string>
#include <utility>

#include "lgr/core.hpp"

namespace lgr {

/// A parsed grammar file. Transformer headers (inputs/temps/outputs) and
/// anchors are carried through untyped; callers bind them via
/// check_transformer when needed.
struct GrammarDoc {
  Grammar grammar;
  std::optional<SymbolSet> inputs;
  std::optional<SymbolSet> temps;
  std::optional<SymbolSet> outputs;
  std::optional<std::pair<Symbol, Symbol>> anchors;
  std::vector<std::string> meta;  // "# meta:" comment payloads, verbatim

  bool has_typing() const { return inputs.has_value() || outputs.has_value(); }
};

/// Grammar file format, line oriented:
///   # comment to end of line
///   final <name>                exactly once
///   symbols <name>...           optional pre-declarations
///   insert <actor> <patient>    actor inserts patient to its left
///   delete <actor> <patient>    actor deletes patient to its left
///   inputs/temps/outputs <name>...   transformer typing headers
///   anchors <b1> <b2>           anchored-transformer header
GrammarDoc parse_grammar_doc(std::string_view text);
Grammar parse_grammar(std::string_view text);

std::string write_grammar(const Grammar& g);
std::string write_grammar_doc(const GrammarDoc& doc);

/// Derivation file: first line `from <word>`, then one line per step,
/// `ins <actor> <patient> @ <pos>` or `del <actor> <patient> @ <pos>`.
struct DerivationDoc {
  Word initial;
  std::vector<Step> steps;
};

DerivationDoc parse_derivation(std::string_view text);
std::string write_derivation(const Word& initial,
                             const std::vector<Step>& steps);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace lgr
