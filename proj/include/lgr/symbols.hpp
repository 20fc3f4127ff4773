#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lgr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed. Positions are 1-based.
struct ParseError : Error {
  int line = 0;
  int col = 0;
  ParseError(int line_, int col_, const std::string& msg);
};

/// A precondition or typing constraint was violated.
struct DomainError : Error {
  using Error::Error;
};

bool valid_symbol_name(std::string_view name);

/// An interned grammar letter. Equality and ordering compare the interned
/// id; names are for I/O only. The intern pool is process-wide and
/// append-only, so Symbols stay valid and cheap to copy.
class Symbol {
 public:
  Symbol() : id_(kInvalid) {}

  /// Interns `name`, validating it against the symbol charset.
  static Symbol intern(std::string_view name);
  /// Looks a name up without creating it.
  static std::optional<Symbol> lookup(std::string_view name);

  const std::string& name() const;
  uint32_t id() const { return id_; }
  bool valid() const { return id_ != kInvalid; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend auto operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

 private:
  static constexpr uint32_t kInvalid = UINT32_MAX;
  explicit Symbol(uint32_t id) : id_(id) {}
  uint32_t id_;
};

struct SymbolHash {
  size_t operator()(Symbol s) const { return std::hash<uint32_t>()(s.id()); }
};

/// Small set of symbols, kept sorted by id.
class SymbolSet {
 public:
  SymbolSet() = default;
  SymbolSet(std::initializer_list<Symbol> syms);
  explicit SymbolSet(std::vector<Symbol> syms);

  bool contains(Symbol s) const;
  void insert(Symbol s);
  void erase(Symbol s);

  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool intersects(const SymbolSet& other) const;
  bool subset_of(const SymbolSet& other) const;
  SymbolSet set_union(const SymbolSet& other) const;
  SymbolSet set_minus(const SymbolSet& other) const;
  SymbolSet set_intersect(const SymbolSet& other) const;

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

  /// Names in lexicographic order, for stable printing.
  std::vector<std::string> sorted_names() const;

 private:
  std::vector<Symbol> items_;
};

using Word = std::vector<Symbol>;

struct WordHash {
  size_t operator()(const Word& w) const;
};

/// Renders a word as space-separated names; the empty word prints as "-".
std::string to_string(const Word& w);

/// Parses a whitespace-separated word; "-" (or nothing) is the empty word.
Word parse_word(std::string_view text);

/// Name-wise comparison used when emitting sorted word lists.
bool word_name_less(const Word& a, const Word& b);

}  // namespace lgr
