#include "lgr/symbols.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace lgr {

ParseError::ParseError(int line_, int col_, const std::string& msg)
    : Error("parse error at " + std::to_string(line_) + ":" +
            std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

bool valid_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '\'' ||
              c == '"' || c == '-';
    if (!ok) return false;
  }
  return true;
}

namespace {

class Interner {
 public:
  static Interner& instance() {
    static Interner pool;
    return pool;
  }

  uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mu_);
      auto it = ids_.find(std::string(name));
      if (it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto [it, fresh] = ids_.try_emplace(std::string(name), 0);
    if (fresh) {
      it->second = static_cast<uint32_t>(names_.size());
      names_.push_back(&it->first);  // map nodes are stable
    }
    return it->second;
  }

  std::optional<uint32_t> lookup(std::string_view name) const {
    std::shared_lock lock(mu_);
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(uint32_t id) const {
    std::shared_lock lock(mu_);
    return *names_[id];
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, uint32_t> ids_;
  std::deque<const std::string*> names_;  // points into ids_ keys, stable
};

}  // namespace

Symbol Symbol::intern(std::string_view name) {
  if (!valid_symbol_name(name))
    throw DomainError("invalid symbol name: '" + std::string(name) + "'");
  return Symbol(Interner::instance().intern(name));
}

std::optional<Symbol> Symbol::lookup(std::string_view name) {
  auto id = Interner::instance().lookup(name);
  if (!id) return std::nullopt;
  return Symbol(*id);
}

const std::string& Symbol::name() const {
  static const std::string invalid = "<invalid>";
  if (!valid()) return invalid;
  return Interner::instance().name(id_);
}

SymbolSet::SymbolSet(std::initializer_list<Symbol> syms)
    : SymbolSet(std::vector<Symbol>(syms)) {}

SymbolSet::SymbolSet(std::vector<Symbol> syms) : items_(std::move(syms)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool SymbolSet::contains(Symbol s) const {
  return std::binary_search(items_.begin(), items_.end(), s);
}

void SymbolSet::insert(Symbol s) {
  auto it = std::lower_bound(items_.begin(), items_.end(), s);
  if (it == items_.end() || *it != s) items_.insert(it, s);
}

void SymbolSet::erase(Symbol s) {
  auto it = std::lower_bound(items_.begin(), items_.end(), s);
  if (it != items_.end() && *it == s) items_.erase(it);
}

bool SymbolSet::intersects(const SymbolSet& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

bool SymbolSet::subset_of(const SymbolSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

SymbolSet SymbolSet::set_union(const SymbolSet& other) const {
  std::vector<Symbol> out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out));
  return SymbolSet(std::move(out));
}

SymbolSet SymbolSet::set_minus(const SymbolSet& other) const {
  std::vector<Symbol> out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(out));
  return SymbolSet(std::move(out));
}

SymbolSet SymbolSet::set_intersect(const SymbolSet& other) const {
  std::vector<Symbol> out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(out));
  return SymbolSet(std::move(out));
}

std::vector<std::string> SymbolSet::sorted_names() const {
  std::vector<std::string> names;
  names.reserve(items_.size());
  for (Symbol s : items_) names.push_back(s.name());
  std::sort(names.begin(), names.end());
  return names;
}

size_t WordHash::operator()(const Word& w) const {
  uint64_t h = 1469598103934665603ull;
  for (Symbol s : w) {
    h ^= s.id();
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].name();
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<std::string> toks;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  // a lone "-" denotes the empty word
  if (toks.size() == 1 && toks[0] == "-") return {};
  Word out;
  out.reserve(toks.size());
  for (const auto& t : toks) {
    if (!valid_symbol_name(t))
      throw DomainError("invalid symbol name in word: '" + t + "'");
    out.push_back(Symbol::intern(t));
  }
  return out;
}

bool word_name_less(const Word& a, const Word& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i].name() < b[i].name();
  }
  return a.size() < b.size();
}

}  // namespace lgr
