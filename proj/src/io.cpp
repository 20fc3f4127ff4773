#include "lgr/io.hpp"

#include <fstream>
#include <sstream>

namespace lgr {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
  std::vector<int> cols;  // 1-based column of each token
};

// Strips comments, splits tokens, remembers columns for error reporting.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    ++lineno;
    Line line{lineno, {}, {}};
    size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#') break;
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r' && raw[i] != '#')
        ++i;
      line.tokens.emplace_back(raw.substr(start, i - start));
      line.cols.push_back(static_cast<int>(start) + 1);
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

Symbol intern_checked(const std::string& tok, int lineno, int col) {
  if (!valid_symbol_name(tok))
    throw ParseError(lineno, col, "invalid symbol name '" + tok + "'");
  return Symbol::intern(tok);
}

std::vector<std::string> meta_comments(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    size_t at = raw.find("# meta:");
    if (at != std::string::npos) {
      std::string payload = raw.substr(at + 7);
      size_t b = payload.find_first_not_of(" \t");
      out.push_back(b == std::string::npos ? "" : payload.substr(b));
    }
  }
  return out;
}

}  // namespace

GrammarDoc parse_grammar_doc(std::string_view text) {
  std::optional<Symbol> final_sym;
  int final_line = 0;
  std::vector<Rule> rules;
  std::vector<Symbol> declared;
  std::optional<SymbolSet> inputs, temps, outputs;
  std::optional<std::pair<Symbol, Symbol>> anchors;

  auto read_symbols = [&](const Line& line) {
    std::vector<Symbol> syms;
    for (size_t i = 1; i < line.tokens.size(); ++i)
      syms.push_back(
          intern_checked(line.tokens[i], line.number, line.cols[i]));
    return SymbolSet(std::move(syms));
  };

  for (const Line& line : tokenize(text)) {
    const std::string& kw = line.tokens[0];
    auto expect_arity = [&](size_t n) {
      if (line.tokens.size() != n + 1)
        throw ParseError(line.number, line.cols[0],
                         "'" + kw + "' expects " + std::to_string(n) +
                             " argument(s)");
    };
    if (kw == "final") {
      expect_arity(1);
      if (final_sym)
        throw ParseError(line.number, line.cols[0],
                         "duplicate final declaration (first at line " +
                             std::to_string(final_line) + ")");
      final_sym = intern_checked(line.tokens[1], line.number, line.cols[1]);
      final_line = line.number;
    } else if (kw == "insert" || kw == "delete") {
      expect_arity(2);
      Symbol actor =
          intern_checked(line.tokens[1], line.number, line.cols[1]);
      Symbol patient =
          intern_checked(line.tokens[2], line.number, line.cols[2]);
      rules.push_back({kw == "insert" ? RuleKind::Insertion
                                      : RuleKind::Deletion,
                       actor, patient});
    } else if (kw == "symbols") {
      for (size_t i = 1; i < line.tokens.size(); ++i)
        declared.push_back(
            intern_checked(line.tokens[i], line.number, line.cols[i]));
    } else if (kw == "inputs") {
      inputs = read_symbols(line);
    } else if (kw == "temps") {
      temps = read_symbols(line);
    } else if (kw == "outputs") {
      outputs = read_symbols(line);
    } else if (kw == "anchors") {
      expect_arity(2);
      anchors = {intern_checked(line.tokens[1], line.number, line.cols[1]),
                 intern_checked(line.tokens[2], line.number, line.cols[2])};
    } else {
      throw ParseError(line.number, line.cols[0],
                       "unknown directive '" + kw + "'");
    }
  }
  if (!final_sym) throw ParseError(1, 1, "missing 'final' declaration");

  SymbolSet extra(std::move(declared));
  // header symbols are implicit declarations too
  if (inputs) extra = extra.set_union(*inputs);
  if (temps) extra = extra.set_union(*temps);
  if (outputs) extra = extra.set_union(*outputs);
  if (anchors) {
    extra.insert(anchors->first);
    extra.insert(anchors->second);
  }

  for (const Rule& r : rules) {
    if (r.patient == *final_sym)
      throw DomainError("rule touches axiom as patient: " + to_string(r));
  }
  Grammar g = make_grammar(*final_sym, std::move(rules), std::move(extra));
  GrammarDoc doc{std::move(g), std::move(inputs), std::move(temps),
                 std::move(outputs), anchors, meta_comments(text)};
  return doc;
}

Grammar parse_grammar(std::string_view text) {
  return parse_grammar_doc(text).grammar;
}

namespace {

void append_rules(std::string& out, const Grammar& g) {
  struct Row {
    std::string actor, patient;
    RuleKind kind;
  };
  std::vector<Row> rows;
  for (const Rule& r : g.rules())
    rows.push_back({r.actor.name(), r.patient.name(), r.kind});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.kind != b.kind) return a.kind == RuleKind::Insertion;
    if (a.actor != b.actor) return a.actor < b.actor;
    return a.patient < b.patient;
  });
  for (const Row& r : rows) {
    out += r.kind == RuleKind::Insertion ? "insert " : "delete ";
    out += r.actor;
    out += ' ';
    out += r.patient;
    out += '\n';
  }
}

void append_symbol_line(std::string& out, const char* kw,
                        const SymbolSet& set) {
  out += kw;
  for (const auto& name : set.sorted_names()) {
    out += ' ';
    out += name;
  }
  out += '\n';
}

}  // namespace

std::string write_grammar(const Grammar& g) {
  std::string out;
  out += "final " + g.final_symbol().name() + "\n";
  append_symbol_line(out, "symbols", g.alphabet());
  append_rules(out, g);
  return out;
}

std::string write_grammar_doc(const GrammarDoc& doc) {
  std::string out;
  for (const auto& m : doc.meta) out += "# meta: " + m + "\n";
  out += "final " + doc.grammar.final_symbol().name() + "\n";
  append_symbol_line(out, "symbols", doc.grammar.alphabet());
  if (doc.inputs) append_symbol_line(out, "inputs", *doc.inputs);
  if (doc.temps) append_symbol_line(out, "temps", *doc.temps);
  if (doc.outputs) append_symbol_line(out, "outputs", *doc.outputs);
  if (doc.anchors)
    out += "anchors " + doc.anchors->first.name() + " " +
           doc.anchors->second.name() + "\n";
  append_rules(out, doc.grammar);
  return out;
}

DerivationDoc parse_derivation(std::string_view text) {
  DerivationDoc doc;
  bool have_from = false;
  for (const Line& line : tokenize(text)) {
    const std::string& kw = line.tokens[0];
    if (kw == "from") {
      if (have_from)
        throw ParseError(line.number, line.cols[0], "duplicate 'from' line");
      have_from = true;
      for (size_t i = 1; i < line.tokens.size(); ++i) {
        if (line.tokens.size() == 2 && line.tokens[1] == "-") break;
        doc.initial.push_back(
            intern_checked(line.tokens[i], line.number, line.cols[i]));
      }
    } else if (kw == "ins" || kw == "del") {
      if (!have_from)
        throw ParseError(line.number, line.cols[0],
                         "step before 'from' line");
      if (line.tokens.size() != 5 || line.tokens[3] != "@")
        throw ParseError(line.number, line.cols[0],
                         "expected '" + kw + " <actor> <patient> @ <pos>'");
      Symbol actor =
          intern_checked(line.tokens[1], line.number, line.cols[1]);
      Symbol patient =
          intern_checked(line.tokens[2], line.number, line.cols[2]);
      int pos = 0;
      try {
        pos = std::stoi(line.tokens[4]);
      } catch (const std::exception&) {
        throw ParseError(line.number, line.cols[4], "bad position");
      }
      if (pos < 1) throw ParseError(line.number, line.cols[4], "position must be >= 1");
      doc.steps.push_back(
          {{kw == "ins" ? RuleKind::Insertion : RuleKind::Deletion, actor,
            patient},
           pos});
    } else {
      throw ParseError(line.number, line.cols[0],
                       "unknown directive '" + kw + "'");
    }
  }
  if (!have_from) throw ParseError(1, 1, "missing 'from' line");
  return doc;
}

std::string write_derivation(const Word& initial,
                             const std::vector<Step>& steps) {
  std::string out = "from " + to_string(initial) + "\n";
  for (const Step& s : steps) {
    out += s.rule.kind == RuleKind::Insertion ? "ins " : "del ";
    out += s.rule.actor.name();
    out += ' ';
    out += s.rule.patient.name();
    out += " @ ";
    out += std::to_string(s.position);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace lgr
