// lgr: leftist grammars as rewrite systems and word transformers.

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgr/closure.hpp"
#include "lgr/io.hpp"
#include "lgr/sat.hpp"
#include "lgr/simple.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lgr;

constexpr const char* kVersion = "lgr 1.0.0 (format lgr-1)";

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kExitFile = 66;

struct FileError : Error {
  using Error::Error;
};

std::string slurp(const std::string& path) {
  try {
    return read_file(path);
  } catch (const Error& e) {
    throw FileError(e.what());
  }
}

GrammarDoc load_doc(const std::string& path) {
  return parse_grammar_doc(slurp(path));
}

Transformer doc_transformer(const GrammarDoc& doc) {
  if (!doc.inputs || !doc.outputs)
    throw DomainError("file lacks transformer headers (inputs/outputs)");
  SymbolSet temps = doc.temps.value_or(SymbolSet{});
  return check_transformer(doc.grammar, *doc.inputs, temps, *doc.outputs);
}

AnchoredTransformer doc_anchored(const GrammarDoc& doc) {
  if (!doc.anchors) throw DomainError("file lacks an anchors header");
  return AnchoredTransformer(doc_transformer(doc), doc.anchors->first,
                             doc.anchors->second);
}

Derivation load_derivation(const Grammar& g, const std::string& path) {
  DerivationDoc doc = parse_derivation(slurp(path));
  return Derivation{g, std::move(doc.initial), std::move(doc.steps)};
}

json report_json(const DerivationReport& r) {
  json j;
  j["leftmost"] = r.leftmost;
  j["eager"] = r.eager;
  j["pure"] = r.pure;
  j["greedy"] = r.greedy;
  j["measure"] = to_string(r.measure);
  j["useless_letters"] = r.useless;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string transformer_text(const Transformer& t,
                             std::optional<std::pair<Symbol, Symbol>> anchors,
                             const std::vector<std::string>& meta = {}) {
  GrammarDoc doc{t.grammar(), t.inputs(), t.temps(), t.outputs(), anchors,
                 meta};
  return write_grammar_doc(doc);
}

int run(int argc, char** argv) {
  CLI::App app{"leftist grammar workbench"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  bool as_json = false;
  int seed = 0;
  int threads = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--seed", seed, "seed for sampled checks (default 0)");
  app.add_option("--threads", threads, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);

  // ---- check ----
  auto* check = app.add_subcommand("check", "classify a grammar file");
  std::string check_path;
  check->add_option("file", check_path)->required();

  // ---- derive ----
  auto* derive =
      app.add_subcommand("derive", "bounded reachability between words");
  std::string derive_path, derive_from, derive_to, derive_emit;
  int derive_steps = 0, derive_max_word = -1;
  uint64_t derive_budget = 50'000'000;
  bool derive_exact = false;
  derive->add_option("grammar", derive_path)->required();
  derive->add_option("--from", derive_from)->required();
  derive->add_option("--to", derive_to)->required();
  derive->add_option("--steps", derive_steps)->required();
  derive->add_flag("--exact", derive_exact, "exactly this many steps");
  derive->add_option("--max-word", derive_max_word);
  derive->add_option("--budget", derive_budget);
  derive->add_option("--emit", derive_emit, "write the found derivation");

  // ---- verify / normalize / muminimal ----
  auto* verify = app.add_subcommand("verify", "classify a derivation");
  std::string verify_g, verify_d;
  verify->add_option("grammar", verify_g)->required();
  verify->add_option("derivation", verify_d)->required();

  auto* normalize =
      app.add_subcommand("normalize", "greedy-normalize a derivation");
  std::string norm_g, norm_d, norm_out;
  normalize->add_option("grammar", norm_g)->required();
  normalize->add_option("derivation", norm_d)->required();
  normalize->add_option("-o,--output", norm_out);

  auto* mu = app.add_subcommand("muminimal", "brute-force mu-minimality");
  std::string mu_g, mu_d;
  uint64_t mu_budget = 5'000'000;
  mu->add_option("grammar", mu_g)->required();
  mu->add_option("derivation", mu_d)->required();
  mu->add_option("--budget", mu_budget);

  // ---- compose / union / nabla / relation ----
  auto* comp = app.add_subcommand("compose", "sequential composition");
  std::string comp_a, comp_b, comp_out;
  comp->add_option("first", comp_a)->required();
  comp->add_option("second", comp_b)->required();
  comp->add_option("-o,--output", comp_out)->required();

  auto* uni = app.add_subcommand("union", "union of simple transformers");
  std::string uni_a, uni_b, uni_out;
  uni->add_option("first", uni_a)->required();
  uni->add_option("second", uni_b)->required();
  uni->add_option("-o,--output", uni_out)->required();

  auto* nab = app.add_subcommand("nabla", "witness map for a simple pair");
  std::string nab_g, nab_from, nab_to;
  nab->add_option("grammar", nab_g)->required();
  nab->add_option("--from", nab_from)->required();
  nab->add_option("--to", nab_to)->required();

  auto* rel = app.add_subcommand("relation", "bounded realized relation");
  std::string rel_g, rel_format = "tsv";
  int rel_l = 0, rel_m = 0, rel_d = 0;
  rel->add_option("grammar", rel_g)->required();
  rel->add_option("--max-input", rel_l)->required();
  rel->add_option("--max-word", rel_m)->required();
  rel->add_option("--max-depth", rel_d)->required();
  rel->add_option("--format", rel_format)
      ->check(CLI::IsMember({"tsv", "json"}));

  // ---- closure ----
  auto* clo = app.add_subcommand("closure", "anchored transitive closure");
  std::string clo_g, clo_map, clo_out;
  int clo_l = 2, clo_m = 8, clo_d = 10;
  bool clo_skip = false;
  clo->add_option("grammar", clo_g)->required();
  clo->add_option("--map", clo_map, "output-to-input pairs c=a,...")
      ->required();
  clo->add_option("-o,--output", clo_out)->required();
  clo->add_flag("--skip-precheck", clo_skip);
  clo->add_option("--max-input", clo_l);
  clo->add_option("--max-word", clo_m);
  clo->add_option("--max-depth", clo_d);

  // ---- cnf ----
  auto* cnf = app.add_subcommand("cnf", "3SAT reduction commands");
  cnf->require_subcommand(1);
  auto* cnf_compile = cnf->add_subcommand("compile", "CNF to grammar");
  std::string cc_in, cc_out;
  cnf_compile->add_option("cnf", cc_in)->required();
  cnf_compile->add_option("-o,--output", cc_out)->required();
  auto* cnf_solve = cnf->add_subcommand("solve", "decide via the grammar");
  std::string cs_in;
  uint64_t cs_budget = 50'000'000;
  cnf_solve->add_option("cnf", cs_in)->required();
  cnf_solve->add_option("--budget", cs_budget);
  auto* cnf_hard = cnf->add_subcommand("hard", "mu-minimality gadget");
  std::string ch_in, ch_out, ch_drv;
  int ch_k = 0;
  cnf_hard->add_option("cnf", ch_in)->required();
  cnf_hard->add_option("-k", ch_k)->required();
  cnf_hard->add_option("-o,--output", ch_out)->required();
  cnf_hard->add_option("--derivation", ch_drv)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (check->parsed()) {
    GrammarDoc doc = load_doc(check_path);
    json j;
    j["grammar"] = "ok";
    j["rules"] = doc.grammar.rules().size();
    j["symbols"] = doc.grammar.alphabet().size();
    j["acyclic"] = doc.grammar.acyclic();
    std::string typing = "none";
    std::string simple = "no";
    std::string anchored = "no";
    if (doc.has_typing()) {
      try {
        Transformer t = doc_transformer(doc);
        typing = "valid transformer";
        try {
          SimpleTransformer st(t);
          simple = "yes";
        } catch (const DomainError&) {
        }
        if (doc.anchors) {
          AnchoredTransformer at = doc_anchored(doc);
          (void)at;
          anchored = "yes";
        }
      } catch (const DomainError& e) {
        typing = std::string("invalid: ") + e.what();
      }
    }
    j["typing"] = typing;
    j["simple"] = simple;
    j["anchored"] = anchored;
    j["roundtrip"] = write_grammar_doc(doc);
    if (as_json) {
      emit(j);
    } else {
      std::cout << "grammar: ok (" << j["rules"] << " rules, " << j["symbols"]
                << " symbols)\n"
                << "acyclic: " << (doc.grammar.acyclic() ? "yes" : "no")
                << "\ntyping: " << typing << "\nsimple shape: " << simple
                << "\nanchored: " << anchored << "\n";
    }
    return kExitFound;
  }

  if (derive->parsed()) {
    GrammarDoc doc = load_doc(derive_path);
    Word from = parse_word(derive_from);
    Word to = parse_word(derive_to);
    SearchBounds b;
    b.max_depth = derive_steps;
    b.max_word = derive_max_word;
    b.exact = derive_exact;
    b.budget = derive_budget;
    SearchResult res = bounded_reach(doc.grammar, from, to, b);
    json j;
    j["verdict"] = res.verdict == Verdict::Found      ? "found"
                   : res.verdict == Verdict::NotFound ? "not-found"
                                                      : "budget-exceeded";
    j["nodes_expanded"] = res.stats.nodes_expanded;
    if (res.derivation) j["steps"] = res.derivation->steps.size();
    if (as_json)
      emit(j);
    else
      std::cout << j["verdict"].get<std::string>()
                << (res.derivation ? " in " +
                                         std::to_string(
                                             res.derivation->steps.size()) +
                                         " steps"
                                   : "")
                << "\n";
    if (res.derivation && !derive_emit.empty())
      write_file(derive_emit, write_derivation(res.derivation->initial,
                                               res.derivation->steps));
    switch (res.verdict) {
      case Verdict::Found:
        return kExitFound;
      case Verdict::NotFound:
        return kExitNotFound;
      default:
        return kExitBudget;
    }
  }

  if (verify->parsed()) {
    GrammarDoc doc = load_doc(verify_g);
    Derivation d = load_derivation(doc.grammar, verify_d);
    DerivationReport r = classify(d);
    if (as_json) {
      emit(report_json(r));
    } else {
      std::cout << "leftmost: " << (r.leftmost ? "yes" : "no")
                << "\neager: " << (r.eager ? "yes" : "no")
                << "\npure: " << (r.pure ? "yes" : "no")
                << "\ngreedy: " << (r.greedy ? "yes" : "no")
                << "\nmeasure: " << to_string(r.measure) << "\n";
      if (!r.useless.empty()) {
        std::cout << "useless letters:";
        for (int id : r.useless) std::cout << " #" << id;
        std::cout << "\n";
      }
    }
    return kExitFound;
  }

  if (normalize->parsed()) {
    GrammarDoc doc = load_doc(norm_g);
    Derivation d = load_derivation(doc.grammar, norm_d);
    Derivation out = greedy_normalize(d);
    std::string text = write_derivation(out.initial, out.steps);
    if (norm_out.empty())
      std::cout << text;
    else
      write_file(norm_out, text);
    return kExitFound;
  }

  if (mu->parsed()) {
    GrammarDoc doc = load_doc(mu_g);
    Derivation d = load_derivation(doc.grammar, mu_d);
    MuResult r = is_mu_minimal(d, mu_budget);
    json j;
    j["verdict"] = r.verdict == MuVerdict::Minimal      ? "minimal"
                   : r.verdict == MuVerdict::NotMinimal ? "not-minimal"
                                                        : "budget-exceeded";
    j["nodes_expanded"] = r.nodes_expanded;
    if (r.witness) {
      j["witness_measure"] = to_string(measure_of(*r.witness));
      j["witness"] = write_derivation(r.witness->initial, r.witness->steps);
    }
    if (as_json)
      emit(j);
    else {
      std::cout << j["verdict"].get<std::string>() << "\n";
      if (r.witness)
        std::cout << "witness measure " << to_string(measure_of(*r.witness))
                  << ":\n"
                  << write_derivation(r.witness->initial, r.witness->steps);
    }
    return r.verdict == MuVerdict::BudgetExceeded ? kExitBudget : kExitFound;
  }

  if (comp->parsed()) {
    Transformer t1 = doc_transformer(load_doc(comp_a));
    Transformer t2 = doc_transformer(load_doc(comp_b));
    Composition c = compose(t1, t2);
    std::vector<std::string> meta;
    for (const auto& [from, to] : c.renamed)
      meta.push_back("renamed " + from.name() + " -> " + to.name());
    write_file(comp_out, transformer_text(c.result, std::nullopt, meta));
    std::cout << "composed: " << c.result.grammar().rules().size()
              << " rules\n";
    return kExitFound;
  }

  if (uni->parsed()) {
    SimpleTransformer t1(doc_transformer(load_doc(uni_a)));
    SimpleTransformer t2(doc_transformer(load_doc(uni_b)));
    SimpleTransformer u = union_transformers(t1, t2);
    write_file(uni_out, transformer_text(u.base(), std::nullopt));
    std::cout << "union: " << u.grammar().rules().size() << " rules\n";
    return kExitFound;
  }

  if (nab->parsed()) {
    SimpleTransformer st(doc_transformer(load_doc(nab_g)));
    Word u = parse_word(nab_from);
    Word v = parse_word(nab_to);
    auto w = nabla(st, u, v);
    if (!w) {
      std::cout << "none\n";
      return kExitNotFound;
    }
    std::cout << "witness:";
    for (size_t i = 0; i < w->h.size(); ++i)
      std::cout << " " << (i + 1) << "->" << w->h[i];
    std::cout << "\n";
    return kExitFound;
  }

  if (rel->parsed()) {
    Transformer t = doc_transformer(load_doc(rel_g));
    BoundedRelation r = bounded_relation(t, {rel_l, rel_m, rel_d});
    std::vector<std::pair<Word, Word>> rows(r.pairs.begin(), r.pairs.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return word_name_less(a.first, b.first);
      return word_name_less(a.second, b.second);
    });
    if (rel_format == "json") {
      json j = json::array();
      for (const auto& [u, v] : rows)
        j.push_back({{"input", to_string(u)}, {"output", to_string(v)}});
      emit(j);
    } else {
      for (const auto& [u, v] : rows)
        std::cout << to_string(u) << "\t" << to_string(v) << "\n";
    }
    return kExitFound;
  }

  if (clo->parsed()) {
    AnchoredTransformer at = doc_anchored(load_doc(clo_g));
    std::vector<std::pair<Symbol, Symbol>> pairs;
    std::string item;
    std::istringstream in(clo_map);
    while (std::getline(in, item, ',')) {
      size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw DomainError("bad --map entry: " + item);
      pairs.emplace_back(Symbol::intern(item.substr(0, eq)),
                         Symbol::intern(item.substr(eq + 1)));
    }
    Renaming h(at.base().outputs(), at.base().inputs(), pairs);
    ClosurePipeline pipe = transitive_closure(
        at, h, {clo_l, clo_m, clo_d}, clo_skip, /*force=*/false);
    write_file(clo_out,
               transformer_text(pipe.gplus.base(),
                                std::make_pair(pipe.gplus.b1(),
                                               pipe.gplus.b2()),
                                pipe.metadata));
    std::cout << "closure: " << pipe.gplus.grammar().rules().size()
              << " rules, " << pipe.gplus.grammar().alphabet().size()
              << " symbols\n";
    return kExitFound;
  }

  if (cnf_compile->parsed()) {
    PreprocessResult pre = preprocess(parse_dimacs(slurp(cc_in)));
    if (pre.unsat_short_circuit)
      throw DomainError("formula unsatisfiable: empty clause");
    Transformer phi = build_phi_grammar(*pre.formula);
    write_file(cc_out, transformer_text(phi, std::nullopt, pre.notes));
    json meta;
    meta["source"] = to_string(phi_source(*pre.formula));
    meta["target"] = to_string(phi_target(*pre.formula));
    meta["symbols"] = json::array();
    for (Symbol s : phi.grammar().alphabet()) {
      auto info = decode_level_symbol(s);
      if (!info) continue;
      meta["symbols"].push_back({{"name", s.name()},
                                 {"letter", std::string(1, info->letter)},
                                 {"copy", info->primed ? "primed" : "plain"},
                                 {"clause", info->clause},
                                 {"level", info->level}});
    }
    write_file(cc_out + ".meta", meta.dump(2) + "\n");
    std::cout << "compiled: " << phi.grammar().rules().size() << " rules, "
              << phi.grammar().alphabet().size() << " symbols\n";
    return kExitFound;
  }

  if (cnf_solve->parsed()) {
    PreprocessResult pre = preprocess(parse_dimacs(slurp(cs_in)));
    int original_vars = 0;
    {
      RawCnf raw = parse_dimacs(slurp(cs_in));
      original_vars = raw.num_vars;
    }
    if (pre.unsat_short_circuit) {
      std::cout << "UNSAT\n";
      return kExitNotFound;
    }
    const CnfFormula& f = *pre.formula;
    Transformer phi = build_phi_grammar(f);
    int m = static_cast<int>(f.clauses.size());
    int depth = 2 * m * f.num_vars;
    Word from = phi_source(f);
    from.push_back(sat_final_symbol());
    Word to = phi_target(f);
    to.push_back(sat_final_symbol());
    SearchBounds b;
    b.max_depth = depth;
    b.max_word = 2 * m + 2;
    b.budget = cs_budget;
    SearchResult res = greedy_reach(phi.grammar(), from, to, b);
    if (res.verdict == Verdict::BudgetExceeded) {
      std::cout << "BUDGET-EXCEEDED\n";
      return kExitBudget;
    }
    if (res.verdict == Verdict::NotFound) {
      std::cout << "UNSAT\n";
      return kExitNotFound;
    }
    Valuation v = decode_assignment(f, *res.derivation);
    std::cout << "SAT";
    for (int i = 1; i <= original_vars; ++i)
      std::cout << " " << (v.get(i) ? i : -i);
    std::cout << "\n";
    return kExitFound;
  }

  if (cnf_hard->parsed()) {
    PreprocessResult pre = preprocess(parse_dimacs(slurp(ch_in)));
    if (pre.unsat_short_circuit)
      throw DomainError("formula unsatisfiable: empty clause");
    HardInstance hard = build_hard_instance(*pre.formula, ch_k);
    write_file(ch_out, write_grammar(hard.grammar));
    write_file(ch_drv, write_derivation(hard.pi.initial, hard.pi.steps));
    std::cout << "gadget: " << hard.pi.steps.size() << " step derivation\n";
    return kExitFound;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
