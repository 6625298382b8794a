// src_lab: command-line front end for the srclab library.
//
// Exit codes: 0 ok, 1 counterexample or failed verification, 2 usage or I/O
// error, 3 solver budget exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "srclab/srclab.hpp"

namespace {

using namespace srclab;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_all(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// A path to a graph6 file, "-" for stdin, or a literal graph6 string.
std::vector<Graph> load_graphs(const std::string& input) {
  if (input.empty() || input == "-") return read_graph6_stream(std::cin);
  if (std::filesystem::exists(input)) {
    std::ifstream file(input);
    if (!file) throw Error(ErrorKind::Usage, "cannot open " + input);
    return read_graph6_stream(file);
  }
  try {
    return {parse_graph6(input)};
  } catch (const Error&) {
    throw Error(ErrorKind::Usage, "'" + input + "' is neither a readable file nor a graph6 string");
  }
}

Graph load_one(const std::string& input) {
  auto graphs = load_graphs(input);
  if (graphs.size() != 1) {
    throw Error(ErrorKind::Usage, "expected exactly one graph, got " + std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

void print(const json& value) { std::cout << value.dump(2) << '\n'; }

json many_or_one(std::vector<json> items) {
  if (items.size() == 1) return std::move(items.front());
  return json(std::move(items));
}

int run_solve(const std::string& input, const std::string& mode, std::uint64_t budget, bool certificate, bool prune) {
  SolveOptions options;
  options.budget = budget;
  options.prune_partial = prune;
  std::vector<json> out;
  int code = kExitOk;
  for (const auto& g : load_graphs(input)) {
    json item{{"graph6", emit_graph6(g)}, {"mode", mode}};
    try {
      const auto r = mode == "rc" ? rc_exact(g, options) : src_exact(g, options);
      item["value"] = r.value;
      item["examined"] = r.examined;
      item["ms"] = r.ms;
      if (certificate) item["certificate"] = r.certificate.colors;
      std::cerr << item["graph6"].get<std::string>() << ": " << mode << " = " << r.value << '\n';
    } catch (const BudgetExceededError& e) {
      item["error"] = to_string(e.kind());
      item["upper_bound"] = e.best_known().bound;
      item["upper_bound_scheme"] = e.best_known().scheme;
      item["examined"] = e.examined();
      if (certificate) item["certificate"] = e.best_known().certificate.colors;
      std::cerr << item["graph6"].get<std::string>() << ": " << e.what() << '\n';
      code = kExitBudget;
    }
    out.push_back(std::move(item));
  }
  print(many_or_one(std::move(out)));
  return code;
}

int run_verify(const std::string& input, const std::string& coloring_arg, const std::string& mode) {
  const Graph g = load_one(input);
  std::string text = coloring_arg;
  if (std::filesystem::exists(coloring_arg)) {
    std::ifstream file(coloring_arg);
    text = read_all(file);
  }
  const auto c = parse_coloring(text);
  const auto verdict = mode == "rc" ? is_rainbow_connected(g, c) : is_strongly_rainbow_connected(g, c);
  json out{{"graph6", emit_graph6(g)}, {"mode", mode}, {"ok", verdict.ok}, {"colors", c.color_count()}};
  if (verdict.witness) out["witness"] = {verdict.witness->first, verdict.witness->second};
  print(out);
  std::cerr << (verdict.ok ? "ok" : "fails") << '\n';
  return verdict.ok ? kExitOk : kExitCounterexample;
}

int run_color(const std::string& input, const std::string& scheme) {
  const Graph g = load_one(input);
  const auto c = apply_scheme(g, parse_scheme(scheme));
  const auto verdict = is_strongly_rainbow_connected(g, c);
  std::cout << to_text(c) << '\n';
  std::cout << "# " << to_string(parse_scheme(scheme)) << ": " << c.color_count() << " colors, strong rainbow "
            << (verdict.ok ? "ok" : "FAILS") << '\n';
  return verdict.ok ? kExitOk : kExitCounterexample;
}

int run_classify(const std::string& input, bool lax_paths) {
  ClassifyOptions options;
  options.path_requires_endpoint_root = !lax_paths;
  std::vector<json> out;
  for (const auto& g : load_graphs(input)) {
    const auto labels = classify(g, options);
    json item{{"graph6", emit_graph6(g)}, {"labels", detail::labels_json(labels)}};
    const auto gir = girth(g);
    item["girth"] = gir ? json(*gir) : json(nullptr);
    item["t_max"] = max_edge_disjoint_triangles(g, true).t();
    if (gir && *gir <= 5 && is_connected(g)) {
      try {
        item["lemma1_pattern"] = to_string(lemma1_configuration(g).pattern);
      } catch (const Error&) {
      }
    }
    if (gbar_label(labels)) item["d2_tree_graph6"] = emit_graph6(d2_tree(g));
    out.push_back(std::move(item));
  }
  print(many_or_one(std::move(out)));
  return kExitOk;
}

int run_linegraph(const std::string& input) {
  std::vector<json> out;
  for (const auto& g : load_graphs(input)) {
    const auto line = line_graph(g);
    out.push_back({{"graph6", emit_graph6(g)},
                   {"line_graph6", emit_graph6(line)},
                   {"line_n", line.n()},
                   {"line_m", line.m()},
                   {"star_cliques", star_cliques(g)}});
  }
  print(many_or_one(std::move(out)));
  return kExitOk;
}

int run_enumerate(int n_max, int m_max, int trees, int unicyclic) {
  std::vector<Graph> graphs;
  if (trees > 0) {
    graphs = enumerate_trees(trees);
  } else if (unicyclic > 0) {
    graphs = enumerate_unicyclic(unicyclic);
  } else {
    graphs = enumerate_connected_graphs(n_max, m_max);
  }
  for (const auto& g : graphs) std::cout << emit_graph6(g) << '\n';
  std::cerr << graphs.size() << " graphs\n";
  return kExitOk;
}

struct ValidateArgs {
  std::string campaign;
  int n_max = -1;
  int m_max = -1;
  std::uint64_t budget = 0;
  unsigned workers = 0;
  std::string input;
  std::string output;
  std::string csv;
  bool lax_paths = false;
};

int run_validate(const ValidateArgs& args) {
  CampaignOptions options;
  SolveCache cache;
  options.cache = &cache;
  options.workers = args.workers;
  options.solve.budget = args.budget;
  options.classify.path_requires_endpoint_root = !args.lax_paths;
  if (args.campaign == "proposition13") options.n_max = 6;
  if (args.n_max >= 0) options.n_max = args.n_max;
  if (args.m_max >= 0) options.m_max = args.m_max;
  std::vector<Graph> source;
  if (!args.input.empty()) {
    source = load_graphs(args.input);
    options.source = &source;
  }
  ValidationReport report;
  const auto& c = args.campaign;
  if (c == "theorem1") {
    report = validate_theorem1(options);
  } else if (c == "theorem2") {
    report = validate_theorem2(options);
  } else if (c == "lemma1") {
    report = validate_lemma1(options);
  } else if (c == "corollary1") {
    report = validate_corollary1(args.input.empty() ? builtin_cubic_graphs() : source, options);
  } else if (c == "proposition13") {
    report = validate_proposition13(options);
  } else if (c == "observation1") {
    report = validate_observation1(options);
  } else if (c == "fact1") {
    report = validate_fact1(options);
  } else if (c == "unicyclic") {
    report = validate_unicyclic(options);
  } else {
    throw Error(ErrorKind::Usage, "unknown campaign '" + c + "'");
  }
  const auto doc = report.to_json();
  if (args.output.empty()) {
    print(doc);
  } else {
    std::ofstream file(args.output);
    if (!file) throw Error(ErrorKind::Usage, "cannot write " + args.output);
    file << doc.dump(2) << '\n';
  }
  if (!args.csv.empty()) {
    std::ofstream file(args.csv);
    if (!file) throw Error(ErrorKind::Usage, "cannot write " + args.csv);
    file << report.to_csv();
  }
  const auto& s = report.summary;
  std::cerr << report.campaign << ": " << s.total << " graphs, " << s.confirmations << " confirmed, "
            << s.counterexamples << " counterexamples, " << s.budget_exceeded << " skipped (budget), "
            << report.elapsed_ms << " ms\n";
  for (const auto* e : report.counterexamples()) {
    std::cerr << "  counterexample " << e->graph6 << " " << e->values.dump() << '\n';
  }
  if (!s.ok()) return kExitCounterexample;
  if (!s.complete()) return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong rainbow connection toolkit: exact solver, constructions, classifiers, validation campaigns"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string input;
  std::string mode = "src";
  std::uint64_t budget = default_budget();
  bool emit_certificate = false;
  bool prune = false;
  auto* solve = app.add_subcommand("solve", "Exact src or rc with a minimum certificate");
  solve->add_option("--mode", mode, "src or rc")->check(CLI::IsMember({"src", "rc"}));
  solve->add_option("--input,-i", input, "graph6 file, '-' for stdin, or a graph6 string");
  solve->add_option("--budget", budget, "maximum complete colorings examined (env SRC_LAB_BUDGET)");
  solve->add_flag("--emit-certificate", emit_certificate, "include the coloring in the output");
  solve->add_flag("--prune", prune, "prune partial colorings along unique geodesics");

  std::string coloring;
  auto* verify = app.add_subcommand("verify", "Check a coloring (whitespace-separated colors in edge order)");
  verify->add_option("--input,-i", input, "graph6 file, '-' for stdin, or a graph6 string");
  verify->add_option("--coloring,-c", coloring, "coloring file or inline text")->required();
  verify->add_option("--mode", mode, "src or rc")->check(CLI::IsMember({"src", "rc"}));

  std::string scheme;
  auto* color = app.add_subcommand("color", "Build a coloring with a named construction");
  color->add_option("--scheme,-s", scheme,
                    "CycleChartrand, CyclePlusFresh, TrianglePacking, UnicyclicK3/K4/K5, or a Claim2Config variant")
      ->required();
  color->add_option("--input,-i", input, "graph6 file, '-' for stdin, or a graph6 string");

  bool lax_paths = false;
  auto* classify_cmd = app.add_subcommand("classify", "Structural labels, girth, packing size, Lemma 1 pattern");
  classify_cmd->add_option("--input,-i", input, "graph6 file, '-' for stdin, or a graph6 string");
  classify_cmd->add_flag("--lax-paths", lax_paths, "accept pendant paths rooted at an inner vertex");

  auto* linegraph = app.add_subcommand("linegraph", "Line graph and its star cliques");
  linegraph->add_option("--input,-i", input, "graph6 file, '-' for stdin, or a graph6 string");

  int n_max = 6;
  int m_max = 15;
  int trees = 0;
  int unicyclic = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism, as graph6 lines");
  enumerate->add_option("--n-max", n_max, "largest vertex count (<= 8)");
  enumerate->add_option("--m-max", m_max, "largest edge count");
  enumerate->add_option("--trees", trees, "only trees on exactly this many vertices");
  enumerate->add_option("--unicyclic", unicyclic, "only unicyclic graphs on exactly this many vertices");

  ValidateArgs vargs;
  vargs.budget = default_budget();
  auto* validate = app.add_subcommand("validate", "Run a validation campaign and emit a JSON report");
  validate->add_option("campaign", vargs.campaign, "campaign name")
      ->required()
      ->check(CLI::IsMember(campaign_names()));
  validate->add_option("--n-max", vargs.n_max, "largest vertex count");
  validate->add_option("--m-max", vargs.m_max, "largest edge count");
  validate->add_option("--budget", vargs.budget, "solver budget per graph (env SRC_LAB_BUDGET)");
  validate->add_option("--workers", vargs.workers, "worker threads, 0 for all cores");
  validate->add_option("--input,-i", vargs.input, "graph6 file to use instead of enumeration");
  validate->add_option("--output,-o", vargs.output, "write the JSON report here instead of stdout");
  validate->add_option("--csv", vargs.csv, "also write a one-line CSV summary");
  validate->add_flag("--lax-paths", vargs.lax_paths, "classifier mutation: accept inner-rooted pendant paths");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return run_solve(input, mode, budget, emit_certificate, prune);
    if (*verify) return run_verify(input, coloring, mode);
    if (*color) return run_color(input, scheme);
    if (*classify_cmd) return run_classify(input, lax_paths);
    if (*linegraph) return run_linegraph(input);
    if (*enumerate) return run_enumerate(n_max, m_max, trees, unicyclic);
    if (*validate) return run_validate(vargs);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
