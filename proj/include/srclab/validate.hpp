#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "srclab/coloring.hpp"
#include "srclab/constructions.hpp"
#include "srclab/enumerate.hpp"
#include "srclab/graph.hpp"
#include "srclab/graph6.hpp"
#include "srclab/metrics.hpp"
#include "srclab/solver.hpp"
#include "srclab/structure.hpp"

namespace srclab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

using json = nlohmann::json;

enum class Outcome { Confirmed, Counterexample, SkippedBudget };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Confirmed: return "confirmed";
    case Outcome::Counterexample: return "counterexample";
    case Outcome::SkippedBudget: return "skipped: budget";
  }
  return "?";
}

struct GraphEntry {
  std::string graph6;
  int n = 0;
  int m = 0;
  json values = json::object();
  Outcome outcome = Outcome::Confirmed;
  std::vector<std::string> failed_checks;
  std::optional<EdgeColoring> certificate;  // colors of the graph named by graph6
};

struct Summary {
  int total = 0;
  int confirmations = 0;
  int counterexamples = 0;
  int budget_exceeded = 0;
  std::map<std::string, int> failures_by_check;

  bool ok() const { return counterexamples == 0; }
  bool complete() const { return budget_exceeded == 0; }
};

struct ValidationReport {
  std::string campaign;
  json params = json::object();
  std::vector<GraphEntry> per_graph;
  Summary summary;
  double elapsed_ms = 0.0;

  std::vector<const GraphEntry*> counterexamples() const {
    std::vector<const GraphEntry*> out;
    for (const auto& e : per_graph)
      if (e.outcome == Outcome::Counterexample) out.push_back(&e);
    return out;
  }

  json to_json(bool with_timing = true) const {
    json results = json::array();
    for (const auto& e : per_graph) {
      json item{{"graph6", e.graph6}, {"n", e.n}, {"m", e.m}, {"values", e.values}, {"verdict", to_string(e.outcome)}};
      if (!e.failed_checks.empty()) item["failed_checks"] = e.failed_checks;
      if (e.certificate) item["certificate"] = e.certificate->colors;
      results.push_back(std::move(item));
    }
    json summary_json{{"total", summary.total},
                      {"confirmations", summary.confirmations},
                      {"counterexamples", summary.counterexamples},
                      {"budget_exceeded", summary.budget_exceeded},
                      {"failures_by_check", summary.failures_by_check},
                      {"ok", summary.ok()},
                      {"complete", summary.complete()}};
    json env{{"version", kVersion}};
    if (with_timing) env["elapsed_ms"] = elapsed_ms;
    return json{{"schema_version", kReportSchemaVersion},
                {"campaign", campaign},
                {"params", params},
                {"results", std::move(results)},
                {"summary", std::move(summary_json)},
                {"environment", std::move(env)}};
  }

  std::string to_csv() const {
    std::ostringstream out;
    out << "campaign,total,confirmations,counterexamples,budget_exceeded,ok\n";
    out << campaign << ',' << summary.total << ',' << summary.confirmations << ',' << summary.counterexamples << ','
        << summary.budget_exceeded << ',' << (summary.ok() ? "true" : "false") << '\n';
    return out.str();
  }
};

// Memoized exact values shared across campaigns; safe to use from several workers.
class SolveCache {
 public:
  SolveResult src(const Graph& g, const SolveOptions& options) { return get(src_, g, options, &src_exact); }
  SolveResult rc(const Graph& g, const SolveOptions& options) { return get(rc_, g, options, &rc_exact); }

 private:
  using Table = std::map<std::string, SolveResult>;
  SolveResult get(Table& table, const Graph& g, const SolveOptions& options,
                  SolveResult (*solve)(const Graph&, const SolveOptions&)) {
    // keyed by graph6 plus edge order, since certificates index edges
    std::string key = emit_graph6(g);
    for (const auto& e : g.edges()) key += "," + std::to_string(e.u) + "-" + std::to_string(e.v);
    {
      std::lock_guard lock(mutex_);
      if (auto it = table.find(key); it != table.end()) return it->second;
    }
    auto result = solve(g, options);
    std::lock_guard lock(mutex_);
    table.emplace(key, result);
    return result;
  }

  std::mutex mutex_;
  Table src_, rc_;
};

struct CampaignOptions {
  int n_max = 7;
  int m_max = 10;
  SolveOptions solve{};
  ClassifyOptions classify{};
  unsigned workers = 0;                        // 0: hardware concurrency
  const std::vector<Graph>* source = nullptr;  // replaces enumeration when set
  SolveCache* cache = nullptr;
};

namespace detail {

struct CheckResult {
  std::vector<std::string> failed;
  json values = json::object();
  std::optional<EdgeColoring> certificate;
  bool relevant = true;  // false drops the graph from the report
};

inline std::vector<Graph> campaign_graphs(const CampaignOptions& options) {
  if (options.source) {
    std::vector<Graph> out;
    for (const auto& g : *options.source)
      if (g.n() >= 2 && is_connected(g)) out.push_back(g);
    return out;
  }
  return enumerate_connected_graphs(options.n_max, options.m_max);
}

inline SolveResult solve_src(const Graph& g, const CampaignOptions& options) {
  return options.cache ? options.cache->src(g, options.solve) : src_exact(g, options.solve);
}

inline SolveResult solve_rc(const Graph& g, const CampaignOptions& options) {
  return options.cache ? options.cache->rc(g, options.solve) : rc_exact(g, options.solve);
}

inline json labels_json(const std::vector<ClassLabel>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(to_string(l));
  return out;
}

// Runs `check` on every graph over a worker pool; entries keep input order.
inline ValidationReport run_campaign(const std::string& name, json params, const std::vector<Graph>& graphs,
                                     const CampaignOptions& options,
                                     const std::function<CheckResult(const Graph&)>& check) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::optional<GraphEntry>> slots(graphs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      const Graph& g = graphs[i];
      GraphEntry entry;
      entry.graph6 = emit_graph6(g);
      entry.n = g.n();
      entry.m = g.m();
      try {
        auto r = check(g);
        if (!r.relevant) continue;
        entry.values = std::move(r.values);
        entry.certificate = std::move(r.certificate);
        entry.failed_checks = std::move(r.failed);
        entry.outcome = entry.failed_checks.empty() ? Outcome::Confirmed : Outcome::Counterexample;
      } catch (const BudgetExceededError& e) {
        entry.outcome = Outcome::SkippedBudget;
        entry.values["upper_bound"] = e.best_known().bound;
        entry.values["examined"] = e.examined();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        continue;
      }
      slots[i] = std::move(entry);
    }
  };
  unsigned count = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, std::max<std::size_t>(graphs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  ValidationReport report;
  report.campaign = name;
  report.params = std::move(params);
  for (auto& slot : slots) {
    if (!slot) continue;
    ++report.summary.total;
    switch (slot->outcome) {
      case Outcome::Confirmed: ++report.summary.confirmations; break;
      case Outcome::Counterexample: ++report.summary.counterexamples; break;
      case Outcome::SkippedBudget: ++report.summary.budget_exceeded; break;
    }
    for (const auto& c : slot->failed_checks) ++report.summary.failures_by_check[c];
    report.per_graph.push_back(std::move(*slot));
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

inline json base_params(const CampaignOptions& o) {
  json p{{"n_max", o.n_max}, {"m_max", o.m_max}, {"budget", o.solve.budget}};
  if (o.source) p["source"] = "external";
  if (!o.classify.path_requires_endpoint_root) p["path_requires_endpoint_root"] = false;
  return p;
}

inline bool is_theorem1_member(const std::vector<ClassLabel>& labels) {
  return has_label(labels, ClassTag::C5) || has_label(labels, ClassTag::G1) || has_label(labels, ClassTag::G2) ||
         has_label(labels, ClassTag::G3);
}

}  // namespace detail

/// src = m iff tree; src != m-1; src = m-2 iff C5, G1, G2 or G3.
inline ValidationReport validate_theorem1(const CampaignOptions& options = {}) {
  const auto graphs = detail::campaign_graphs(options);
  return detail::run_campaign("theorem1", detail::base_params(options), graphs, options, [&](const Graph& g) {
    detail::CheckResult r;
    const auto solved = detail::solve_src(g, options);
    const auto labels = classify(g, options.classify);
    const int m = g.m();
    const bool tree = has_label(labels, ClassTag::Tree);
    const bool member = detail::is_theorem1_member(labels);
    r.values = {{"src", solved.value}, {"labels", detail::labels_json(labels)}};
    if ((solved.value == m) != tree) r.failed.push_back("tree_law");
    if (solved.value == m - 1) r.failed.push_back("gap");
    if ((solved.value == m - 2) != member) r.failed.push_back("characterization");
    r.certificate = solved.certificate;
    return r;
  });
}

/// src <= m - 2t* with equality iff GBar(t*); the packing coloring itself verifies.
inline ValidationReport validate_theorem2(const CampaignOptions& options = {}) {
  const auto graphs = detail::campaign_graphs(options);
  return detail::run_campaign("theorem2", detail::base_params(options), graphs, options, [&](const Graph& g) {
    detail::CheckResult r;
    const auto solved = detail::solve_src(g, options);
    const auto packing = max_edge_disjoint_triangles(g, true);
    const int bound = g.m() - 2 * packing.t();
    const auto labels = classify(g, options.classify);
    const auto gbar = gbar_label(labels);
    const bool in_class = gbar && *gbar == packing.t();
    r.values = {{"src", solved.value}, {"t_max", packing.t()}, {"bound", bound}, {"gbar", in_class}};
    if (solved.value > bound) r.failed.push_back("upper_bound");
    if ((solved.value == bound) != in_class) r.failed.push_back("equality_class");
    try {
      const auto c = triangle_packing_coloring(g, packing);
      if (c.color_count() != bound) r.failed.push_back("packing_color_count");
    } catch (const Error&) {
      r.failed.push_back("packing_coloring");
    }
    r.certificate = solved.certificate;
    return r;
  });
}

/// Shared-vertex patterns of the two smallest cycles stay within the allowed list.
inline ValidationReport validate_lemma1(const CampaignOptions& options = {}) {
  CampaignOptions o = options;
  o.m_max = o.n_max * (o.n_max - 1) / 2;
  const auto graphs = detail::campaign_graphs(o);
  json params{{"n_max", o.n_max}};
  return detail::run_campaign("lemma1", params, graphs, o, [&](const Graph& g) {
    detail::CheckResult r;
    const auto gir = girth(g);
    if (!gir || *gir > 5 || g.m() < g.n() + 1) {  // need girth 3..5 and two cycles
      r.relevant = false;
      return r;
    }
    const auto cfg = lemma1_configuration(g);
    if (cfg.common_vertices < 2) {
      r.relevant = false;
      return r;
    }
    r.values = {{"girth", cfg.girth},
                {"pattern", to_string(cfg.pattern)},
                {"common_vertices", cfg.common_vertices},
                {"common_edges", cfg.common_edges},
                {"second_length", cfg.second_length}};
    if (!lemma1_allows(cfg.girth, cfg.pattern)) r.failed.push_back("pattern");
    return r;
  });
}

inline std::vector<Graph> builtin_cubic_graphs() {
  return {named::complete(4), named::complete_bipartite(3, 3), named::prism()};
}

/// The star triangles of L(G) give an n-color strong rainbow coloring for cubic G.
inline ValidationReport validate_corollary1(const std::vector<Graph>& cubic, const CampaignOptions& options = {}) {
  json params{{"graphs", cubic.size()}, {"budget", options.solve.budget}};
  CampaignOptions o = options;
  return detail::run_campaign("corollary1", params, cubic, o, [&](const Graph& g) {
    detail::CheckResult r;
    if (!is_cubic(g) || !is_connected(g)) throw Error(ErrorKind::NotCubic, emit_graph6(g) + " is not connected cubic");
    const auto line = line_graph(g);
    const auto stars = star_cliques(g);
    if (!is_clique_decomposition(line, stars)) r.failed.push_back("clique_decomposition");
    const auto packing = star_triangle_packing(g, line);
    r.values = {{"line_graph6", emit_graph6(line)}, {"line_n", line.n()}, {"line_m", line.m()}, {"t", packing.t()}};
    try {
      const auto c = triangle_packing_coloring(line, packing);
      r.values["colors"] = c.color_count();
      if (c.color_count() != g.n()) r.failed.push_back("color_count");
      r.certificate = c;
    } catch (const Error&) {
      r.failed.push_back("verification");
    }
    if (g.n() == 4) {
      const auto solved = src_exact(line, o.solve);
      r.values["src_line"] = solved.value;
      if (solved.value > g.n()) r.failed.push_back("exact_bound");
    }
    return r;
  });
}

/// rc = 2 iff src = 2.
inline ValidationReport validate_proposition13(const CampaignOptions& options = {}) {
  const auto graphs = detail::campaign_graphs(options);
  return detail::run_campaign("proposition13", detail::base_params(options), graphs, options, [&](const Graph& g) {
    detail::CheckResult r;
    const auto src = detail::solve_src(g, options);
    const auto rc = detail::solve_rc(g, options);
    r.values = {{"src", src.value}, {"rc", rc.value}};
    if ((rc.value == 2) != (src.value == 2)) r.failed.push_back("rc2_iff_src2");
    if (rc.value > src.value || rc.value < diameter(g) || src.value > g.m()) r.failed.push_back("sandwich");
    r.certificate = src.certificate;
    return r;
  });
}

namespace detail {

inline bool for_each_coloring(int m, int max_colors, const std::function<bool(const std::vector<Color>&)>& visit) {
  std::vector<Color> colors(m, 0);
  std::function<bool(int, int)> rec = [&](int pos, int used) {
    if (pos == m) return visit(colors);
    for (Color c = 0; c < std::min(used + 1, max_colors); ++c) {
      colors[pos] = c;
      if (!rec(pos + 1, c == used ? used + 1 : used)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

}  // namespace detail

/// Bridges differ in every strong rainbow coloring we produce or can enumerate.
inline ValidationReport validate_observation1(const CampaignOptions& options = {}) {
  const auto graphs = detail::campaign_graphs(options);
  return detail::run_campaign("observation1", detail::base_params(options), graphs, options, [&](const Graph& g) {
    detail::CheckResult r;
    const auto solved = detail::solve_src(g, options);
    int certificates = 0;
    auto audit = [&](const std::string& what, const EdgeColoring& c) {
      ++certificates;
      if (!cut_edge_colors_distinct(g, c)) r.failed.push_back(what);
    };
    audit("solver", solved.certificate);
    audit("upper_bound", src_upper_via_construction(g).certificate);
    audit("triangle_packing", triangle_packing_coloring(g, max_edge_disjoint_triangles(g, true)));
    if (is_unicyclic(g)) audit("unicyclic", unicyclic_coloring(g));
    for (const auto& variant : claim2_variants()) {
      try {
        audit("scheme " + variant, claim2_scheme_coloring(g, variant));
      } catch (const Error&) {
      }
    }
    int sampled = 0;
    if (g.m() <= 7) {
      const StrongRainbowChecker checker(g);
      detail::for_each_coloring(g.m(), 3, [&](const std::vector<Color>& colors) {
        if (checker.passes(colors, 3)) {
          ++sampled;
          if (!cut_edge_colors_distinct(g, EdgeColoring(colors))) {
            r.failed.push_back("enumerated");
            return false;
          }
        }
        return true;
      });
    }
    r.values = {{"src", solved.value}, {"certificates", certificates}, {"enumerated_strong", sampled}};
    r.certificate = solved.certificate;
    return r;
  });
}

/// Every inclusion-maximal triangle packing yields a strong rainbow coloring.
inline ValidationReport validate_fact1(const CampaignOptions& options = {}) {
  CampaignOptions o = options;
  if (!o.source) o.m_max = o.n_max * (o.n_max - 1) / 2;
  const auto graphs = detail::campaign_graphs(o);
  json params{{"n_max", o.n_max}, {"m_max", o.m_max}};
  return detail::run_campaign("fact1", params, graphs, o, [&](const Graph& g) {
    detail::CheckResult r;
    const StrongRainbowChecker checker(g);
    const auto packings = maximal_triangle_packings(g);
    int failures = 0;
    for (const auto& p : packings) {
      std::vector<int> owner(g.m(), -1);
      for (int i = 0; i < p.t(); ++i)
        for (EdgeId e : p.triangles[i].edges) owner[e] = i;
      std::vector<Color> colors(g.m());
      int next = p.t();
      for (EdgeId e = 0; e < g.m(); ++e) colors[e] = owner[e] >= 0 ? owner[e] : next++;
      if (next != g.m() - 2 * p.t() || !checker.passes(colors, next)) ++failures;
    }
    r.values = {{"maximal_packings", packings.size()}, {"failures", failures}};
    if (failures) r.failed.push_back("packing_coloring");
    return r;
  });
}

/// unicyclic_coloring against the exact value on every unicyclic graph with m <= m_max.
inline ValidationReport validate_unicyclic(const CampaignOptions& options = {}) {
  std::vector<Graph> graphs;
  if (options.source) {
    for (const auto& g : *options.source)
      if (is_unicyclic(g)) graphs.push_back(g);
  } else {
    for (int n = 3; n <= std::min(options.m_max, kCanonicalMaxVertices); ++n) {
      auto layer = enumerate_unicyclic(n);
      graphs.insert(graphs.end(), layer.begin(), layer.end());
    }
  }
  json params{{"m_max", options.m_max}, {"budget", options.solve.budget}};
  return detail::run_campaign("unicyclic", params, graphs, options, [&](const Graph& g) {
    detail::CheckResult r;
    const auto plan = unicyclic_plan(g);
    const auto coloring = unicyclic_coloring(g);
    const int k = pendant_profile(g).k();
    const auto labels = classify(g, options.classify);
    const bool member = has_label(labels, ClassTag::G1) || has_label(labels, ClassTag::G2) ||
                        has_label(labels, ClassTag::G3);
    const int count = coloring.color_count();
    r.values = {{"cycle_length", k}, {"case", plan.case_name}, {"colors", count}, {"labels", detail::labels_json(labels)}};
    if (count != plan.expected_colors) r.failed.push_back("case_count");
    if (k <= 5) {
      const auto solved = detail::solve_src(g, options);
      r.values["src"] = solved.value;
      if (member && count != solved.value) r.failed.push_back("member_optimal");
      if (!member && (count < solved.value || count > g.m() - 2)) r.failed.push_back("nonmember_range");
      r.certificate = solved.certificate;
    }
    return r;
  });
}

inline const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names = {"theorem1",      "theorem2",     "lemma1", "corollary1",
                                                 "proposition13", "observation1", "fact1",  "unicyclic"};
  return names;
}

}  // namespace srclab
