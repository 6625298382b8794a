#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "srclab/coloring.hpp"
#include "srclab/constructions.hpp"
#include "srclab/error.hpp"
#include "srclab/graph.hpp"
#include "srclab/metrics.hpp"
#include "srclab/structure.hpp"

namespace srclab {

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

/// Default search limit, overridable through SRC_LAB_BUDGET.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("SRC_LAB_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // malformed values fall through to the default
    }
  }
  return kDefaultBudget;
}

struct SolveOptions {
  std::uint64_t budget = default_budget();  // complete colorings examined
  // Reject partial colorings that already repeat a color on a unique geodesic.
  // Sound for src only.
  bool prune_partial = false;
};

struct SolveResult {
  int value = 0;
  EdgeColoring certificate;
  std::uint64_t examined = 0;
  double ms = 0.0;
};

struct UpperBound {
  int bound = 0;
  EdgeColoring certificate;
  std::string scheme;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(UpperBound best, std::uint64_t examined)
      : Error(ErrorKind::BudgetExceeded, "search stopped after " + std::to_string(examined) +
                                             " colorings; best known upper bound " + std::to_string(best.bound) +
                                             " (not certified minimal)"),
        best_(std::move(best)),
        examined_(examined) {}

  const UpperBound& best_known() const { return best_; }
  std::uint64_t examined() const { return examined_; }

 private:
  UpperBound best_;
  std::uint64_t examined_;
};

/// Cheapest verified coloring among all constructions that apply to g.
inline UpperBound src_upper_via_construction(const Graph& g) {
  require_connected(g, "src_upper_via_construction needs a connected graph");
  UpperBound best;
  best.bound = g.m();
  std::vector<Color> fresh(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) fresh[e] = e;
  best.certificate = EdgeColoring(std::move(fresh));
  best.scheme = "AllFresh";
  auto consider = [&](const std::string& name, auto&& build) {
    try {
      EdgeColoring c = build();
      const int count = c.color_count();
      if (count < best.bound && is_strongly_rainbow_connected(g, c).ok) {
        best = {count, std::move(c), name};
      }
    } catch (const Error&) {
      // construction does not apply to this graph
    }
  };
  if (g.m() == 0) return best;
  consider("TrianglePacking", [&] { return triangle_packing_coloring(g, max_edge_disjoint_triangles(g, true)); });
  if (girth(g)) consider("CyclePlusFresh", [&] { return cycle_plus_fresh(g); });
  if (is_unicyclic(g)) consider("Unicyclic", [&] { return unicyclic_coloring(g); });
  for (const auto& variant : claim2_variants()) {
    consider("Claim2Config(" + variant + ")", [&] { return claim2_scheme_coloring(g, variant); });
  }
  return best;
}

namespace detail {

// Restricted-growth search over colorings with exactly k classes. Bridges come
// first and take labels 0..b-1 (they must differ); the remaining edges may
// reuse any existing label or open the next one.
template <typename Checker>
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, const Checker& checker, const SolveOptions& options)
      : g_(g), checker_(checker), options_(options) {
    const auto bridge_ids = blocks(g).bridges;
    std::vector<char> is_bridge(g.m(), 0);
    for (EdgeId e : bridge_ids) is_bridge[e] = 1;
    order_ = bridge_ids;
    for (EdgeId e = 0; e < g.m(); ++e)
      if (!is_bridge[e]) order_.push_back(e);
    bridge_count_ = static_cast<int>(bridge_ids.size());
    colors_.assign(g.m(), -1);
    if (options_.prune_partial) build_conflicts();
  }

  int bridge_count() const { return bridge_count_; }
  std::uint64_t examined() const { return examined_; }

  /// A coloring with exactly k classes that passes the checker, or nullopt.
  std::optional<EdgeColoring> solve_with(int k) {
    if (k < bridge_count_ || k > g_.m()) return std::nullopt;
    std::fill(colors_.begin(), colors_.end(), -1);
    for (int i = 0; i < bridge_count_; ++i) colors_[order_[i]] = i;
    found_.reset();
    k_ = k;
    extend(bridge_count_, bridge_count_);
    return found_;
  }

 private:
  void build_conflicts() {
    conflicts_.assign(g_.m(), {});
    for (VertexId u = 0; u < g_.n(); ++u) {
      const auto dag = shortest_path_dag(g_, u);
      for (VertexId v = u + 1; v < g_.n(); ++v) {
        const auto paths = all_geodesics(dag, v);
        if (paths.size() != 1 || paths[0].size() < 3) continue;
        std::vector<EdgeId> es;
        for (std::size_t i = 0; i + 1 < paths[0].size(); ++i) es.push_back(*g_.edge_id(paths[0][i], paths[0][i + 1]));
        for (EdgeId a : es)
          for (EdgeId b : es)
            if (a != b) conflicts_[a].push_back(b);
      }
    }
    for (auto& list : conflicts_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  bool clashes(EdgeId e, Color c) const {
    for (EdgeId f : conflicts_[e])
      if (colors_[f] == c) return true;
    return false;
  }

  void extend(int position, int used) {
    if (found_) return;
    const int total = static_cast<int>(order_.size());
    if (position == total) {
      if (used != k_) return;
      if (++examined_ > options_.budget) throw budget_signal{};
      if (checker_.passes(colors_, k_)) found_ = EdgeColoring(colors_);
      return;
    }
    if (total - position < k_ - used) return;  // cannot reach k classes any more
    const EdgeId e = order_[position];
    const int limit = std::min(used + 1, k_);
    for (Color c = 0; c < limit && !found_; ++c) {
      if (options_.prune_partial && clashes(e, c)) continue;
      colors_[e] = c;
      extend(position + 1, c == used ? used + 1 : used);
      colors_[e] = -1;
    }
  }

 public:
  struct budget_signal {};

 private:
  const Graph& g_;
  const Checker& checker_;
  SolveOptions options_;
  std::vector<EdgeId> order_;
  std::vector<std::vector<EdgeId>> conflicts_;
  std::vector<Color> colors_;
  std::optional<EdgeColoring> found_;
  int bridge_count_ = 0;
  int k_ = 0;
  std::uint64_t examined_ = 0;
};

template <typename Checker>
SolveResult exact_connection_number(const Graph& g, const SolveOptions& options) {
  require_connected(g, "exact solve needs a connected graph");
  const auto started = std::chrono::steady_clock::now();
  SolveResult result;
  if (g.n() == 1) return result;  // one vertex: nothing to connect
  const Checker checker(g);
  PartitionSearch<Checker> search(g, checker, options);
  try {
    for (int k = std::max(diameter(g), 1); k <= g.m(); ++k) {
      if (auto found = search.solve_with(k)) {
        result.value = k;
        result.certificate = std::move(*found);
        break;
      }
    }
  } catch (const typename PartitionSearch<Checker>::budget_signal&) {
    throw BudgetExceededError(src_upper_via_construction(g), search.examined());
  }
  result.examined = search.examined();
  result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace detail

/// Strong rainbow connection number with a minimum certificate.
inline SolveResult src_exact(const Graph& g, const SolveOptions& options = {}) {
  return detail::exact_connection_number<StrongRainbowChecker>(g, options);
}

/// Rainbow connection number with a minimum certificate. Partial pruning is
/// ignored: a rainbow path may avoid the unique geodesic.
inline SolveResult rc_exact(const Graph& g, const SolveOptions& options = {}) {
  SolveOptions plain = options;
  plain.prune_partial = false;
  return detail::exact_connection_number<RainbowChecker>(g, plain);
}

}  // namespace srclab
