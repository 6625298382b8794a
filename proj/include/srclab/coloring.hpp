#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "srclab/error.hpp"
#include "srclab/graph.hpp"
#include "srclab/metrics.hpp"

namespace srclab {

using Color = int;

// Total edge coloring: colors[e] is the label of edge e. Labels are opaque
// nonnegative integers; nothing assumes they are contiguous.
struct EdgeColoring {
  std::vector<Color> colors;

  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<Color> c) : colors(std::move(c)) {}

  int size() const { return static_cast<int>(colors.size()); }
  Color operator[](EdgeId e) const { return colors[e]; }

  int color_count() const {
    auto sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  /// Labels renamed to 0,1,2,... in order of first use along the edge order.
  EdgeColoring normalized() const {
    std::unordered_map<Color, Color> rename;
    std::vector<Color> out;
    out.reserve(colors.size());
    for (Color c : colors) {
      auto [it, inserted] = rename.emplace(c, static_cast<Color>(rename.size()));
      out.push_back(it->second);
    }
    return EdgeColoring(std::move(out));
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

struct Verdict {
  bool ok = true;
  std::optional<std::pair<VertexId, VertexId>> witness;  // set iff !ok

  static Verdict pass() { return {}; }
  static Verdict fail(VertexId u, VertexId v) { return {false, std::make_pair(u, v)}; }
};

inline void require_matching(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.m()) {
    throw Error(ErrorKind::ColoringSizeMismatch,
                "coloring has " + std::to_string(c.size()) + " entries, graph has " +
                    std::to_string(g.m()) + " edges");
  }
}

inline bool is_rainbow_path(const Graph& g, const EdgeColoring& c, std::span<const VertexId> path) {
  require_matching(g, c);
  std::vector<Color> seen;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto e = g.edge_id(path[i], path[i + 1]);
    if (!e) {
      throw Error(ErrorKind::NotAPath, "vertices " + std::to_string(path[i]) + " and " +
                                           std::to_string(path[i + 1]) + " are not adjacent");
    }
    seen.push_back(c[*e]);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// Per-graph geodesic index reused across many colorings. Colorings handed to the
// fast paths must already be dense (labels in [0, color_bound)). Keeps scratch
// state, so give each thread its own instance.
class StrongRainbowChecker {
 public:
  explicit StrongRainbowChecker(const Graph& g) : graph_(&g) {
    require_connected(g, "strong rainbow connectivity needs a connected graph");
    dags_.reserve(g.n());
    for (VertexId s = 0; s < g.n(); ++s) dags_.push_back(shortest_path_dag(g, s));
    for (VertexId u = 0; u < g.n(); ++u)
      for (VertexId v = u + 1; v < g.n(); ++v)
        if (dags_[u].dist[v] > 1) far_pairs_.emplace_back(u, v);
  }

  const Graph& graph() const { return *graph_; }
  const ShortestPathDag& dag(VertexId s) const { return dags_[s]; }

  bool has_rainbow_geodesic(std::span<const Color> dense, int color_bound, VertexId u, VertexId v) const {
    if (u == v) return true;
    used_.assign(static_cast<std::size_t>(color_bound), 0);
    return descend(dags_[u], dense, v);
  }

  /// First failing pair in lexicographic order, or nullopt.
  std::optional<std::pair<VertexId, VertexId>> first_failure(std::span<const Color> dense, int color_bound) const {
    for (auto [u, v] : far_pairs_) {
      if (!has_rainbow_geodesic(dense, color_bound, u, v)) return std::make_pair(u, v);
    }
    return std::nullopt;
  }

  bool passes(std::span<const Color> dense, int color_bound) const {
    return !first_failure(dense, color_bound).has_value();
  }

  Verdict check(const EdgeColoring& c) const {
    require_matching(*graph_, c);
    const auto dense = c.normalized();
    const auto failure = first_failure(dense.colors, dense.color_count());
    if (failure) return Verdict::fail(failure->first, failure->second);
    return Verdict::pass();
  }

 private:
  // Walks parent links from w back to the source with no color repeated.
  bool descend(const ShortestPathDag& dag, std::span<const Color> dense, VertexId w) const {
    if (w == dag.source) return true;
    for (const auto& p : dag.parents[w]) {
      const Color col = dense[p.edge];
      if (used_[col]) continue;
      used_[col] = 1;
      const bool found = descend(dag, dense, p.neighbor);
      used_[col] = 0;
      if (found) return true;
    }
    return false;
  }

  const Graph* graph_;
  std::vector<ShortestPathDag> dags_;
  std::vector<std::pair<VertexId, VertexId>> far_pairs_;
  mutable std::vector<char> used_;
};

inline bool has_rainbow_geodesic(const Graph& g, const EdgeColoring& c, VertexId u, VertexId v) {
  require_matching(g, c);
  StrongRainbowChecker checker(g);
  const auto dense = c.normalized();
  return checker.has_rainbow_geodesic(dense.colors, dense.color_count(), u, v);
}

inline Verdict is_strongly_rainbow_connected(const Graph& g, const EdgeColoring& c) {
  return StrongRainbowChecker(g).check(c);
}

// Rainbow paths of any length. A rainbow path has at most color_count edges,
// which bounds the depth of the search on its own.
class RainbowChecker {
 public:
  explicit RainbowChecker(const Graph& g) : graph_(&g) {
    require_connected(g, "rainbow connectivity needs a connected graph");
  }

  std::optional<std::pair<VertexId, VertexId>> first_failure(std::span<const Color> dense, int color_bound) const {
    const Graph& g = *graph_;
    for (VertexId u = 0; u < g.n(); ++u) {
      reached_.assign(g.n(), 0);
      on_path_.assign(g.n(), 0);
      used_.assign(static_cast<std::size_t>(color_bound), 0);
      reached_[u] = 1;
      missing_ = 0;
      for (VertexId v = u + 1; v < g.n(); ++v) ++missing_;
      // neighbors are trivially reachable
      for (const auto& inc : g.incident(u)) {
        if (inc.neighbor > u && !reached_[inc.neighbor]) --missing_;
        reached_[inc.neighbor] = 1;
      }
      if (missing_ > 0) {
        on_path_[u] = 1;
        explore(dense, u, u);
      }
      for (VertexId v = u + 1; v < g.n(); ++v)
        if (!reached_[v]) return std::make_pair(u, v);
    }
    return std::nullopt;
  }

  bool passes(std::span<const Color> dense, int color_bound) const {
    return !first_failure(dense, color_bound).has_value();
  }

  Verdict check(const EdgeColoring& c) const {
    require_matching(*graph_, c);
    const auto dense = c.normalized();
    const auto failure = first_failure(dense.colors, dense.color_count());
    if (failure) return Verdict::fail(failure->first, failure->second);
    return Verdict::pass();
  }

 private:
  void explore(std::span<const Color> dense, VertexId source, VertexId v) const {
    for (const auto& inc : graph_->incident(v)) {
      if (missing_ == 0) return;
      const VertexId w = inc.neighbor;
      const Color col = dense[inc.edge];
      if (on_path_[w] || used_[col]) continue;
      if (!reached_[w]) {
        reached_[w] = 1;
        if (w > source) --missing_;
      }
      on_path_[w] = 1;
      used_[col] = 1;
      explore(dense, source, w);
      used_[col] = 0;
      on_path_[w] = 0;
    }
  }

  const Graph* graph_;
  mutable std::vector<char> reached_, on_path_, used_;
  mutable int missing_ = 0;
};

inline Verdict is_rainbow_connected(const Graph& g, const EdgeColoring& c) {
  return RainbowChecker(g).check(c);
}

/// Every pair of bridges carries two different colors.
inline bool cut_edge_colors_distinct(const Graph& g, const EdgeColoring& c) {
  require_matching(g, c);
  const auto bridge_ids = blocks(g).bridges;
  std::vector<Color> seen;
  for (EdgeId e : bridge_ids) seen.push_back(c[e]);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

inline std::string to_text(const EdgeColoring& c) {
  std::ostringstream out;
  for (int i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
  return out.str();
}

inline EdgeColoring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  std::vector<Color> colors;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value < 0) {
      throw Error(ErrorKind::Usage, "coloring entry '" + token + "' is not a nonnegative integer");
    }
    colors.push_back(static_cast<Color>(value));
  }
  return EdgeColoring(std::move(colors));
}

}  // namespace srclab
