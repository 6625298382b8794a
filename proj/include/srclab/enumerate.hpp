#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "srclab/canonical.hpp"
#include "srclab/error.hpp"
#include "srclab/graph.hpp"
#include "srclab/graph6.hpp"
#include "srclab/metrics.hpp"

namespace srclab {

inline constexpr int kEnumerationMaxVertices = 8;

namespace detail {

inline Graph with_edge(const Graph& g, VertexId a, VertexId b) {
  auto pairs = g.edge_pairs();
  pairs.emplace_back(a, b);
  return Graph::from_edge_list(g.n(), pairs);
}

}  // namespace detail

/// One canonical representative per isomorphism class of connected graphs with
/// 2 <= n <= n_max and m <= m_max, grown one edge at a time from the empty
/// graph. Ordered by (n, m, canonical key).
inline std::vector<Graph> enumerate_connected_graphs(int n_max, int m_max) {
  if (n_max > kEnumerationMaxVertices) {
    throw Error(ErrorKind::TooLarge, "enumeration supports n_max <= 8, got " + std::to_string(n_max));
  }
  std::vector<Graph> out;
  for (int n = 2; n <= n_max; ++n) {
    std::set<std::string> layer{canonical_form(Graph::from_edge_list(n, {})).key};
    const int max_edges = std::min(m_max, n * (n - 1) / 2);
    for (int m = 0; m <= max_edges; ++m) {
      for (const auto& key : layer) {
        const auto g = parse_graph6(key);
        if (m >= n - 1 && is_connected(g)) out.push_back(g);
      }
      if (m == max_edges) break;
      std::set<std::string> next;
      for (const auto& key : layer) {
        const auto g = parse_graph6(key);
        for (VertexId a = 0; a < n; ++a)
          for (VertexId b = a + 1; b < n; ++b)
            if (!g.adjacent(a, b)) next.insert(canonical_form(detail::with_edge(g, a, b)).key);
      }
      layer = std::move(next);
    }
  }
  return out;
}

/// Trees on exactly n vertices (n <= 10), one per isomorphism class.
inline std::vector<Graph> enumerate_trees(int n) {
  if (n > kCanonicalMaxVertices) throw Error(ErrorKind::TooLarge, "trees supported up to n = 10");
  if (n < 2) return {};
  std::set<std::string> layer{canonical_form(Graph::from_edge_list(2, {{0, 1}})).key};
  for (int size = 3; size <= n; ++size) {
    std::set<std::string> next;
    for (const auto& key : layer) {
      const auto g = parse_graph6(key);
      for (VertexId v = 0; v < g.n(); ++v) {
        auto pairs = g.edge_pairs();
        pairs.emplace_back(v, g.n());
        next.insert(canonical_form(Graph::from_edge_list(g.n() + 1, pairs)).key);
      }
    }
    layer = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& key : layer) out.push_back(parse_graph6(key));
  return out;
}

/// Connected unicyclic graphs on exactly n vertices (3 <= n <= 10).
inline std::vector<Graph> enumerate_unicyclic(int n) {
  std::set<std::string> keys;
  for (const auto& tree : enumerate_trees(n)) {
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (!tree.adjacent(a, b)) keys.insert(canonical_form(detail::with_edge(tree, a, b)).key);
  }
  std::vector<Graph> out;
  for (const auto& key : keys) out.push_back(parse_graph6(key));
  return out;
}

}  // namespace srclab
