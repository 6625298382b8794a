#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srclab/error.hpp"

namespace srclab {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool has(VertexId w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Simple undirected graph. Edge ids are positions in edges() and never change;
// the value is immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from a pair list; duplicate pairs collapse onto their first occurrence.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
    if (n < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.index_.assign(static_cast<std::size_t>(n) * n, -1);
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" +
                        std::to_string(n));
      }
      if (a == b) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(a));
      if (g.index_[static_cast<std::size_t>(a) * n + b] >= 0) continue;
      const EdgeId id = static_cast<EdgeId>(g.edges_.size());
      g.edges_.push_back({std::min(a, b), std::max(a, b)});
      g.index_[static_cast<std::size_t>(a) * n + b] = id;
      g.index_[static_cast<std::size_t>(b) * n + a] = id;
      g.adj_[a].push_back({b, id});
      g.adj_[b].push_back({a, id});
    }
    for (auto& list : g.adj_) {
      std::sort(list.begin(), list.end(),
                [](const Incidence& x, const Incidence& y) { return x.neighbor < y.neighbor; });
    }
    return g;
  }

  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  /// Neighbors sorted by vertex id, each with the connecting edge id.
  std::span<const Incidence> incident(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(VertexId a, VertexId b) const { return edge_id(a, b).has_value(); }

  std::optional<EdgeId> edge_id(VertexId a, VertexId b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
    const EdgeId id = index_[static_cast<std::size_t>(a) * n_ + b];
    if (id < 0) return std::nullopt;
    return id;
  }

  std::vector<std::pair<int, int>> edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  /// Same graph with vertices renamed by `perm` (old id -> new id); edge order kept.
  Graph relabeled(std::span<const int> perm) const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& e : edges_) pairs.emplace_back(perm[e.u], perm[e.v]);
    return from_edge_list(n_, pairs);
  }

  /// Edge sets compared as unordered pairs, ignoring edge order.
  bool same_edge_set(const Graph& other) const {
    if (n_ != other.n_ || m() != other.m()) return false;
    for (const auto& e : edges_) {
      if (!other.adjacent(e.u, e.v)) return false;
    }
    return true;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<EdgeId> index_;
};

// Small named graphs used all over the tests and the CLI.
namespace named {

inline Graph path(int vertices) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < vertices; ++i) pairs.emplace_back(i, i + 1);
  return Graph::from_edge_list(vertices, pairs);
}

inline Graph cycle(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(i, (i + 1) % k);
  return Graph::from_edge_list(k, pairs);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return Graph::from_edge_list(n, pairs);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, pairs);
}

inline Graph star(int leaves) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, pairs);
}

// Two triangles sharing vertex 0.
inline Graph bowtie() {
  return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edge_list(10, pairs);
}

// Triangular prism C3 x K2.
inline Graph prism() {
  return Graph::from_edge_list(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace named

}  // namespace srclab
