#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "srclab/error.hpp"
#include "srclab/graph.hpp"

namespace srclab {

inline constexpr int kUnreachable = -1;

inline std::vector<int> distances(const Graph& g, VertexId s) {
  if (s < 0 || s >= g.n()) throw Error(ErrorKind::VertexOutOfRange, "source " + std::to_string(s));
  std::vector<int> dist(g.n(), kUnreachable);
  std::deque<VertexId> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(v)) {
      if (dist[inc.neighbor] == kUnreachable) {
        dist[inc.neighbor] = dist[v] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return false;
  const auto dist = distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, what);
}

inline int diameter(const Graph& g) {
  require_connected(g, "diameter needs a connected, nonempty graph");
  int best = 0;
  for (VertexId s = 0; s < g.n(); ++s) {
    const auto dist = distances(g, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

/// Shortest cycle length, or nullopt for a forest.
inline std::optional<int> girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (VertexId root = 0; root < g.n(); ++root) {
    std::vector<int> dist(g.n(), kUnreachable);
    std::vector<EdgeId> via(g.n(), -1);
    std::deque<VertexId> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(v)) {
        if (inc.edge == via[v]) continue;
        if (dist[inc.neighbor] == kUnreachable) {
          dist[inc.neighbor] = dist[v] + 1;
          via[inc.neighbor] = inc.edge;
          queue.push_back(inc.neighbor);
        } else {
          best = std::min(best, dist[v] + dist[inc.neighbor] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

/// All geodesics out of `source`: parents[w] lists every (v, vw) with dist[v] + 1 == dist[w].
struct ShortestPathDag {
  VertexId source = 0;
  std::vector<int> dist;
  std::vector<std::vector<Incidence>> parents;
};

inline ShortestPathDag shortest_path_dag(const Graph& g, VertexId s) {
  ShortestPathDag dag;
  dag.source = s;
  dag.dist = distances(g, s);
  dag.parents.assign(g.n(), {});
  for (VertexId w = 0; w < g.n(); ++w) {
    if (dag.dist[w] <= 0) continue;
    for (const auto& inc : g.incident(w)) {
      if (dag.dist[inc.neighbor] == dag.dist[w] - 1) dag.parents[w].push_back(inc);
    }
  }
  return dag;
}

/// Every source -> target geodesic as a vertex sequence starting at the source.
inline std::vector<std::vector<VertexId>> all_geodesics(const ShortestPathDag& dag, VertexId target) {
  std::vector<std::vector<VertexId>> out;
  if (dag.dist[target] == kUnreachable) return out;
  std::vector<VertexId> stack{target};
  std::function<void(VertexId)> walk = [&](VertexId v) {
    if (v == dag.source) {
      out.emplace_back(stack.rbegin(), stack.rend());
      return;
    }
    for (const auto& p : dag.parents[v]) {
      stack.push_back(p.neighbor);
      walk(p.neighbor);
      stack.pop_back();
    }
  };
  walk(target);
  return out;
}

// A simple cycle. `vertices` starts at its least vertex and heads toward the
// smaller of that vertex's two cycle neighbors; `edges` is sorted by id.
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(vertices.size()); }
  bool contains_vertex(VertexId v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }
  bool contains_edge(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }
  friend bool operator==(const Cycle& a, const Cycle& b) { return a.edges == b.edges; }
};

/// Cycles with exactly `length` vertices, ordered by their sorted edge-id sequence.
inline std::vector<Cycle> cycles_of_length(const Graph& g, int length) {
  std::vector<Cycle> out;
  if (length < 3 || length > g.n()) return out;
  std::vector<VertexId> path;
  std::vector<char> on_path(g.n(), 0);
  std::function<void(VertexId)> extend = [&](VertexId v) {
    const VertexId start = path.front();
    if (static_cast<int>(path.size()) == length) {
      // each cycle is found twice; keep the orientation with the smaller second vertex
      if (g.adjacent(v, start) && path[1] < path.back()) {
        Cycle c;
        c.vertices = path;
        for (int i = 0; i < length; ++i) {
          c.edges.push_back(*g.edge_id(path[i], path[(i + 1) % length]));
        }
        std::sort(c.edges.begin(), c.edges.end());
        out.push_back(std::move(c));
      }
      return;
    }
    for (const auto& inc : g.incident(v)) {
      const VertexId w = inc.neighbor;
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend(w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (VertexId s = 0; s < g.n(); ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.edges < b.edges; });
  return out;
}

/// Every simple cycle, shortest first, ties by sorted edge ids.
inline std::vector<Cycle> all_cycles(const Graph& g) {
  std::vector<Cycle> out;
  for (int len = 3; len <= g.n(); ++len) {
    auto layer = cycles_of_length(g, len);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

/// A shortest cycle and the shortest other cycle, both under the edge-id tie-break.
inline std::optional<std::pair<Cycle, Cycle>> smallest_two_cycles(const Graph& g) {
  std::vector<Cycle> found;
  for (int len = 3; len <= g.n() && found.size() < 2; ++len) {
    auto layer = cycles_of_length(g, len);
    for (auto& c : layer) {
      found.push_back(std::move(c));
      if (found.size() == 2) break;
    }
  }
  if (found.size() < 2) return std::nullopt;
  return std::make_pair(std::move(found[0]), std::move(found[1]));
}

/// Smallest cycle under the same tie-break, nullopt on a forest.
inline std::optional<Cycle> smallest_cycle(const Graph& g) {
  for (int len = 3; len <= g.n(); ++len) {
    auto layer = cycles_of_length(g, len);
    if (!layer.empty()) return std::move(layer.front());
  }
  return std::nullopt;
}

struct BlockDecomposition {
  std::vector<std::vector<EdgeId>> blocks;  // each sorted; blocks ordered by first edge id
  std::vector<VertexId> cut_vertices;
  std::vector<EdgeId> bridges;
};

inline BlockDecomposition blocks(const Graph& g) {
  require_connected(g, "block decomposition needs a connected graph");
  BlockDecomposition result;
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<EdgeId> edge_stack;
  int timer = 0;

  std::function<void(VertexId, EdgeId)> dfs = [&](VertexId v, EdgeId via) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (const auto& inc : g.incident(v)) {
      const VertexId w = inc.neighbor;
      if (inc.edge == via) continue;
      if (disc[w] == -1) {
        ++children;
        edge_stack.push_back(inc.edge);
        dfs(w, inc.edge);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (via != -1 || children > 1) is_cut[v] = 1;
          std::vector<EdgeId> block;
          while (true) {
            const EdgeId e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == inc.edge) break;
          }
          std::sort(block.begin(), block.end());
          result.blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        low[v] = std::min(low[v], disc[w]);
        edge_stack.push_back(inc.edge);
      }
    }
  };
  if (n > 0) dfs(0, -1);

  std::sort(result.blocks.begin(), result.blocks.end());
  for (VertexId v = 0; v < n; ++v) {
    if (is_cut[v]) result.cut_vertices.push_back(v);
  }
  for (const auto& b : result.blocks) {
    if (b.size() == 1) result.bridges.push_back(b.front());
  }
  std::sort(result.bridges.begin(), result.bridges.end());
  return result;
}

/// Bridges of a possibly disconnected graph, by per-component block search.
inline std::vector<EdgeId> bridges(const Graph& g) {
  if (is_connected(g)) return blocks(g).bridges;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    std::vector<std::pair<int, int>> rest;
    for (EdgeId f = 0; f < g.m(); ++f)
      if (f != e) rest.emplace_back(g.edge(f).u, g.edge(f).v);
    const auto h = Graph::from_edge_list(g.n(), rest);
    if (distances(h, g.edge(e).u)[g.edge(e).v] == kUnreachable) out.push_back(e);
  }
  return out;
}

}  // namespace srclab
