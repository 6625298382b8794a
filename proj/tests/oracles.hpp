#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond plain edge lists, so agreement is meaningful.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

struct Plain {
  int n = 0;
  EdgeList edges;

  bool adjacent(int a, int b) const {
    for (auto [u, v] : edges)
      if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
  }
  int edge_index(int a, int b) const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if ((u == a && v == b) || (u == b && v == a)) return static_cast<int>(i);
    }
    return -1;
  }
};

inline bool connected(const Plain& g, int skip_edge = -1) {
  if (g.n == 0) return true;
  std::vector<int> seen(g.n, 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (static_cast<int>(i) == skip_edge) continue;
      auto [a, b] = g.edges[i];
      int w = a == v ? b : b == v ? a : -1;
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::count(seen.begin(), seen.end(), 1) == g.n;
}

// Adjacency bits of the upper triangle, column-wise, under a relabeling.
inline std::uint64_t code(const Plain& g, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (auto [a, b] : g.edges) {
    int x = std::min(perm[a], perm[b]), y = std::max(perm[a], perm[b]);
    out |= std::uint64_t{1} << (y * (y - 1) / 2 + x);
  }
  return out;
}

inline std::uint64_t min_code(const Plain& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, code(g, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Plain& a, const Plain& b) {
  return a.n == b.n && a.edges.size() == b.edges.size() && min_code(a) == min_code(b);
}

// Isomorphism classes of connected graphs on exactly n vertices, by brute force
// over all labeled graphs.
inline std::size_t connected_classes(int n, int m_max = 1 << 20) {
  const int slots = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::uint64_t> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
    if (std::popcount(mask) > m_max || std::popcount(mask) < n - 1) continue;
    Plain g{n, {}};
    for (int k = 0; k < slots; ++k)
      if (mask >> k & 1) g.edges.push_back(pairs[k]);
    if (connected(g)) classes.insert(min_code(g));
  }
  return classes.size();
}

// Independent graph6 decoder: returns n and the edge set.
inline Plain decode_graph6(const std::string& s) {
  Plain g;
  g.n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  int k = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[k++]) g.edges.emplace_back(i, j);
  return g;
}

// Every simple path from u to v, as vertex sequences.
inline std::vector<std::vector<int>> simple_paths(const Plain& g, int u, int v) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{u};
  std::vector<int> on(g.n, 0);
  on[u] = 1;
  std::function<void(int)> dfs = [&](int x) {
    if (x == v) {
      out.push_back(path);
      return;
    }
    for (int y = 0; y < g.n; ++y) {
      if (on[y] || !g.adjacent(x, y)) continue;
      on[y] = 1;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      on[y] = 0;
    }
  };
  dfs(u);
  return out;
}

inline std::vector<std::vector<int>> geodesics(const Plain& g, int u, int v) {
  auto all = simple_paths(g, u, v);
  if (all.empty()) return all;
  std::size_t best = all.front().size();
  for (const auto& p : all) best = std::min(best, p.size());
  std::vector<std::vector<int>> out;
  for (auto& p : all)
    if (p.size() == best) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

inline int distance(const Plain& g, int u, int v) {
  auto geo = geodesics(g, u, v);
  return geo.empty() ? -1 : static_cast<int>(geo.front().size()) - 1;
}

inline bool rainbow(const Plain& g, const std::vector<int>& colors, const std::vector<int>& path) {
  std::set<int> seen;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!seen.insert(colors[g.edge_index(path[i], path[i + 1])]).second) return false;
  return true;
}

inline bool strongly_rainbow(const Plain& g, const std::vector<int>& colors) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      bool any = false;
      for (const auto& p : geodesics(g, u, v)) any = any || rainbow(g, colors, p);
      if (!any) return false;
    }
  return true;
}

inline bool rainbow_connected(const Plain& g, const std::vector<int>& colors) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      bool any = false;
      for (const auto& p : simple_paths(g, u, v)) any = any || rainbow(g, colors, p);
      if (!any) return false;
    }
  return true;
}

// Smallest k such that some k-coloring (all k^m of them) passes `ok`.
inline int min_colors(const Plain& g, const std::function<bool(const Plain&, const std::vector<int>&)>& ok) {
  const int m = static_cast<int>(g.edges.size());
  for (int k = 1; k <= m; ++k) {
    std::vector<int> colors(m, 0);
    while (true) {
      if (ok(g, colors)) return k;
      int i = 0;
      while (i < m && ++colors[i] == k) colors[i++] = 0;
      if (i == m) break;
    }
  }
  return m;
}

inline int src(const Plain& g) { return g.edges.empty() ? 0 : min_colors(g, strongly_rainbow); }
inline int rc(const Plain& g) { return g.edges.empty() ? 0 : min_colors(g, rainbow_connected); }

inline std::vector<int> bridges(const Plain& g) {
  std::vector<int> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (!connected(g, static_cast<int>(i))) out.push_back(static_cast<int>(i));
  return out;
}

// Shortest cycle length by checking every simple path closed by an edge; 0 if acyclic.
inline int girth(const Plain& g) {
  int best = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [a, b] = g.edges[i];
    Plain h = g;
    h.edges.erase(h.edges.begin() + static_cast<long>(i));
    const int d = distance(h, a, b);
    if (d > 0 && (best == 0 || d + 1 < best)) best = d + 1;
  }
  return best;
}

inline std::vector<std::vector<int>> triangles(const Plain& g) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
          out.push_back({g.edge_index(a, b), g.edge_index(a, c), g.edge_index(b, c)});
  return out;
}

// Largest edge-disjoint subset of triangles by exhaustive subset search.
inline int max_packing(const Plain& g) {
  const auto tri = triangles(g);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << tri.size()); ++mask) {
    std::set<int> used;
    bool ok = true;
    for (std::size_t i = 0; i < tri.size() && ok; ++i)
      if (mask >> i & 1)
        for (int e : tri[i]) ok = ok && used.insert(e).second;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

}  // namespace oracle
