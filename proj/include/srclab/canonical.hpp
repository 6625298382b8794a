#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "srclab/error.hpp"
#include "srclab/graph.hpp"
#include "srclab/graph6.hpp"

namespace srclab {

inline constexpr int kCanonicalMaxVertices = 10;

// Isomorphism-invariant key: the graph6 string of a canonical relabeling.
struct CanonicalForm {
  std::string key;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

using Partition = std::vector<std::vector<VertexId>>;

// Equitable refinement. Cells split by their neighbor-count profile across the
// current cells; subcells are ordered by that profile, so the result does not
// depend on vertex names.
inline void refine(const std::vector<std::uint32_t>& rows, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    Partition next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<VertexId>> groups;
      for (VertexId v : cell) {
        std::vector<int> profile(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
          int count = 0;
          for (VertexId w : cells[c]) count += (rows[v] >> w) & 1u;
          profile[c] = count;
        }
        groups[profile].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [profile, members] : groups) next.push_back(std::move(members));
    }
    cells = std::move(next);
  }
}

inline std::string leaf_key(const std::vector<std::uint32_t>& rows, const Partition& cells) {
  const int n = static_cast<int>(cells.size());
  std::vector<VertexId> order(n);
  for (int i = 0; i < n; ++i) order[i] = cells[i].front();
  return encode_graph6(n, [&](int i, int j) { return ((rows[order[i]] >> order[j]) & 1u) != 0; });
}

inline void search(const std::vector<std::uint32_t>& rows, Partition cells, std::string& best) {
  refine(rows, cells);
  const auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    auto key = leaf_key(rows, cells);
    if (best.empty() || key < best) best = std::move(key);
    return;
  }
  const std::size_t index = static_cast<std::size_t>(target - cells.begin());
  for (VertexId v : cells[index]) {
    Partition child;
    child.reserve(cells.size() + 1);
    child.insert(child.end(), cells.begin(), cells.begin() + index);
    child.push_back({v});
    std::vector<VertexId> rest;
    for (VertexId w : cells[index])
      if (w != v) rest.push_back(w);
    child.push_back(std::move(rest));
    child.insert(child.end(), cells.begin() + index + 1, cells.end());
    search(rows, std::move(child), best);
  }
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.n() > kCanonicalMaxVertices) {
    throw Error(ErrorKind::TooLarge, "canonical_form supports n <= 10, got " + std::to_string(g.n()));
  }
  if (g.n() == 0) return {emit_graph6(g)};
  std::vector<std::uint32_t> rows(g.n(), 0);
  for (const auto& e : g.edges()) {
    rows[e.u] |= 1u << e.v;
    rows[e.v] |= 1u << e.u;
  }
  detail::Partition cells(1);
  for (VertexId v = 0; v < g.n(); ++v) cells[0].push_back(v);
  std::string best;
  detail::search(rows, std::move(cells), best);
  return {best};
}

/// The graph spelled by a canonical key; isomorphic inputs give identical graphs.
inline Graph canonical_graph(const Graph& g) { return parse_graph6(canonical_form(g).key); }

}  // namespace srclab
