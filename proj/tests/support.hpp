#pragma once

#include <optional>

#include "oracles.hpp"
#include "srclab/srclab.hpp"

inline oracle::Plain to_plain(const srclab::Graph& g) {
  oracle::Plain p{g.n(), {}};
  for (const auto& e : g.edges()) p.edges.emplace_back(e.u, e.v);
  return p;
}

inline srclab::Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  return srclab::Graph::from_edge_list(n, pairs);
}

// C4 with a pendant path of `length` edges hanging off vertex 0.
inline srclab::Graph c4_with_tail(int length) {
  std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  int prev = 0;
  for (int i = 0; i < length; ++i) {
    pairs.emplace_back(prev, 4 + i);
    prev = 4 + i;
  }
  return from_pairs(4 + length, pairs);
}

template <typename F>
std::optional<srclab::ErrorKind> error_kind_of(F&& f) {
  try {
    f();
  } catch (const srclab::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
