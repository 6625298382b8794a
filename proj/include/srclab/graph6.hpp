#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "srclab/error.hpp"
#include "srclab/graph.hpp"

namespace srclab {

// graph6, short form only (n <= 62). Bits run over the upper triangle column by
// column: (0,1), (0,2), (1,2), (0,3), ... A parsed graph numbers its edges in
// that same bit order.

inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw Error(ErrorKind::MalformedGraph6, "empty line");
  for (char ch : line) {
    if (ch < 63 || ch > 126) {
      throw Error(ErrorKind::MalformedGraph6, "byte out of range in '" + std::string(line) + "'");
    }
  }
  if (line[0] == 126) throw Error(ErrorKind::MalformedGraph6, "only short form (n <= 62) supported");
  const int n = line[0] - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != 1 + bytes) {
    throw Error(ErrorKind::MalformedGraph6, "expected " + std::to_string(1 + bytes) +
                                                " bytes for n=" + std::to_string(n) + ", got " +
                                                std::to_string(line.size()));
  }
  std::vector<std::pair<int, int>> pairs;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = line[1 + k / 6] - 63;
      if (chunk & (1 << (5 - k % 6))) pairs.emplace_back(i, j);
    }
  }
  // padding bits must be zero
  for (; k < bytes * 6; ++k) {
    if ((line[1 + k / 6] - 63) & (1 << (5 - k % 6))) {
      throw Error(ErrorKind::MalformedGraph6, "nonzero padding bits");
    }
  }
  return Graph::from_edge_list(n, pairs);
}

namespace detail {

// Packs an upper-triangle bit sequence into graph6 bytes.
template <typename Adjacent>
std::string encode_graph6(int n, Adjacent&& adjacent) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] | (1 << (5 - k % 6)));
    }
  }
  for (char& ch : out) ch = static_cast<char>(ch + 63);
  return out;
}

}  // namespace detail

inline std::string emit_graph6(const Graph& g) {
  if (g.n() > 62) throw Error(ErrorKind::TooLarge, "graph6 short form holds n <= 62");
  return detail::encode_graph6(g.n(), [&](int i, int j) { return g.adjacent(i, j); });
}

/// One graph per line; blank lines and '#' comments are skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view(line);
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
    if (view.empty() || view.front() == '#') continue;
    if (view.find_first_not_of(" \t\r\n") == std::string_view::npos) continue;
    out.push_back(parse_graph6(view));
  }
  return out;
}

}  // namespace srclab
