#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "srclab/error.hpp"
#include "srclab/graph.hpp"
#include "srclab/metrics.hpp"

namespace srclab {

// ---------------------------------------------------------------------------
// Unicyclic graphs and their pendant trees

struct PendantTree {
  VertexId root = 0;
  std::vector<VertexId> vertices;          // BFS order from the root
  std::vector<EdgeId> edges;               // sorted
  std::vector<std::vector<VertexId>> sons; // indexed by vertex id; empty outside the tree
  std::optional<EdgeId> root_edge;         // least-id tree edge at the root

  bool nontrivial() const { return !edges.empty(); }

  /// Least vertex with at least two sons, if any.
  std::optional<VertexId> branching_vertex() const {
    std::optional<VertexId> best;
    for (VertexId v : vertices)
      if (sons[v].size() >= 2 && (!best || v < *best)) best = v;
    return best;
  }

  /// A path hanging from its root: no vertex has two sons.
  bool is_endpoint_path() const { return !branching_vertex().has_value(); }

  /// A path in the plain graph sense, the root possibly in its interior.
  bool is_path() const {
    for (VertexId v : vertices) {
      const std::size_t deg = sons[v].size() + (v == root ? 0 : 1);
      if (deg > 2) return false;
    }
    return true;
  }
};

struct PendantProfile {
  std::vector<VertexId> cycle;  // v_1..v_k, least vertex first, toward its smaller cycle neighbor
  std::vector<EdgeId> cycle_edges;  // cycle_edges[i] joins cycle[i] and cycle[i+1 mod k]
  std::vector<PendantTree> trees;   // trees[i] hangs from cycle[i]

  int k() const { return static_cast<int>(cycle.size()); }
  int nontrivial_count() const {
    return static_cast<int>(std::count_if(trees.begin(), trees.end(), [](const auto& t) { return t.nontrivial(); }));
  }
};

inline bool is_unicyclic(const Graph& g) { return g.n() > 0 && g.m() == g.n() && is_connected(g); }

inline PendantProfile pendant_profile(const Graph& g) {
  if (!is_unicyclic(g)) throw Error(ErrorKind::NotUnicyclic, "pendant_profile needs a connected graph with m = n");
  const int n = g.n();
  // peel leaves; what survives is the cycle
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::deque<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const VertexId v = leaves.front();
    leaves.pop_front();
    removed[v] = 1;
    for (const auto& inc : g.incident(v)) {
      if (!removed[inc.neighbor] && --deg[inc.neighbor] == 1) leaves.push_back(inc.neighbor);
    }
  }
  std::vector<char> on_cycle(n, 0);
  VertexId start = -1;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) {
      on_cycle[v] = 1;
      if (start < 0) start = v;
    }
  }
  PendantProfile profile;
  VertexId prev = -1, cur = start;
  do {
    profile.cycle.push_back(cur);
    VertexId next = -1;
    for (const auto& inc : g.incident(cur)) {  // sorted, so the first match is the smaller
      if (on_cycle[inc.neighbor] && inc.neighbor != prev) {
        next = inc.neighbor;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);
  const int k = profile.k();
  for (int i = 0; i < k; ++i) {
    profile.cycle_edges.push_back(*g.edge_id(profile.cycle[i], profile.cycle[(i + 1) % k]));
  }
  for (int i = 0; i < k; ++i) {
    PendantTree tree;
    tree.root = profile.cycle[i];
    tree.sons.assign(n, {});
    std::deque<VertexId> queue{tree.root};
    std::vector<char> seen(n, 0);
    seen[tree.root] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      tree.vertices.push_back(v);
      for (const auto& inc : g.incident(v)) {
        if (on_cycle[inc.neighbor] || seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        tree.sons[v].push_back(inc.neighbor);
        tree.edges.push_back(inc.edge);
        if (v == tree.root && (!tree.root_edge || inc.edge < *tree.root_edge)) tree.root_edge = inc.edge;
        queue.push_back(inc.neighbor);
      }
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    profile.trees.push_back(std::move(tree));
  }
  return profile;
}

// ---------------------------------------------------------------------------
// Triangles and packings

struct Triangle {
  std::array<VertexId, 3> vertices{};  // sorted
  std::array<EdgeId, 3> edges{};       // sorted
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

inline std::vector<Triangle> all_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (VertexId a = 0; a < g.n(); ++a) {
    for (const auto& ab : g.incident(a)) {
      const VertexId b = ab.neighbor;
      if (b <= a) continue;
      for (const auto& bc : g.incident(b)) {
        const VertexId c = bc.neighbor;
        if (c <= b) continue;
        if (const auto ac = g.edge_id(a, c)) {
          Triangle t{{a, b, c}, {ab.edge, bc.edge, *ac}};
          std::sort(t.edges.begin(), t.edges.end());
          out.push_back(t);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Triangle& x, const Triangle& y) { return x.edges < y.edges; });
  return out;
}

struct TrianglePacking {
  std::vector<Triangle> triangles;
  bool certified_maximum = false;  // false for greedy output

  int t() const { return static_cast<int>(triangles.size()); }
};

/// Pairwise edge-disjoint triangles, all present in g.
inline bool is_valid_packing(const Graph& g, const TrianglePacking& p) {
  std::vector<char> used(g.m(), 0);
  for (const auto& tri : p.triangles) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (!g.adjacent(tri.vertices[i], tri.vertices[j])) return false;
    std::array<EdgeId, 3> ids{*g.edge_id(tri.vertices[0], tri.vertices[1]),
                              *g.edge_id(tri.vertices[1], tri.vertices[2]),
                              *g.edge_id(tri.vertices[0], tri.vertices[2])};
    std::sort(ids.begin(), ids.end());
    if (ids != tri.edges) return false;
    for (EdgeId e : ids) {
      if (used[e]) return false;
      used[e] = 1;
    }
  }
  return true;
}

inline TrianglePacking max_edge_disjoint_triangles(const Graph& g, bool exact = true) {
  const auto triangles = all_triangles(g);
  TrianglePacking result;
  std::vector<char> used(g.m(), 0);
  if (!exact) {
    for (const auto& tri : triangles) {
      if (used[tri.edges[0]] || used[tri.edges[1]] || used[tri.edges[2]]) continue;
      for (EdgeId e : tri.edges) used[e] = 1;
      result.triangles.push_back(tri);
    }
    return result;
  }
  std::vector<Triangle> current, best;
  int free_edges = g.m();
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (current.size() > best.size()) best = current;
    if (i == triangles.size()) return;
    const std::size_t remaining = triangles.size() - i;
    if (current.size() + std::min<std::size_t>(remaining, free_edges / 3) <= best.size()) return;
    const auto& tri = triangles[i];
    if (!used[tri.edges[0]] && !used[tri.edges[1]] && !used[tri.edges[2]]) {
      for (EdgeId e : tri.edges) used[e] = 1;
      free_edges -= 3;
      current.push_back(tri);
      search(i + 1);
      current.pop_back();
      free_edges += 3;
      for (EdgeId e : tri.edges) used[e] = 0;
    }
    search(i + 1);
  };
  search(0);
  result.triangles = std::move(best);
  result.certified_maximum = true;
  return result;
}

/// Every inclusion-maximal packing, in lexicographic order, stopping after `limit`.
inline std::vector<TrianglePacking> maximal_triangle_packings(const Graph& g, std::size_t limit = 1u << 20) {
  const auto triangles = all_triangles(g);
  std::vector<TrianglePacking> out;
  std::vector<char> used(g.m(), 0);
  std::vector<Triangle> current;
  auto fits = [&](const Triangle& t) { return !used[t.edges[0]] && !used[t.edges[1]] && !used[t.edges[2]]; };
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == triangles.size()) {
      for (const auto& t : triangles)
        if (fits(t)) return;  // not maximal
      out.push_back({current, false});
      return;
    }
    const auto& tri = triangles[i];
    if (fits(tri)) {
      for (EdgeId e : tri.edges) used[e] = 1;
      current.push_back(tri);
      search(i + 1);
      current.pop_back();
      for (EdgeId e : tri.edges) used[e] = 0;
    }
    search(i + 1);
  };
  search(0);
  return out;
}

// ---------------------------------------------------------------------------
// Class labels

enum class ClassTag { Tree, C5, G1, G2, G3, GBar, Other };

struct ClassLabel {
  ClassTag tag = ClassTag::Other;
  int t = 0;  // triangle count, meaningful for GBar only
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

inline std::string to_string(const ClassLabel& label) {
  switch (label.tag) {
    case ClassTag::Tree: return "Tree";
    case ClassTag::C5: return "C5";
    case ClassTag::G1: return "G1";
    case ClassTag::G2: return "G2";
    case ClassTag::G3: return "G3";
    case ClassTag::GBar: return "GBar(" + std::to_string(label.t) + ")";
    case ClassTag::Other: return "Other";
  }
  return "?";
}

struct ClassifyOptions {
  // A nontrivial pendant tree counts as "a path" only when its root is an end of
  // the path. Turning this off admits roots in the interior of the path.
  bool path_requires_endpoint_root = true;
};

/// GBar(t): every block is a bridge or a triangle, and every triangle has a vertex of degree 2.
inline std::optional<int> gbar_triangles(const Graph& g) {
  const auto dec = blocks(g);
  int t = 0;
  for (const auto& block : dec.blocks) {
    if (block.size() == 1) continue;
    if (block.size() != 3) return std::nullopt;  // a 3-edge block is necessarily a triangle
    std::set<VertexId> vs;
    for (EdgeId e : block) {
      vs.insert(g.edge(e).u);
      vs.insert(g.edge(e).v);
    }
    if (std::none_of(vs.begin(), vs.end(), [&](VertexId v) { return g.degree(v) == 2; })) return std::nullopt;
    ++t;
  }
  return t;
}

inline std::vector<ClassLabel> classify(const Graph& g, const ClassifyOptions& options = {}) {
  require_connected(g, "classify needs a connected graph");
  std::vector<ClassLabel> labels;
  if (g.m() == g.n() - 1) labels.push_back({ClassTag::Tree, 0});
  if (is_unicyclic(g)) {
    const auto profile = pendant_profile(g);
    const int k = profile.k();
    const int nontrivial = profile.nontrivial_count();
    auto pathlike = [&](const PendantTree& t) {
      return options.path_requires_endpoint_root ? t.is_endpoint_path() : t.is_path();
    };
    if (k == 5 && nontrivial == 0) labels.push_back({ClassTag::C5, 0});
    if (k == 3 && nontrivial <= 2) labels.push_back({ClassTag::G1, 0});
    if (k == 4 && nontrivial == 2) {
      const bool opposite = (profile.trees[0].nontrivial() && profile.trees[2].nontrivial()) ||
                            (profile.trees[1].nontrivial() && profile.trees[3].nontrivial());
      const bool paths = std::all_of(profile.trees.begin(), profile.trees.end(),
                                     [&](const auto& t) { return !t.nontrivial() || pathlike(t); });
      if (opposite && paths) labels.push_back({ClassTag::G2, 0});
    }
    if (k == 4 && nontrivial <= 1) {
      const bool paths = std::all_of(profile.trees.begin(), profile.trees.end(),
                                     [&](const auto& t) { return !t.nontrivial() || pathlike(t); });
      if (paths) labels.push_back({ClassTag::G3, 0});
    }
  }
  if (const auto t = gbar_triangles(g)) labels.push_back({ClassTag::GBar, *t});
  if (labels.empty()) labels.push_back({ClassTag::Other, 0});
  return labels;
}

inline bool has_label(const std::vector<ClassLabel>& labels, ClassTag tag) {
  return std::any_of(labels.begin(), labels.end(), [&](const auto& l) { return l.tag == tag; });
}

inline std::optional<int> gbar_label(const std::vector<ClassLabel>& labels) {
  for (const auto& l : labels)
    if (l.tag == ClassTag::GBar) return l.t;
  return std::nullopt;
}

/// Deletes the least-id degree-2 vertex of every triangle; survivors keep their relative order.
inline Graph d2_tree(const Graph& g) {
  if (!is_connected(g) || !gbar_triangles(g)) throw Error(ErrorKind::NotGBar, "graph is not in GBar(t)");
  std::vector<char> drop(g.n(), 0);
  for (const auto& block : blocks(g).blocks) {
    if (block.size() != 3) continue;
    VertexId pick = -1;
    for (EdgeId e : block) {
      for (VertexId v : {g.edge(e).u, g.edge(e).v})
        if (g.degree(v) == 2 && (pick < 0 || v < pick)) pick = v;
    }
    drop[pick] = 1;
  }
  std::vector<int> rename(g.n(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.n(); ++v)
    if (!drop[v]) rename[v] = next++;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) {
    if (!drop[e.u] && !drop[e.v]) pairs.emplace_back(rename[e.u], rename[e.v]);
  }
  return Graph::from_edge_list(next, pairs);
}

// ---------------------------------------------------------------------------
// Intersection of the two smallest cycles

enum class Lemma1Pattern {
  OneCommonEdge,
  TwoCommonAdjacentEdges,
  EdgeDisjoint4Cycles,
  FewerThanTwoCommonVertices,
  NoSecondCycle,
  Unlisted,  // at least two shared vertices, but none of the shapes above
};

inline std::string to_string(Lemma1Pattern p) {
  switch (p) {
    case Lemma1Pattern::OneCommonEdge: return "OneCommonEdge";
    case Lemma1Pattern::TwoCommonAdjacentEdges: return "TwoCommonAdjacentEdges";
    case Lemma1Pattern::EdgeDisjoint4Cycles: return "EdgeDisjoint4Cycles";
    case Lemma1Pattern::FewerThanTwoCommonVertices: return "FewerThanTwoCommonVertices";
    case Lemma1Pattern::NoSecondCycle: return "NoSecondCycle";
    case Lemma1Pattern::Unlisted: return "Unlisted";
  }
  return "?";
}

struct Lemma1Config {
  int girth = 0;
  Lemma1Pattern pattern = Lemma1Pattern::NoSecondCycle;
  int common_vertices = 0;
  int common_edges = 0;
  int second_length = 0;
};

/// Intersection pattern of an arbitrary pair of cycles; girth is left at 0.
inline Lemma1Config cycle_pair_pattern(const Graph& g, const Cycle& c1, const Cycle& c2) {
  Lemma1Config cfg;
  cfg.second_length = c2.length();
  std::vector<VertexId> shared_v;
  for (VertexId v : c1.vertices)
    if (c2.contains_vertex(v)) shared_v.push_back(v);
  std::vector<EdgeId> shared_e;
  std::set_intersection(c1.edges.begin(), c1.edges.end(), c2.edges.begin(), c2.edges.end(),
                        std::back_inserter(shared_e));
  cfg.common_vertices = static_cast<int>(shared_v.size());
  cfg.common_edges = static_cast<int>(shared_e.size());
  if (shared_v.size() < 2) {
    cfg.pattern = Lemma1Pattern::FewerThanTwoCommonVertices;
  } else if (shared_e.size() == 1 && shared_v.size() == 2) {
    cfg.pattern = Lemma1Pattern::OneCommonEdge;
  } else if (shared_e.size() == 2 && shared_v.size() == 3) {
    // three shared vertices carrying two shared edges: the edges meet at the middle one
    cfg.pattern = Lemma1Pattern::TwoCommonAdjacentEdges;
  } else if (shared_e.empty() && shared_v.size() == 2 && c1.length() == 4 && c2.length() == 4 &&
             !g.adjacent(shared_v[0], shared_v[1])) {
    cfg.pattern = Lemma1Pattern::EdgeDisjoint4Cycles;
  } else {
    cfg.pattern = Lemma1Pattern::Unlisted;
  }
  return cfg;
}

/// Pattern of the deterministic smallest pair (C1, C2). A missing second cycle
/// is reported as NoSecondCycle rather than thrown.
inline Lemma1Config lemma1_configuration(const Graph& g) {
  require_connected(g, "lemma1_configuration needs a connected graph");
  const auto gir = girth(g);
  if (!gir || *gir < 3 || *gir > 5) {
    throw Error(ErrorKind::GirthOutOfRange, gir ? "girth " + std::to_string(*gir) : std::string("acyclic graph"));
  }
  Lemma1Config cfg;
  if (const auto pair = smallest_two_cycles(g)) cfg = cycle_pair_pattern(g, pair->first, pair->second);
  cfg.girth = *gir;
  return cfg;
}

/// Patterns permitted for a given girth when the two cycles share two or more vertices.
inline bool lemma1_allows(int girth_value, Lemma1Pattern p) {
  switch (girth_value) {
    case 3: return p == Lemma1Pattern::OneCommonEdge;
    case 4:
      return p == Lemma1Pattern::OneCommonEdge || p == Lemma1Pattern::TwoCommonAdjacentEdges ||
             p == Lemma1Pattern::EdgeDisjoint4Cycles;
    case 5: return p == Lemma1Pattern::OneCommonEdge || p == Lemma1Pattern::TwoCommonAdjacentEdges;
    default: return false;
  }
}

// ---------------------------------------------------------------------------
// Line graphs

/// L(G): vertex i is edge i of g; edges listed in (i, j) lexicographic order.
inline Graph line_graph(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId i = 0; i < g.m(); ++i) {
    for (EdgeId j = i + 1; j < g.m(); ++j) {
      const auto& a = g.edge(i);
      const auto& b = g.edge(j);
      if (a.has(b.u) || a.has(b.v)) pairs.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(g.m(), pairs);
}

/// Stars S(v) of the inner vertices (degree >= 2), as sorted vertex sets of L(G).
inline std::vector<std::vector<VertexId>> star_cliques(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.degree(v) < 2) continue;
    std::vector<VertexId> star;
    for (const auto& inc : g.incident(v)) star.push_back(inc.edge);
    std::sort(star.begin(), star.end());
    out.push_back(std::move(star));
  }
  return out;
}

/// Each set is a clique of h and every edge of h lies in exactly one of them.
inline bool is_clique_decomposition(const Graph& h, const std::vector<std::vector<VertexId>>& cliques) {
  std::vector<int> cover(h.m(), 0);
  for (const auto& clique : cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        const auto e = h.edge_id(clique[i], clique[j]);
        if (!e) return false;
        ++cover[*e];
      }
    }
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

inline bool is_cubic(const Graph& g) {
  for (VertexId v = 0; v < g.n(); ++v)
    if (g.degree(v) != 3) return false;
  return g.n() > 0;
}

/// The stars of a cubic graph as edge-disjoint triangles of its line graph.
inline TrianglePacking star_triangle_packing(const Graph& cubic, const Graph& line) {
  if (!is_cubic(cubic)) throw Error(ErrorKind::NotCubic, "star triangles need a cubic graph");
  TrianglePacking p;
  for (const auto& star : star_cliques(cubic)) {
    Triangle t;
    std::copy(star.begin(), star.end(), t.vertices.begin());
    t.edges = {*line.edge_id(star[0], star[1]), *line.edge_id(star[1], star[2]), *line.edge_id(star[0], star[2])};
    std::sort(t.edges.begin(), t.edges.end());
    p.triangles.push_back(t);
  }
  return p;
}

}  // namespace srclab
