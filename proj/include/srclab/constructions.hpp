#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "srclab/coloring.hpp"
#include "srclab/error.hpp"
#include "srclab/graph.hpp"
#include "srclab/metrics.hpp"
#include "srclab/structure.hpp"

namespace srclab {

enum class SchemeTag {
  CycleChartrand,
  CyclePlusFresh,
  TrianglePacking,
  UnicyclicK3,
  UnicyclicK4,
  UnicyclicK5,
  Claim2Config,
};

struct SchemeId {
  SchemeTag tag = SchemeTag::CyclePlusFresh;
  std::string variant;  // only for Claim2Config
  friend bool operator==(const SchemeId&, const SchemeId&) = default;
};

/// Variants of the multi-cycle schemes, in the order src_upper_via_construction tries them.
inline const std::vector<std::string>& claim2_variants() {
  static const std::vector<std::string> names = {
      "1.1",      "1.2",   "1.3",   "2.1-long",      "2.2.1",         "2.2.2-long",  "2.2.3",
      "2.3.1",    "2.3.2", "thm2-case1", "thm2-2.1-l>=3", "thm2-2.2-l>=2", "thm2-claim3"};
  return names;
}

inline std::string to_string(const SchemeId& s) {
  switch (s.tag) {
    case SchemeTag::CycleChartrand: return "CycleChartrand";
    case SchemeTag::CyclePlusFresh: return "CyclePlusFresh";
    case SchemeTag::TrianglePacking: return "TrianglePacking";
    case SchemeTag::UnicyclicK3: return "UnicyclicK3";
    case SchemeTag::UnicyclicK4: return "UnicyclicK4";
    case SchemeTag::UnicyclicK5: return "UnicyclicK5";
    case SchemeTag::Claim2Config: return "Claim2Config(" + s.variant + ")";
  }
  return "?";
}

inline std::string canonical_variant(std::string v) {
  auto replace = [&](const std::string& from, const std::string& to) {
    for (std::size_t pos; (pos = v.find(from)) != std::string::npos;) v.replace(pos, from.size(), to);
  };
  replace("\xE2\x84\x93", "l");  // ℓ
  replace("\xE2\x89\xA5", ">=");  // ≥
  return v;
}

inline SchemeId parse_scheme(const std::string& text) {
  static const std::vector<std::pair<std::string, SchemeTag>> plain = {
      {"CycleChartrand", SchemeTag::CycleChartrand}, {"CyclePlusFresh", SchemeTag::CyclePlusFresh},
      {"TrianglePacking", SchemeTag::TrianglePacking}, {"UnicyclicK3", SchemeTag::UnicyclicK3},
      {"UnicyclicK4", SchemeTag::UnicyclicK4},         {"UnicyclicK5", SchemeTag::UnicyclicK5}};
  for (const auto& [name, tag] : plain)
    if (text == name) return {tag, ""};
  std::string variant;
  if (text.starts_with("Claim2Config(") && text.ends_with(")")) {
    variant = text.substr(13, text.size() - 14);
  } else if (text.starts_with("Claim2Config:")) {
    variant = text.substr(13);
  } else {
    variant = text;
  }
  variant = canonical_variant(variant);
  const auto& names = claim2_variants();
  if (std::find(names.begin(), names.end(), variant) == names.end()) {
    throw Error(ErrorKind::Usage, "unknown scheme '" + text + "'");
  }
  return {SchemeTag::Claim2Config, variant};
}

namespace detail {

// Incremental coloring. "Fresh" always means the smallest label not yet used.
class ColoringBuilder {
 public:
  explicit ColoringBuilder(const Graph& g) : g_(&g), colors_(g.m(), -1) {}

  Color fresh() {
    Color c = 0;
    while (used_.count(c)) ++c;
    used_.insert(c);
    return c;
  }

  void reserve_label(Color c) { used_.insert(c); }

  bool assigned(EdgeId e) const { return colors_[e] >= 0; }
  Color color(EdgeId e) const { return colors_[e]; }

  void set(EdgeId e, Color c) {
    if (assigned(e) && colors_[e] != c) {
      throw Error(ErrorKind::SchemeNotApplicable, "edge " + std::to_string(e) + " would receive two colors");
    }
    colors_[e] = c;
    used_.insert(c);
  }

  void set(VertexId a, VertexId b, Color c) { set(edge(a, b), c); }

  EdgeId edge(VertexId a, VertexId b) const {
    const auto e = g_->edge_id(a, b);
    if (!e) throw Error(ErrorKind::SchemeNotApplicable, "missing edge " + std::to_string(a) + "-" + std::to_string(b));
    return *e;
  }

  /// Every still-uncolored edge gets its own fresh color, in edge order.
  EdgeColoring finish() {
    for (EdgeId e = 0; e < g_->m(); ++e)
      if (!assigned(e)) set(e, fresh());
    return EdgeColoring(colors_);
  }

 private:
  const Graph* g_;
  std::vector<Color> colors_;
  std::set<Color> used_;
};

inline EdgeColoring verified(const Graph& g, EdgeColoring c, const std::string& what) {
  const auto verdict = is_strongly_rainbow_connected(g, c);
  if (!verdict.ok) {
    throw Error(ErrorKind::SchemeVerificationFailed,
                what + " left pair (" + std::to_string(verdict.witness->first) + "," +
                    std::to_string(verdict.witness->second) + ") without a rainbow geodesic");
  }
  return c;
}

// Cycle vertex i (0-based), walking from `start` in direction `step` (+1/-1).
inline std::vector<VertexId> rotate(const std::vector<VertexId>& cyc, int start, int step) {
  const int k = static_cast<int>(cyc.size());
  std::vector<VertexId> out(k);
  for (int i = 0; i < k; ++i) out[i] = cyc[((start + step * i) % k + k) % k];
  return out;
}

// The cycle walked from `first` toward its neighbor `second`.
inline std::vector<VertexId> walk_from(const Cycle& c, VertexId first, VertexId second) {
  const auto& vs = c.vertices;
  const int k = c.length();
  const int at = static_cast<int>(std::find(vs.begin(), vs.end(), first) - vs.begin());
  const int step = vs[(at + 1) % k] == second ? 1 : -1;
  return rotate(vs, at, step);
}

}  // namespace detail

/// Labels of the cycle scheme for C_k, one per edge e_i = v_i v_{i+1}; uses 1-based labels.
inline std::vector<Color> cycle_labels(int k) {
  std::vector<Color> labels(k);
  if (k % 2 == 0) {
    const int l = k / 2;
    for (int i = 1; i <= k; ++i) labels[i - 1] = i <= l ? i : i - l;
  } else {
    const int l = (k - 1) / 2;
    for (int i = 1; i <= k; ++i) labels[i - 1] = i <= l + 1 ? i : i - l - 1;
  }
  return labels;
}

/// The scheme on named::cycle(k), whose edge i joins i and i+1.
inline EdgeColoring cycle_coloring(int k) {
  if (k < 3) throw Error(ErrorKind::Usage, "cycle length must be at least 3");
  return EdgeColoring(cycle_labels(k));
}

namespace detail {

// Paints the cycle scheme onto `walk` (v_1..v_k) with labels remapped to fresh ones.
inline void paint_cycle(ColoringBuilder& b, const std::vector<VertexId>& walk) {
  const int k = static_cast<int>(walk.size());
  const auto labels = cycle_labels(k);
  std::vector<Color> remap(k + 1, -1);
  for (int i = 0; i < k; ++i) {
    Color& target = remap[labels[i]];
    if (target < 0) target = b.fresh();
    b.set(walk[i], walk[(i + 1) % k], target);
  }
}

}  // namespace detail

/// Cycle scheme on a graph that is itself a cycle, walked in canonical orientation.
inline EdgeColoring cycle_coloring(const Graph& g) {
  const bool is_cycle = is_connected(g) && g.m() == g.n() && g.n() >= 3 &&
                        std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
                          return g.degree(e.u) == 2 && g.degree(e.v) == 2;
                        });
  if (!is_cycle) throw Error(ErrorKind::SchemeNotApplicable, "graph is not a cycle");
  const auto c = *smallest_cycle(g);
  detail::ColoringBuilder b(g);
  const auto labels = cycle_labels(c.length());
  for (int i = 0; i < c.length(); ++i) b.set(c.vertices[i], c.vertices[(i + 1) % c.length()], labels[i]);
  return detail::verified(g, b.finish(), "cycle scheme");
}

inline EdgeColoring cycle_plus_fresh(const Graph& g) {
  require_connected(g, "cycle_plus_fresh needs a connected graph");
  const auto c = smallest_cycle(g);
  if (!c) throw Error(ErrorKind::Acyclic, "cycle_plus_fresh needs a cycle");
  detail::ColoringBuilder b(g);
  const auto labels = cycle_labels(c->length());
  for (Color l : labels) b.reserve_label(l);
  for (int i = 0; i < c->length(); ++i) b.set(c->vertices[i], c->vertices[(i + 1) % c->length()], labels[i]);
  return detail::verified(g, b.finish(), "cycle plus fresh");
}

/// One color per packed triangle, a fresh color on every other edge: m - 2t colors.
inline EdgeColoring triangle_packing_coloring(const Graph& g, const TrianglePacking& p) {
  require_connected(g, "triangle_packing_coloring needs a connected graph");
  if (!is_valid_packing(g, p)) throw Error(ErrorKind::InvalidPacking, "triangles missing or not edge-disjoint");
  std::vector<int> owner(g.m(), -1);
  for (int i = 0; i < p.t(); ++i)
    for (EdgeId e : p.triangles[i].edges) owner[e] = i;
  std::vector<Color> tri_color(p.t(), -1);
  std::vector<Color> colors(g.m());
  Color next = 0;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (owner[e] < 0) {
      colors[e] = next++;
    } else {
      if (tri_color[owner[e]] < 0) tri_color[owner[e]] = next++;
      colors[e] = tri_color[owner[e]];
    }
  }
  return detail::verified(g, EdgeColoring(std::move(colors)), "triangle packing coloring");
}

// ---------------------------------------------------------------------------
// Unicyclic graphs with cycle length 3, 4, 5

struct UnicyclicPlan {
  SchemeTag tag = SchemeTag::CyclePlusFresh;
  std::string case_name;  // e.g. "k3-all-nontrivial"
  int expected_colors = 0;
};

namespace detail {

struct UnicyclicBuild {
  EdgeColoring coloring;
  UnicyclicPlan plan;
};

inline UnicyclicBuild build_unicyclic(const Graph& g) {
  const auto profile = pendant_profile(g);
  const int k = profile.k();
  const int m = g.m();
  if (k >= 6) {
    const int cycle_colors = (k + 1) / 2;
    return {cycle_plus_fresh(g), {SchemeTag::CyclePlusFresh, "long-cycle", cycle_colors + m - k}};
  }
  ColoringBuilder b(g);
  for (const auto& tree : profile.trees)
    for (EdgeId e : tree.edges) b.set(e, b.fresh());

  // tree and edge lookups for a relabeled cycle v_1..v_k (0-based positions)
  auto tree_at = [&](const std::vector<int>& pos, int i) -> const PendantTree& { return profile.trees[pos[i]]; };
  auto vert = [&](const std::vector<int>& pos, int i) { return profile.cycle[pos[i]]; };
  auto tree_color = [&](const PendantTree& t) { return b.color(*t.root_edge); };
  auto orientations = [&]() {
    std::vector<std::vector<int>> out;
    for (int step : {1, -1})
      for (int r = 0; r < k; ++r) {
        std::vector<int> pos(k);
        for (int i = 0; i < k; ++i) pos[i] = ((r + step * i) % k + k) % k;
        out.push_back(pos);
      }
    std::sort(out.begin(), out.end());
    return out;
  };
  const int nontrivial = profile.nontrivial_count();
  UnicyclicPlan plan;

  if (k == 3) {
    plan.tag = SchemeTag::UnicyclicK3;
    const std::vector<int> pos{0, 1, 2};
    if (nontrivial == 3) {
      b.set(vert(pos, 0), vert(pos, 1), tree_color(tree_at(pos, 2)));
      b.set(vert(pos, 1), vert(pos, 2), tree_color(tree_at(pos, 0)));
      b.set(vert(pos, 0), vert(pos, 2), tree_color(tree_at(pos, 1)));
      plan.case_name = "k3-three-trees";
      plan.expected_colors = m - 3;
    } else {
      const Color a = b.fresh();
      for (EdgeId e : profile.cycle_edges) b.set(e, a);
      plan.case_name = "k3-G1";
      plan.expected_colors = m - 2;
    }
  } else if (k == 4) {
    plan.tag = SchemeTag::UnicyclicK4;
    auto nt = [&](const std::vector<int>& pos, int i) { return tree_at(pos, i).nontrivial(); };
    bool done = false;
    for (const auto& pos : orientations()) {
      if (done) break;
      if (nontrivial >= 3 && nt(pos, 0) && nt(pos, 2) && nt(pos, 3)) {
        // v_2 is the one tree that may be trivial
        b.set(vert(pos, 0), vert(pos, 1), tree_color(tree_at(pos, 3)));
        b.set(vert(pos, 1), vert(pos, 2), b.fresh());
        b.set(vert(pos, 2), vert(pos, 3), tree_color(tree_at(pos, 0)));
        b.set(vert(pos, 3), vert(pos, 0), tree_color(tree_at(pos, 2)));
        plan.case_name = "k4-three-trees";
        plan.expected_colors = m - 3;
        done = true;
      } else if (nontrivial == 2 && nt(pos, 0) && nt(pos, 1)) {
        b.set(vert(pos, 1), vert(pos, 2), tree_color(tree_at(pos, 0)));
        b.set(vert(pos, 0), vert(pos, 3), tree_color(tree_at(pos, 1)));
        const Color c = b.fresh();
        b.set(vert(pos, 0), vert(pos, 1), c);
        b.set(vert(pos, 2), vert(pos, 3), c);
        plan.case_name = "k4-adjacent-trees";
        plan.expected_colors = m - 3;
        done = true;
      } else if (nontrivial <= 2 && (nontrivial == 0 || nt(pos, 0)) && !nt(pos, 1) && !nt(pos, 3)) {
        // at most the opposite pair v_1, v_3 carries trees
        const bool paths = tree_at(pos, 0).is_endpoint_path() && tree_at(pos, 2).is_endpoint_path();
        if (paths) {
          const Color a = b.fresh();
          const Color bb = b.fresh();
          b.set(vert(pos, 0), vert(pos, 1), a);
          b.set(vert(pos, 2), vert(pos, 3), a);
          b.set(vert(pos, 1), vert(pos, 2), bb);
          b.set(vert(pos, 0), vert(pos, 3), bb);
          plan.case_name = nontrivial == 2 ? "k4-G2" : "k4-G3";
          plan.expected_colors = m - 2;
          done = true;
        } else if (const auto u1 = tree_at(pos, 0).branching_vertex()) {
          const auto& sons = tree_at(pos, 0).sons[*u1];
          const Color c12 = b.fresh();
          b.set(vert(pos, 0), vert(pos, 1), c12);
          b.set(vert(pos, 0), vert(pos, 3), c12);
          b.set(vert(pos, 1), vert(pos, 2), b.color(b.edge(*u1, sons[0])));
          b.set(vert(pos, 2), vert(pos, 3), b.color(b.edge(*u1, sons[1])));
          plan.case_name = nontrivial == 2 ? "k4-opposite-branching" : "k4-single-branching";
          plan.expected_colors = m - 3;
          done = true;
        }
      }
    }
    if (!done) throw Error(ErrorKind::SchemeNotApplicable, "no k=4 case matched");
  } else {  // k == 5
    plan.tag = SchemeTag::UnicyclicK5;
    if (nontrivial == 0) {
      std::vector<VertexId> walk(profile.cycle.begin(), profile.cycle.end());
      paint_cycle(b, walk);
      plan.case_name = "k5-C5";
      plan.expected_colors = 3;
    } else {
      for (const auto& pos : orientations()) {
        if (!tree_at(pos, 0).nontrivial()) continue;
        b.set(vert(pos, 2), vert(pos, 3), tree_color(tree_at(pos, 0)));
        const Color a = b.fresh();
        const Color bb = b.fresh();
        b.set(vert(pos, 0), vert(pos, 1), a);
        b.set(vert(pos, 3), vert(pos, 4), a);
        b.set(vert(pos, 1), vert(pos, 2), bb);
        b.set(vert(pos, 0), vert(pos, 4), bb);
        break;
      }
      plan.case_name = "k5-with-tree";
      plan.expected_colors = m - 3;
    }
  }
  plan.expected_colors = std::max(plan.expected_colors, 0);
  return {verified(g, b.finish(), "unicyclic scheme " + plan.case_name), plan};
}

}  // namespace detail

/// Optimal-or-near coloring of a unicyclic graph; cycles of length 6+ fall back to cycle_plus_fresh.
inline EdgeColoring unicyclic_coloring(const Graph& g) { return detail::build_unicyclic(g).coloring; }

/// Which case unicyclic_coloring takes and how many colors it spends.
inline UnicyclicPlan unicyclic_plan(const Graph& g) { return detail::build_unicyclic(g).plan; }

// ---------------------------------------------------------------------------
// Schemes for graphs with two or more cycles

namespace detail {

inline bool packed(const TrianglePacking& p, const Cycle& c) {
  return c.length() == 3 && std::any_of(p.triangles.begin(), p.triangles.end(), [&](const Triangle& t) {
           return std::equal(t.edges.begin(), t.edges.end(), c.edges.begin());
         });
}

// Smallest cycle that is not one of the packed triangles.
inline std::optional<Cycle> smallest_unpacked_cycle(const Graph& g, const TrianglePacking& p) {
  for (int len = 3; len <= g.n(); ++len) {
    for (auto& c : cycles_of_length(g, len))
      if (!packed(p, c)) return std::move(c);
  }
  return std::nullopt;
}

inline std::optional<int> owning_triangle(const TrianglePacking& p, EdgeId e) {
  for (int i = 0; i < p.t(); ++i)
    if (std::find(p.triangles[i].edges.begin(), p.triangles[i].edges.end(), e) != p.triangles[i].edges.end()) return i;
  return std::nullopt;
}

inline VertexId third_vertex(const Triangle& t, VertexId a, VertexId b) {
  for (VertexId v : t.vertices)
    if (v != a && v != b) return v;
  return -1;
}

[[noreturn]] inline void not_applicable(const std::string& variant, const std::string& why) {
  throw Error(ErrorKind::SchemeNotApplicable, "scheme " + variant + ": " + why);
}

inline EdgeColoring theorem1_claim2(const Graph& g, const std::string& variant) {
  const auto pair = smallest_two_cycles(g);
  if (!pair) not_applicable(variant, "needs two cycles");
  const auto& [c1, c2] = *pair;
  const int k1 = c1.length();
  const int k2 = c2.length();
  if (k1 > 5) not_applicable(variant, "girth above 5");
  const auto cfg = lemma1_configuration(g);
  ColoringBuilder b(g);
  auto pairs_with = [&](std::vector<std::pair<VertexId, VertexId>> edges) {
    const Color c = b.fresh();
    for (auto [x, y] : edges) b.set(x, y, c);
  };

  if (variant == "1.1" || variant == "1.2" || variant == "1.3") {
    const int want = variant == "1.1" ? 3 : variant == "1.2" ? 4 : 5;
    if (k1 != want) not_applicable(variant, "smallest cycle has the wrong length");
    if (cfg.pattern != Lemma1Pattern::FewerThanTwoCommonVertices) not_applicable(variant, "cycles share two vertices");
    paint_cycle(b, c2.vertices);
    if (k1 == 3) {
      const Color a = b.fresh();
      for (EdgeId e : c1.edges) b.set(e, a);
    } else {
      paint_cycle(b, c1.vertices);
    }
    return b.finish();
  }

  auto shared_edge_ends = [&]() {
    std::vector<EdgeId> common;
    std::set_intersection(c1.edges.begin(), c1.edges.end(), c2.edges.begin(), c2.edges.end(), std::back_inserter(common));
    return common;
  };

  if (variant == "2.1-long" || variant == "2.2.1" || variant == "2.3.1") {
    const int want = variant == "2.1-long" ? 3 : variant == "2.2.1" ? 4 : 5;
    if (k1 != want) not_applicable(variant, "smallest cycle has the wrong length");
    if (cfg.pattern != Lemma1Pattern::OneCommonEdge) not_applicable(variant, "cycles do not share exactly one edge");
    const auto common = shared_edge_ends();
    const VertexId p = g.edge(common[0]).u;  // u < v by construction
    const VertexId q = g.edge(common[0]).v;
    const auto u = walk_from(c1, p, q);  // u_1 = p, u_2 = q
    const auto v = walk_from(c2, p, q);  // v_1 = p, v_2 = q
    auto U = [&](int i) { return u[i - 1]; };
    auto V = [&](int i) { return v[(i - 1) % k2]; };
    if (variant == "2.1-long") {
      if (k2 - 1 < 4) not_applicable(variant, "needs the far side of the second cycle to have length >= 4");
      pairs_with({{U(1), U(2)}, {U(2), U(3)}, {U(1), U(3)}});
      const int l = k2 / 2;
      if (k2 % 2 == 0) {
        pairs_with({{V(2), V(3)}, {V(l + 2), V(l + 3)}});
      } else {
        pairs_with({{V(2), V(3)}, {V(l + 3), V(l + 4)}});
      }
    } else if (variant == "2.2.1") {
      pairs_with({{V(2), V(3)}, {U(4), V(1)}});
      pairs_with({{V(2), U(3)}, {V(1), V(k2)}});
      pairs_with({{V(1), V(2)}, {U(3), U(4)}});
    } else {
      pairs_with({{U(4), U(5)}, {V(2), V(3)}});
      pairs_with({{V(1), U(5)}, {V(2), U(3)}});
      pairs_with({{V(1), V(2)}, {U(3), U(4)}});
    }
    return b.finish();
  }

  if (variant == "2.2.2-long" || variant == "2.3.2") {
    const int want = variant == "2.2.2-long" ? 4 : 5;
    if (k1 != want) not_applicable(variant, "smallest cycle has the wrong length");
    if (cfg.pattern != Lemma1Pattern::TwoCommonAdjacentEdges) {
      not_applicable(variant, "cycles do not share two adjacent edges");
    }
    const auto common = shared_edge_ends();
    const Edge e0 = g.edge(common[0]);
    const Edge e1 = g.edge(common[1]);
    const VertexId mid = e1.has(e0.u) ? e0.u : e0.v;
    const VertexId end_a = e0.other(mid);
    const VertexId end_b = e1.other(mid);
    const VertexId first = std::min(end_a, end_b);
    const auto u = walk_from(c1, first, mid);
    const auto v = walk_from(c2, first, mid);
    auto U = [&](int i) { return u[i - 1]; };
    auto V = [&](int i) { return v[(i - 1) % k2]; };
    if (variant == "2.2.2-long") {
      if (k2 - 2 < 4) not_applicable(variant, "needs the far side of the second cycle to have length >= 4");
      pairs_with({{U(4), V(1)}, {V(3), V(4)}});
      pairs_with({{V(1), V(2)}, {V(3), U(4)}});
      const int l = k2 / 2;
      if (k2 % 2 == 0) {
        pairs_with({{V(2), V(3)}, {V(l + 2), V(l + 3)}});
      } else {
        pairs_with({{V(2), V(3)}, {V(l + 3), V(l + 4)}});
      }
    } else {
      pairs_with({{V(1), U(5)}, {V(3), V(4)}});
      pairs_with({{V(1), V(2)}, {V(3), U(4)}});
      pairs_with({{V(2), V(3)}, {U(4), U(5)}});
    }
    return b.finish();
  }

  if (variant == "2.2.3") {
    if (cfg.pattern != Lemma1Pattern::EdgeDisjoint4Cycles) not_applicable(variant, "cycles are not two edge-disjoint 4-cycles");
    std::vector<VertexId> shared;
    for (VertexId x : c1.vertices)
      if (c2.contains_vertex(x)) shared.push_back(x);
    std::sort(shared.begin(), shared.end());
    const VertexId u1 = shared[0], u3 = shared[1];
    auto others = [&](const Cycle& c) {
      std::vector<VertexId> out;
      for (VertexId x : c.vertices)
        if (x != u1 && x != u3) out.push_back(x);
      std::sort(out.begin(), out.end());
      return out;
    };
    const auto a = others(c1);
    const auto d = others(c2);
    const VertexId u2 = a[0], u4 = a[1], v2 = d[0], v4 = d[1];
    pairs_with({{u1, u2}, {u3, u4}});
    pairs_with({{u2, u3}, {u1, u4}});
    pairs_with({{u1, v2}, {u3, v4}});
    pairs_with({{v2, u3}, {u1, v4}});
    return b.finish();
  }
  not_applicable(variant, "unknown variant");
}

inline EdgeColoring theorem2_scheme(const Graph& g, const std::string& variant) {
  const auto packing = max_edge_disjoint_triangles(g, true);

  if (variant == "thm2-claim3") {
    const auto dec = blocks(g);
    for (const auto& block : dec.blocks)
      if (block.size() != 1 && block.size() != 3) not_applicable(variant, "a block is neither a bridge nor a triangle");
    std::optional<Triangle> heavy;
    for (const auto& tri : all_triangles(g)) {
      if (std::all_of(tri.vertices.begin(), tri.vertices.end(), [&](VertexId v) { return g.degree(v) >= 3; })) {
        heavy = tri;
        break;
      }
    }
    if (!heavy) not_applicable(variant, "every triangle has a vertex of degree 2");
    const auto [v1, v2, v3] = heavy->vertices;
    ColoringBuilder b(g);
    std::vector<char> in_heavy(g.m(), 0);
    for (EdgeId e : heavy->edges) in_heavy[e] = 1;
    for (const auto& tri : all_triangles(g)) {
      if (tri == *heavy) continue;
      const Color c = b.fresh();
      for (EdgeId e : tri.edges) b.set(e, c);
    }
    for (EdgeId e = 0; e < g.m(); ++e)
      if (!in_heavy[e] && !b.assigned(e)) b.set(e, b.fresh());
    // the least edge at v_i outside the heavy triangle lies in H_i
    auto color_near = [&](VertexId v) {
      for (const auto& inc : g.incident(v))
        if (!in_heavy[inc.edge]) return b.color(inc.edge);
      not_applicable(variant, "component H_i is trivial");
    };
    const Color h1 = color_near(v1), h2 = color_near(v2), h3 = color_near(v3);
    b.set(v1, v3, h2);
    b.set(v1, v2, h3);
    b.set(v2, v3, h1);
    return b.finish();
  }

  const auto c1 = smallest_unpacked_cycle(g, packing);
  if (!c1) not_applicable(variant, "no cycle besides the packed triangles");
  const int k = c1->length();
  std::vector<int> owners;
  for (EdgeId e : c1->edges)
    if (const auto o = owning_triangle(packing, e)) owners.push_back(*o);
  std::vector<int> sorted_owners = owners;
  std::sort(sorted_owners.begin(), sorted_owners.end());
  if (std::adjacent_find(sorted_owners.begin(), sorted_owners.end()) != sorted_owners.end()) {
    not_applicable(variant, "a packed triangle meets the cycle in two edges");
  }

  if (variant == "thm2-case1") {
    if (!owners.empty()) not_applicable(variant, "cycle shares edges with packed triangles");
    ColoringBuilder b(g);
    paint_cycle(b, c1->vertices);
    for (const auto& tri : packing.triangles) {
      const Color c = b.fresh();
      for (EdgeId e : tri.edges) b.set(e, c);
    }
    return b.finish();
  }
  if (owners.empty()) not_applicable(variant, "cycle is edge-disjoint from the packed triangles");

  const bool even = variant == "thm2-2.1-l>=3";
  if (!even && variant != "thm2-2.2-l>=2") not_applicable(variant, "unknown variant");
  if (even && (k % 2 != 0 || k / 2 < 3)) not_applicable(variant, "needs an even cycle of length >= 6");
  if (!even && (k % 2 != 1 || (k - 1) / 2 < 2)) not_applicable(variant, "needs an odd cycle of length >= 5");
  const int l = even ? k / 2 : (k - 1) / 2;

  std::optional<Error> last;
  for (int step : {1, -1}) {
    for (int start = 0; start < k; ++start) {
      const auto walk = rotate(c1->vertices, start, step);
      auto U = [&](int i) { return walk[((i - 1) % k + k) % k]; };
      const auto t1 = owning_triangle(packing, *g.edge_id(U(1), U(2)));
      const auto t2 = owning_triangle(packing, *g.edge_id(U(l + 1), U(l + 2)));
      if (!t1 || !t2) continue;
      const VertexId w1 = third_vertex(packing.triangles[*t1], U(1), U(2));
      const VertexId w2 = third_vertex(packing.triangles[*t2], U(l + 1), U(l + 2));
      try {
        ColoringBuilder b(g);
        auto group = [&](std::vector<std::pair<VertexId, VertexId>> edges) {
          const Color c = b.fresh();
          for (auto [x, y] : edges) b.set(x, y, c);
        };
        if (even) {
          group({{U(1), w1}, {U(2), U(3)}});
          group({{U(2), w1}, {U(1), U(k)}});
          group({{U(1), U(2)}, {U(l + 1), U(l + 2)}});
          group({{w2, U(l + 1)}, {U(l + 2), U(l + 3)}});
          group({{w2, U(l + 2)}, {U(l), U(l + 1)}});
        } else {
          group({{U(1), w1}, {U(2), U(3)}});
          group({{U(2), w1}, {U(1), U(k)}});
          group({{U(l + 1), w2}, {U(l + 2), U(l + 3)}});
          group({{U(1), U(2)}, {U(l + 1), U(l + 2)}, {w2, U(l + 2)}});
        }
        for (int i = 0; i < packing.t(); ++i) {
          if (i == *t1 || i == *t2) continue;
          const auto& tri = packing.triangles[i];
          if (std::any_of(tri.edges.begin(), tri.edges.end(), [&](EdgeId e) { return b.assigned(e); })) {
            not_applicable(variant, "a scheme edge lies in another packed triangle");
          }
          const Color c = b.fresh();
          for (EdgeId e : tri.edges) b.set(e, c);
        }
        return b.finish();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SchemeNotApplicable) throw;
        last = e;
      }
    }
  }
  if (last) throw *last;
  not_applicable(variant, "no packed triangles on two opposite cycle edges");
}

}  // namespace detail

/// Text-specified colorings for graphs with two or more cycles (and the
/// triangle-bound refinements). Throws SchemeNotApplicable when the graph does
/// not have the scheme's shape.
inline EdgeColoring claim2_scheme_coloring(const Graph& g, const SchemeId& s) {
  require_connected(g, "claim2_scheme_coloring needs a connected graph");
  if (s.tag != SchemeTag::Claim2Config) throw Error(ErrorKind::Usage, "not a Claim2Config scheme");
  const auto variant = canonical_variant(s.variant);
  EdgeColoring c = variant.starts_with("thm2-") ? detail::theorem2_scheme(g, variant)
                                                : detail::theorem1_claim2(g, variant);
  return detail::verified(g, std::move(c), "scheme " + variant);
}

inline EdgeColoring claim2_scheme_coloring(const Graph& g, const std::string& variant) {
  return claim2_scheme_coloring(g, SchemeId{SchemeTag::Claim2Config, variant});
}

/// Dispatches any scheme tag to its construction.
inline EdgeColoring apply_scheme(const Graph& g, const SchemeId& s) {
  switch (s.tag) {
    case SchemeTag::CycleChartrand: return cycle_coloring(g);
    case SchemeTag::CyclePlusFresh: return cycle_plus_fresh(g);
    case SchemeTag::TrianglePacking: return triangle_packing_coloring(g, max_edge_disjoint_triangles(g, true));
    case SchemeTag::UnicyclicK3:
    case SchemeTag::UnicyclicK4:
    case SchemeTag::UnicyclicK5: {
      const auto build = detail::build_unicyclic(g);
      if (build.plan.tag != s.tag) throw Error(ErrorKind::SchemeNotApplicable, "cycle length does not match " + to_string(s));
      return build.coloring;
    }
    case SchemeTag::Claim2Config: return claim2_scheme_coloring(g, s);
  }
  throw Error(ErrorKind::Usage, "unknown scheme");
}

}  // namespace srclab
