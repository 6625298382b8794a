#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace srclab;

namespace {

std::vector<ClassLabel> labels_of(const Graph& g) { return classify(g); }

ClassLabel L(ClassTag tag, int t = 0) { return {tag, t}; }

// C4 on 0..3 with pendant paths of the given lengths at vertices 0 and 2.
Graph c4_opposite_paths(int a, int b) {
  std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  int next = 4;
  for (auto [root, len] : {std::pair{0, a}, std::pair{2, b}}) {
    int prev = root;
    for (int i = 0; i < len; ++i) {
      pairs.emplace_back(prev, next);
      prev = next++;
    }
  }
  return from_pairs(next, pairs);
}

}  // namespace

TEST(PendantProfile, Examples) {
  const auto tail = pendant_profile(c4_with_tail(2));
  EXPECT_EQ(tail.k(), 4);
  EXPECT_EQ(tail.nontrivial_count(), 1);
  const auto& t0 = tail.trees[0];
  EXPECT_EQ(t0.root, 0);
  EXPECT_TRUE(t0.is_endpoint_path());

  const auto c5 = pendant_profile(named::cycle(5));
  EXPECT_EQ(c5.nontrivial_count(), 0);
  EXPECT_EQ(c5.cycle, (std::vector<VertexId>{0, 1, 2, 3, 4}));

  const auto star = from_pairs(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {3, 6}});
  const auto sp = pendant_profile(star);
  EXPECT_EQ(sp.nontrivial_count(), 1);
  EXPECT_FALSE(sp.trees[0].is_endpoint_path());
  EXPECT_FALSE(sp.trees[0].is_path());
}

TEST(PendantProfile, TreesPartitionVerticesAndEdges) {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& g : enumerate_unicyclic(n)) {
      const auto p = pendant_profile(g);
      std::vector<int> vcount(g.n(), 0), ecount(g.m(), 0);
      for (const auto& t : p.trees) {
        for (VertexId v : t.vertices) ++vcount[v];
        for (EdgeId e : t.edges) ++ecount[e];
      }
      for (EdgeId e : p.cycle_edges) ++ecount[e];
      EXPECT_TRUE(std::all_of(vcount.begin(), vcount.end(), [](int c) { return c == 1; })) << emit_graph6(g);
      EXPECT_TRUE(std::all_of(ecount.begin(), ecount.end(), [](int c) { return c == 1; })) << emit_graph6(g);
      for (int i = 0; i < p.k(); ++i) EXPECT_EQ(p.trees[i].nontrivial(), g.degree(p.cycle[i]) > 2);
    }
  }
}

TEST(PendantProfile, RejectsNonUnicyclic) {
  EXPECT_EQ(error_kind_of([] { pendant_profile(named::complete(4)); }), ErrorKind::NotUnicyclic);
  EXPECT_EQ(error_kind_of([] { pendant_profile(named::path(4)); }), ErrorKind::NotUnicyclic);
}

TEST(Classify, Examples) {
  const auto tri_pendant = from_pairs(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_EQ(labels_of(tri_pendant), (std::vector<ClassLabel>{L(ClassTag::G1), L(ClassTag::GBar, 1)}));
  EXPECT_EQ(labels_of(c4_opposite_paths(1, 2)), (std::vector<ClassLabel>{L(ClassTag::G2)}));
  EXPECT_EQ(labels_of(named::bowtie()), (std::vector<ClassLabel>{L(ClassTag::GBar, 2)}));
  EXPECT_EQ(labels_of(named::complete(4)), (std::vector<ClassLabel>{L(ClassTag::Other)}));
  EXPECT_EQ(labels_of(named::cycle(5)), (std::vector<ClassLabel>{L(ClassTag::C5)}));
  EXPECT_EQ(labels_of(named::cycle(4)), (std::vector<ClassLabel>{L(ClassTag::G3)}));
  EXPECT_EQ(labels_of(c4_with_tail(3)), (std::vector<ClassLabel>{L(ClassTag::G3)}));
  EXPECT_TRUE(has_label(labels_of(named::path(4)), ClassTag::Tree));
  EXPECT_EQ(gbar_label(labels_of(named::path(4))), 0);
}

TEST(Classify, AdjacentTreesAreNotG2) {
  const auto g = from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}});
  EXPECT_EQ(labels_of(g), (std::vector<ClassLabel>{L(ClassTag::Other)}));
}

TEST(Classify, InteriorRootedPathDependsOnOption) {
  // C4 with two pendant edges at vertex 0: the tree is a path with its root in the middle.
  const auto g = from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}});
  EXPECT_FALSE(has_label(classify(g), ClassTag::G3));
  ClassifyOptions lax;
  lax.path_requires_endpoint_root = false;
  EXPECT_TRUE(has_label(classify(g, lax), ClassTag::G3));
  EXPECT_EQ(src_exact(g).value, g.m() - 3);
}

TEST(Classify, TreeIffSrcEqualsM) {
  for (const auto& g : enumerate_connected_graphs(6, 15)) {
    EXPECT_EQ(has_label(classify(g), ClassTag::Tree), src_exact(g).value == g.m()) << emit_graph6(g);
  }
}

TEST(Classify, Disconnected) {
  EXPECT_EQ(error_kind_of([] { classify(from_pairs(3, {{0, 1}})); }), ErrorKind::Disconnected);
}

TEST(D2Tree, Examples) {
  const auto bow = d2_tree(named::bowtie());
  EXPECT_EQ(bow.m(), 2);
  EXPECT_EQ(bow.n(), 3);
  EXPECT_EQ(canonical_form(bow), canonical_form(named::path(3)));

  const auto tri = d2_tree(named::complete(3));
  EXPECT_EQ(tri.m(), 1);

  // two triangles joined by a bridge, each with a pendant edge: t = 2, m = 10
  const auto g = from_pairs(9, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}, {0, 6}, {5, 7}, {7, 8}});
  ASSERT_EQ(gbar_label(classify(g)), 2);
  const auto d = d2_tree(g);
  EXPECT_EQ(d.m(), g.m() - 4);

  EXPECT_EQ(error_kind_of([] { d2_tree(named::complete(4)); }), ErrorKind::NotGBar);
  EXPECT_EQ(error_kind_of([] { d2_tree(named::cycle(4)); }), ErrorKind::NotGBar);
}

TEST(D2Tree, IsATreeWithMMinus2tEdges) {
  int members = 0;
  for (const auto& g : enumerate_connected_graphs(8, 12)) {
    const auto t = gbar_label(classify(g));
    if (!t) continue;
    ++members;
    const auto d = d2_tree(g);
    EXPECT_EQ(d.m(), g.m() - 2 * *t) << emit_graph6(g);
    EXPECT_TRUE(is_connected(d)) << emit_graph6(g);
    EXPECT_FALSE(girth(d)) << emit_graph6(g);
  }
  EXPECT_GT(members, 100);
}

TEST(D2Tree, NineVertexMembers) {
  // trees on 7 vertices with a triangle hung on each of two leaves
  for (const auto& tree : enumerate_trees(7)) {
    std::vector<VertexId> leaves;
    for (VertexId v = 0; v < tree.n(); ++v)
      if (tree.degree(v) == 1) leaves.push_back(v);
    auto pairs = tree.edge_pairs();
    pairs.emplace_back(leaves[0], 7);
    pairs.emplace_back(leaves[0], 8);
    pairs.emplace_back(7, 8);
    const auto g = from_pairs(9, pairs);
    ASSERT_EQ(gbar_label(classify(g)), 1);
    const auto d = d2_tree(g);
    EXPECT_EQ(d.m(), g.m() - 2);
    EXPECT_TRUE(is_connected(d));
    EXPECT_EQ(d.m(), d.n() - 1);
  }
}

TEST(Packing, Examples) {
  EXPECT_EQ(max_edge_disjoint_triangles(named::complete(4)).t(), 1);
  EXPECT_EQ(max_edge_disjoint_triangles(named::bowtie()).t(), 2);
  EXPECT_EQ(max_edge_disjoint_triangles(named::cycle(5)).t(), 0);
  EXPECT_EQ(max_edge_disjoint_triangles(named::complete(5)).t(), 2);
  EXPECT_TRUE(max_edge_disjoint_triangles(named::complete(4)).certified_maximum);
  EXPECT_FALSE(max_edge_disjoint_triangles(named::complete(4), false).certified_maximum);
}

TEST(Packing, ExactMatchesSubsetSearchAndBeatsGreedy) {
  for (const auto& g : enumerate_connected_graphs(7, 13)) {
    if (all_triangles(g).size() > 12) continue;
    const auto exact = max_edge_disjoint_triangles(g, true);
    const auto greedy = max_edge_disjoint_triangles(g, false);
    EXPECT_TRUE(is_valid_packing(g, exact));
    EXPECT_TRUE(is_valid_packing(g, greedy));
    EXPECT_GE(exact.t(), greedy.t());
    EXPECT_EQ(exact.t(), oracle::max_packing(to_plain(g))) << emit_graph6(g);
  }
}

TEST(Packing, MaximalPackingsAreMaximal) {
  for (const auto& g : {named::complete(5), named::complete(4), named::bowtie()}) {
    const auto tri = all_triangles(g);
    for (const auto& p : maximal_triangle_packings(g)) {
      ASSERT_TRUE(is_valid_packing(g, p));
      std::set<EdgeId> used;
      for (const auto& t : p.triangles) used.insert(t.edges.begin(), t.edges.end());
      for (const auto& t : tri) {
        const bool free = std::none_of(t.edges.begin(), t.edges.end(), [&](EdgeId e) { return used.count(e); });
        EXPECT_FALSE(free) << "a disjoint triangle could still be added";
      }
    }
  }
}

TEST(Lemma1, Examples) {
  const auto diamond = from_pairs(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
  const auto d = lemma1_configuration(diamond);
  EXPECT_EQ(d.girth, 3);
  EXPECT_EQ(d.pattern, Lemma1Pattern::OneCommonEdge);

  // two 4-cycles 0-1-2-3 and 0-4-2-5 share the opposite vertices 0 and 2
  const auto two_squares = from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}, {2, 5}, {5, 0}});
  const auto s = lemma1_configuration(two_squares);
  EXPECT_EQ(s.girth, 4);
  EXPECT_EQ(s.pattern, Lemma1Pattern::TwoCommonAdjacentEdges) << to_string(s.pattern);
  const auto squares = cycles_of_length(two_squares, 4);
  auto find = [&](std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    return *std::find_if(squares.begin(), squares.end(), [&](const Cycle& c) { return c.edges == edges; });
  };
  const auto first = find({*two_squares.edge_id(0, 1), *two_squares.edge_id(1, 2), *two_squares.edge_id(2, 3),
                           *two_squares.edge_id(3, 0)});
  const auto second = find({*two_squares.edge_id(0, 4), *two_squares.edge_id(4, 2), *two_squares.edge_id(2, 5),
                            *two_squares.edge_id(5, 0)});
  const auto pair = cycle_pair_pattern(two_squares, first, second);
  EXPECT_EQ(pair.pattern, Lemma1Pattern::EdgeDisjoint4Cycles);
  EXPECT_TRUE(lemma1_allows(4, pair.pattern));
  EXPECT_FALSE(lemma1_allows(5, pair.pattern));

  EXPECT_EQ(lemma1_configuration(named::bowtie()).pattern, Lemma1Pattern::FewerThanTwoCommonVertices);
  EXPECT_EQ(lemma1_configuration(named::cycle(5)).pattern, Lemma1Pattern::NoSecondCycle);
  EXPECT_EQ(error_kind_of([] { lemma1_configuration(named::cycle(6)); }), ErrorKind::GirthOutOfRange);
  EXPECT_EQ(error_kind_of([] { lemma1_configuration(named::path(3)); }), ErrorKind::GirthOutOfRange);
}

TEST(Lemma1, PatternsByGirth) {
  std::set<Lemma1Pattern> seen4;
  for (const auto& g : enumerate_connected_graphs(7, 21)) {
    const auto gir = girth(g);
    if (!gir || *gir > 5) continue;
    const auto cfg = lemma1_configuration(g);
    if (cfg.common_vertices < 2) continue;
    EXPECT_TRUE(lemma1_allows(cfg.girth, cfg.pattern)) << emit_graph6(g) << " " << to_string(cfg.pattern);
    if (cfg.girth == 3) {
      EXPECT_EQ(cfg.pattern, Lemma1Pattern::OneCommonEdge);
    }
    if (cfg.girth == 4) seen4.insert(cfg.pattern);
  }
  EXPECT_TRUE(seen4.count(Lemma1Pattern::OneCommonEdge));
  EXPECT_TRUE(seen4.count(Lemma1Pattern::TwoCommonAdjacentEdges));
  // Never chosen as (C1, C2): a mixed 4-cycle always sorts between the two.
  EXPECT_FALSE(seen4.count(Lemma1Pattern::EdgeDisjoint4Cycles));
}

TEST(LineGraph, Examples) {
  const auto lp4 = line_graph(named::path(4));
  EXPECT_EQ(canonical_form(lp4), canonical_form(named::path(3)));

  const auto lk4 = line_graph(named::complete(4));
  EXPECT_EQ(lk4.n(), 6);
  EXPECT_EQ(lk4.m(), 12);
  for (VertexId v = 0; v < lk4.n(); ++v) EXPECT_EQ(lk4.degree(v), 4);
  // octahedron: K6 minus a perfect matching
  std::vector<std::pair<int, int>> octahedron;
  const auto k6 = named::complete(6);
  for (const auto& e : k6.edges())
    if (!(e.u % 2 == 0 && e.v == e.u + 1)) octahedron.emplace_back(e.u, e.v);
  EXPECT_EQ(canonical_form(lk4), canonical_form(from_pairs(6, octahedron)));

  const auto stars = star_cliques(named::complete(4));
  EXPECT_EQ(stars.size(), 4u);
  for (const auto& s : stars) EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(is_clique_decomposition(lk4, stars));
}

TEST(LineGraph, StarCliquesPartitionAndCoverEachVertexAtMostTwice) {
  for (const auto& g : enumerate_connected_graphs(6, 10)) {
    const auto line = line_graph(g);
    const auto stars = star_cliques(g);
    EXPECT_TRUE(is_clique_decomposition(line, stars)) << emit_graph6(g);
    std::vector<int> hits(line.n(), 0);
    for (const auto& s : stars)
      for (VertexId v : s) ++hits[v];
    for (int h : hits) EXPECT_LE(h, 2);
  }
}

TEST(Cubic, Examples) {
  EXPECT_TRUE(is_cubic(named::complete(4)));
  EXPECT_TRUE(is_cubic(named::complete_bipartite(3, 3)));
  EXPECT_TRUE(is_cubic(named::prism()));
  EXPECT_TRUE(is_cubic(named::petersen()));
  EXPECT_FALSE(is_cubic(named::cycle(5)));
}

TEST(Cubic, StarTrianglePacking) {
  for (const auto& g : {named::complete(4), named::complete_bipartite(3, 3), named::prism(), named::petersen()}) {
    const auto line = line_graph(g);
    const auto p = star_triangle_packing(g, line);
    EXPECT_EQ(p.t(), g.n());
    EXPECT_TRUE(is_valid_packing(line, p));
    EXPECT_EQ(line.m() - 2 * p.t(), g.n());
  }
  EXPECT_EQ(error_kind_of([] { star_triangle_packing(named::cycle(5), line_graph(named::cycle(5))); }),
            ErrorKind::NotCubic);
}
