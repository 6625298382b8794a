// Solve, construct and classify a few small graphs.
#include <iostream>

#include "srclab/srclab.hpp"

int main() {
  using namespace srclab;

  const Graph c5 = named::cycle(5);
  const auto solved = src_exact(c5);
  std::cout << "src(C5) = " << solved.value << ", certificate " << to_text(solved.certificate) << '\n';

  const auto scheme = cycle_coloring(c5);
  std::cout << "cycle scheme " << to_text(scheme) << " verifies: " << std::boolalpha
            << is_strongly_rainbow_connected(c5, scheme).ok << '\n';

  const Graph bowtie = named::bowtie();
  for (const auto& label : classify(bowtie)) std::cout << "bowtie label " << to_string(label) << '\n';
  const auto packing = max_edge_disjoint_triangles(bowtie);
  std::cout << "bowtie: m - 2t = " << bowtie.m() - 2 * packing.t() << ", src = " << src_exact(bowtie).value << '\n';

  const Graph line = line_graph(named::complete(4));
  const auto coloring = triangle_packing_coloring(line, star_triangle_packing(named::complete(4), line));
  std::cout << "L(K4) " << emit_graph6(line) << " colored with " << coloring.color_count() << " colors\n";
}
