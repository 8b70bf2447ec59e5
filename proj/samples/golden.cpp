// Determinant and inverse of a small θ-graph, by both routes.

#include <iostream>

#include "tricolor/tricolor.hpp"

int main() {
  using namespace tricolor;
  const ColoredDigraph g = parse_graph(
      "n=6\n"
      "1 2 r\n2 3 r\n4 3 g\n4 1 r\n"
      "1 6 r\n2 5 r\n5 6 r\n");

  const Analysis a(g);
  std::cout << "shape: " << to_string(a.shape()) << "\n";
  std::cout << "det (combinatorial): " << det_combinatorial(a) << "\n";
  std::cout << "det (Bareiss): " << exact::to_string(exact::det_exact(adjacency_matrix(g).matrix())) << "\n";

  const auto inv = inverse_combinatorial(a);
  std::cout << "inverse:\n" << format_matrix(inv);

  for (const auto& p : mm_alternating_paths(a, 2, 5)) {
    std::cout << "3 ~> 6: " << format_vertices(p.path.vertices) << " weight "
              << exact::to_string(path_weight(g, p.path)) << "\n";
  }
  std::cout << "inverse 3-colored: " << (inverse_is_3colored(a).holds ? "yes" : "no") << "\n";
}
