// Small custom sweep: all 3-colorings of the θ-skeletons on six vertices.

#include <iostream>

#include "tricolor/tricolor.hpp"

int main() {
  using namespace tricolor;
  std::size_t instances = 0, nonsingular = 0, unimodular = 0;
  for (const auto& skeleton : generate_skeletons(Family::bicyclic_theta, 6)) {
    ColoringStream colorings(skeleton, ColoringMode::exhaustive(GreenOrientation::canonical));
    while (auto g = colorings.next()) {
      const Analysis a(*g);
      ++instances;
      nonsingular += nonsingular_predicate(a).holds;
      unimodular += unimodular_predicate(a).holds;
    }
  }
  std::cout << instances << " in-model colorings, " << nonsingular << " nonsingular, " << unimodular
            << " unimodular\n";

  SweepConfig cfg;
  cfg.family = Family::bicyclic_theta;
  cfg.max_order = 6;
  std::cout << to_text(run_sweep(cfg));
}
