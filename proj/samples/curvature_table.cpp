// Prints V, E, F, the euler characteristic and the curvature sum of every
// closed built-in complex, plus the conformal type of its universal cover.

#include "polysurf/polysurf.hpp"

#include <cstdio>

int main() {
  using namespace polysurf;
  std::printf("%-18s %4s %4s %4s %4s %8s  %s\n", "complex", "V", "E", "F", "chi", "sum k", "type");
  for (const auto& spec : closed_fixture_specs()) {
    auto c = generate(spec);
    auto gb = check_gauss_bonnet(c);
    auto verdict = classify(profile_from_complex(c));
    std::printf("%-18s %4d %4d %4d %4lld %8s  %s\n", to_string(spec).c_str(), gb.vertices, gb.edges, gb.faces,
                gb.chi_euler, to_string(gb.curvature_sum).c_str(), to_string(verdict.type).c_str());
  }
}
