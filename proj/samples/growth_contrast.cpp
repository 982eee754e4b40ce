// Dual-graph balls in the {7,3} and {6,3} tilings: face count over boundary
// length. The first stays bounded, the second keeps growing.

#include "polysurf/polysurf.hpp"

#include <cstdio>

int main(int argc, char** argv) {
  using namespace polysurf;
  int radius = argc > 1 ? std::atoi(argv[1]) : 4;
  for (auto [p, q] : {std::pair{7, 3}, std::pair{6, 3}}) {
    // one extra generation so the largest ball has no rim faces
    auto c = pq_ball(p, q, radius + 1);
    std::printf("{%d,%d}\n", p, q);
    auto prof = ball_profile(c, 0, radius);
    for (std::size_t k = 0; k < prof.size(); ++k)
      std::printf("  r=%zu  |F|=%-5d |dE|=%-5d ratio=%.5f\n", k, prof[k].face_count, prof[k].boundary_edge_count,
                  to_double(prof[k].ratio));
  }
}
