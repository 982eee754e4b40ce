#include "polysurf/gauss_bonnet.hpp"
#include "polysurf/generators.hpp"
#include "polysurf/isoperimetric.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

using namespace polysurf;

namespace {

// Definition scan: an edge is on the boundary of H when it has two sides and
// exactly one of them lies in a face of H. Walks every face's sides instead
// of the edge table.
std::set<std::pair<Dart, Dart>> scan_boundary(const PolygonalComplex& c, const std::vector<int>& faces) {
  std::set<int> H(faces.begin(), faces.end());
  std::set<std::pair<Dart, Dart>> out;
  for (int f = 0; f < c.face_count(); ++f) {
    for (int s = 0; s < c.sides(f); ++s) {
      Dart d = c.dart(f, s);
      Dart p = c.alpha(d);
      if (p == kNoDart) continue;
      bool in_d = H.count(f), in_p = H.count(c.face_of(p));
      if (in_d != in_p) out.insert({std::min(d, p), std::max(d, p)});
    }
  }
  return out;
}

std::set<std::pair<Dart, Dart>> as_dart_pairs(const PolygonalComplex& c, const std::vector<int>& edges) {
  std::set<std::pair<Dart, Dart>> out;
  for (int e : edges) {
    auto [a, b] = c.edge_darts(e);
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InconsistentDevelopment;
}

}  // namespace

TEST(Isoperimetric, SingleFaces) {
  auto c = pq_ball(7, 3, 2);
  EXPECT_EQ(boundary_edges({c, {0}}).size(), 7u);
  auto r = isoperimetric_report({c, {0}});
  EXPECT_EQ(r.ratio, Rational(1, 7));
  auto hex = pq_ball(6, 3, 1);
  auto h = isoperimetric_report({hex, {0}});
  EXPECT_NEAR(h.rho_area, 3 * std::sqrt(3.0) / 2, 1e-12);
  EXPECT_LE(h.rho_area, unit_polygon_area_bound(6));
  EXPECT_NEAR(unit_polygon_area_bound(6), 36 / (4 * std::numbers::pi), 1e-12);
  for (int n = 3; n <= 20; ++n) {
    EXPECT_LE(unit_polygon_area(n), unit_polygon_area_bound(n));
    EXPECT_GE(spoke_length(n), 1 / std::sqrt(3.0) - 1e-15);
  }
  EXPECT_NEAR(unit_polygon_area(4), 1.0, 1e-12);
}

TEST(Isoperimetric, ClosedComplexHasNoOutside) {
  auto dodec = generate(GeneratorSpec::platonic("dodecahedron"));
  std::vector<int> all(12);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(boundary_edges({dodec, all}).empty());
  EXPECT_EQ(kind_of([&] { isoperimetric_report({dodec, all}); }), ErrorKind::ClosedSelection);
  EXPECT_EQ(kind_of([&] { boundary_edges({dodec, {}}); }), ErrorKind::EmptySelection);
}

TEST(Isoperimetric, CenterAndNeighbours) {
  auto c = pq_ball(7, 3, 3);
  auto ball = dual_ball(c, 0, 1);
  EXPECT_EQ(ball.size(), 8u);
  EXPECT_EQ(as_dart_pairs(c, boundary_edges({c, ball})), scan_boundary(c, ball));
}

TEST(Isoperimetric, RandomSelectionsMatchScan) {
  std::mt19937_64 rng(1234);
  for (auto [p, q] : {std::pair{7, 3}, std::pair{6, 3}}) {
    auto c = pq_ball(p, q, 4);
    std::uniform_int_distribution<int> pick(0, c.face_count() - 1), count(1, c.face_count());
    for (int trial = 0; trial < 100; ++trial) {
      std::set<int> chosen;
      int k = count(rng);
      while (static_cast<int>(chosen.size()) < k) chosen.insert(pick(rng));
      std::vector<int> faces(chosen.begin(), chosen.end());
      EXPECT_EQ(as_dart_pairs(c, boundary_edges({c, faces})), scan_boundary(c, faces));
    }
  }
}

TEST(Isoperimetric, BallProfiles) {
  // {6,3}: radius-k ball has 3k^2+3k+1 hexagons and 6(2k+1) boundary edges
  auto hex = pq_ball(6, 3, 6);
  auto prof = ball_profile(hex, 0, 5);
  for (int k = 0; k <= 5; ++k) {
    EXPECT_EQ(prof[k].face_count, 3 * k * k + 3 * k + 1) << k;
    EXPECT_EQ(prof[k].boundary_edge_count, 6 * (2 * k + 1)) << k;
    if (k > 0) EXPECT_GT(prof[k].ratio, prof[k - 1].ratio);
  }
  EXPECT_EQ(prof[0].ratio, Rational(1, 6));

  auto hyp = pq_ball(7, 3, 5);
  auto hp = ball_profile(hyp, 0, 4);
  for (const auto& r : hp) EXPECT_LT(to_double(r.ratio), 1.0);
  for (std::size_t k = 0; k < hp.size(); ++k)
    EXPECT_EQ(as_dart_pairs(hyp, boundary_edges({hyp, dual_ball(hyp, 0, static_cast<int>(k))})),
              scan_boundary(hyp, dual_ball(hyp, 0, static_cast<int>(k))));

  EXPECT_EQ(kind_of([&] { ball_profile(hyp, 0, 5); }), ErrorKind::BallTouchesBoundary);
}

TEST(StarSubdivide, Counts) {
  auto cube = generate(GeneratorSpec::platonic("cube"));
  auto s = star_subdivide(cube);
  EXPECT_EQ(s.face_count(), 24);
  EXPECT_EQ(s.vertex_count(), 14);
  EXPECT_EQ(s.edge_count(), 36);
  EXPECT_EQ(euler_characteristic(s), 2);
  EXPECT_TRUE(check_gauss_bonnet(s).consistent);
  EXPECT_TRUE(is_orientable(s));

  auto torus = star_subdivide(generate(GeneratorSpec::square_torus()));
  EXPECT_EQ(torus.face_count(), 4);
  EXPECT_EQ(torus.vertex_count(), 2);
  EXPECT_EQ(torus.edge_count(), 6);
  EXPECT_EQ(euler_characteristic(torus), 0);
}

TEST(StarSubdivide, PreservesEulerNumberAndOrientability) {
  for (const auto& spec : closed_fixture_specs()) {
    auto c = generate(spec);
    auto s = star_subdivide(c);
    EXPECT_EQ(s.euler_number(), c.euler_number()) << to_string(spec);
    EXPECT_EQ(s.vertex_count(), c.vertex_count() + c.face_count());
    EXPECT_TRUE(is_orientable(s));
    for (int f = 0; f < s.face_count(); ++f) EXPECT_EQ(s.sides(f), 3);
  }
  auto disk = star_subdivide(pq_ball(7, 3, 2));
  EXPECT_EQ(disk.euler_number(), 1);
}
