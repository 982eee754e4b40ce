#pragma once

// Isoperimetric quantities of finite face sets, plus star subdivision.

#include "polysurf/complex.hpp"
#include "polysurf/rational.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <vector>

namespace polysurf {

struct SubcomplexSelection {
  std::reference_wrapper<const PolygonalComplex> host;
  std::vector<int> faces;  // face indices
};

struct IsoperimetricReport {
  int face_count = 0;
  int boundary_edge_count = 0;
  Rational ratio;  // |F(H)| / |E(dH)|
  double rho_area = 0;
  double rho_perimeter = 0;
};

/// Area of the unit-side regular n-gon.
inline double unit_polygon_area(int n) { return n / (4.0 * std::tan(std::numbers::pi / n)); }

/// Coarse bound n^2/(4 pi) on the same area.
inline double unit_polygon_area_bound(int n) { return static_cast<double>(n) * n / (4.0 * std::numbers::pi); }

/// Center-to-corner distance of the unit regular n-gon: the spoke length
/// after star subdivision. Never below 1/sqrt(3), attained by triangles.
inline double spoke_length(int n) { return 1.0 / (2.0 * std::sin(std::numbers::pi / n)); }

namespace detail {
inline std::vector<char> membership(const SubcomplexSelection& sel) {
  const auto& c = sel.host.get();
  if (sel.faces.empty()) throw Error(ErrorKind::EmptySelection, "face selection is empty");
  std::vector<char> in(c.face_count(), 0);
  for (int f : sel.faces) {
    if (f < 0 || f >= c.face_count()) throw Error(ErrorKind::BadParameters, "face index out of range");
    in[f] = 1;
  }
  return in;
}
}  // namespace detail

/// Glued edges with exactly one side in the selection. Unglued sides have no
/// outside face and are never counted.
inline std::vector<int> boundary_edges(const SubcomplexSelection& sel) {
  const auto& c = sel.host.get();
  auto in = detail::membership(sel);
  std::vector<int> out;
  for (int e = 0; e < c.edge_count(); ++e) {
    auto [d0, d1] = c.edge_darts(e);
    if (d1 == kNoDart) continue;
    if (in[c.face_of(d0)] != in[c.face_of(d1)]) out.push_back(e);
  }
  return out;
}

inline IsoperimetricReport isoperimetric_report(const SubcomplexSelection& sel) {
  const auto& c = sel.host.get();
  auto in = detail::membership(sel);
  IsoperimetricReport r;
  for (int f = 0; f < c.face_count(); ++f) {
    if (!in[f]) continue;
    ++r.face_count;
    r.rho_area += unit_polygon_area(c.sides(f));
  }
  r.boundary_edge_count = static_cast<int>(boundary_edges(sel).size());
  if (r.boundary_edge_count == 0)
    throw Error(ErrorKind::ClosedSelection, "selection has no boundary edges; the ratio is undefined");
  r.rho_perimeter = r.boundary_edge_count;
  r.ratio = Rational(r.face_count, r.boundary_edge_count);
  return r;
}

/// Faces within dual-graph distance `radius` of `center`, in BFS order.
inline std::vector<int> dual_ball(const PolygonalComplex& c, int center, int radius) {
  std::vector<int> depth(c.face_count(), -1);
  std::vector<int> order{center};
  depth[center] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int f = order[head];
    if (depth[f] == radius) continue;
    for (int s = 0; s < c.sides(f); ++s) {
      Dart p = c.alpha(c.dart(f, s));
      if (p == kNoDart) continue;
      int g = c.face_of(p);
      if (depth[g] != -1) continue;
      depth[g] = depth[f] + 1;
      order.push_back(g);
    }
  }
  return order;
}

/// Reports for the dual balls of radius 0..max_radius around `center_face`.
/// Every face of the largest ball must have all of its sides glued, otherwise
/// boundary counts would be truncated by the rim of a finite ball.
inline std::vector<IsoperimetricReport> ball_profile(const PolygonalComplex& c, int center_face, int max_radius) {
  if (center_face < 0 || center_face >= c.face_count())
    throw Error(ErrorKind::BadParameters, "center face out of range");
  if (max_radius < 0) throw Error(ErrorKind::BadParameters, "max_radius must be >= 0");
  for (int f : dual_ball(c, center_face, max_radius))
    for (int s = 0; s < c.sides(f); ++s)
      if (c.is_boundary_dart(c.dart(f, s)))
        throw Error(ErrorKind::BallTouchesBoundary,
                    "ball of radius " + std::to_string(max_radius) + " reaches the rim of the complex");
  std::vector<IsoperimetricReport> out;
  for (int radius = 0; radius <= max_radius; ++radius)
    out.push_back(isoperimetric_report({c, dual_ball(c, center_face, radius)}));
  return out;
}

/// Replaces every n-gon by n triangles around a new center vertex. Triangle
/// (f, i) has side 0 on the old side i, side 1 on the spoke to corner i+1 and
/// side 2 on the spoke from corner i; ids are assigned in that order.
inline PolygonalComplex star_subdivide(const PolygonalComplex& c) {
  GluingData out;
  std::vector<int> first(c.face_count());
  int next = 0;
  for (int f = 0; f < c.face_count(); ++f) {
    first[f] = next;
    for (int i = 0; i < c.sides(f); ++i) out.faces.push_back({next++, 3});
  }
  for (int f = 0; f < c.face_count(); ++f) {
    const int n = c.sides(f);
    for (int i = 0; i < n; ++i) out.gluings.push_back({{first[f] + i, 1}, {first[f] + (i + 1) % n, 2}, true});
  }
  for (int e = 0; e < c.edge_count(); ++e) {
    auto [d0, d1] = c.edge_darts(e);
    if (d1 == kNoDart) continue;
    out.gluings.push_back({{first[c.face_of(d0)] + c.side_of(d0), 0},
                           {first[c.face_of(d1)] + c.side_of(d1), 0},
                           c.reversed(d0)});
  }
  return build_complex(out);
}

}  // namespace polysurf
