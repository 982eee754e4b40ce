#pragma once

#include "polysurf/complex.hpp"
#include "polysurf/curvature.hpp"

namespace polysurf {

struct GaussBonnetReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  long long chi_euler = 0;
  Rational curvature_sum;
  bool consistent = false;
};

namespace detail {
inline void require_closed(const PolygonalComplex& c, const char* what) {
  if (!c.closed())
    throw Error(ErrorKind::HasBoundary, std::string(what) + " needs a closed complex (" +
                                            std::to_string(c.boundary_dart_count()) + " boundary sides)");
}
}  // namespace detail

inline long long euler_characteristic(const PolygonalComplex& c) {
  detail::require_closed(c, "euler_characteristic");
  return c.euler_number();
}

inline Rational curvature_sum(const PolygonalComplex& c) {
  detail::require_closed(c, "curvature_sum");
  Rational total = 0;
  for (int v = 0; v < c.vertex_count(); ++v) total += curvature(c.vertex_type(v));
  return total;
}

/// `consistent` is false only if the complex was built incorrectly.
inline GaussBonnetReport check_gauss_bonnet(const PolygonalComplex& c) {
  GaussBonnetReport r;
  r.chi_euler = euler_characteristic(c);
  r.curvature_sum = curvature_sum(c);
  r.vertices = c.vertex_count();
  r.edges = c.edge_count();
  r.faces = c.face_count();
  r.consistent = Rational(r.chi_euler) == r.curvature_sum;
  return r;
}

/// A closed surface whose vertex curvatures are all >= c0 > 0 has at most
/// 2/c0 vertices.
inline Rational vertex_bound(const Rational& c0) {
  if (c0 <= 0) throw Error(ErrorKind::NonPositiveC0, "c0 must be positive, got " + to_string(c0));
  return Rational(2) / c0;
}

}  // namespace polysurf
