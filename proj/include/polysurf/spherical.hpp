#pragma once

// Unit regular polygons on the sphere of radius r.
//
// A unit regular r-spherical n-gon is n isosceles triangles around its
// center, each with base 1 and apex angle 2*pi/n. The base angle phi obeys
//
//     sin^2(phi) = (1 + cos(2*pi/n)) / (1 + cos(1/r)),
//
// which only has a solution below pi/2 when r > n/(2*pi). The interior angle
// of the polygon is 2*phi.

#include "polysurf/curvature.hpp"
#include "polysurf/error.hpp"
#include "polysurf/vertex_type.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace polysurf {

struct SphericalAngle {
  double r = 0;
  int n = 0;
  double phi = 0;  // base angle, radians
};

struct SphericalPolygonSpec {
  double r = 0;
  int n = 0;
  double phi = 0;
  double interior_angle = 0;
  double circumradius = 0;  // geodesic distance center -> corner
  double area = 0;
};

inline double min_radius(int n) { return n / (2.0 * std::numbers::pi); }

namespace detail {
inline void check_polygon(double r, int n) {
  if (n < 3) throw Error(ErrorKind::BadN, "polygons need n >= 3, got " + std::to_string(n));
  if (!(r > min_radius(n)))
    throw Error(ErrorKind::RadiusTooSmall,
                "r = " + std::to_string(r) + " must exceed n/(2 pi) = " + std::to_string(min_radius(n)));
}
}  // namespace detail

/// Right-hand side of the base-angle equation.
inline double base_angle_rhs(double r, int n) {
  return (1.0 + std::cos(2.0 * std::numbers::pi / n)) / (1.0 + std::cos(1.0 / r));
}

/// Closed form: with 1 + cos(2x) = 2cos^2(x) the square root of the right-hand
/// side is cos(pi/n) / cos(1/(2r)), which avoids cancellation near the limit.
inline SphericalAngle phi_S(double r, int n) {
  detail::check_polygon(r, n);
  double s = std::cos(std::numbers::pi / n) / std::cos(0.5 / r);
  return {r, n, std::asin(std::min(1.0, s))};
}

/// Sum of the r-spherical interior angles 2*phi_S(r, k_i) around a vertex.
inline double spherical_angle_sum(const VertexType& vt, double r) {
  double total = 0;
  for (int k : vt.tuple()) total += 2.0 * phi_S(r, k).phi;
  return total;
}

inline SphericalPolygonSpec polygon_spec(double r, int n) {
  SphericalAngle a = phi_S(r, n);
  SphericalPolygonSpec p;
  p.r = r;
  p.n = n;
  p.phi = a.phi;
  p.interior_angle = 2.0 * a.phi;
  // right triangle center / corner / edge midpoint: sin(R/r) sin(pi/n) = sin(1/(2r))
  p.circumradius = r * std::asin(std::min(1.0, std::sin(0.5 / r) / std::sin(std::numbers::pi / n)));
  // n center triangles with sides R/r, R/r, 1/r; L'Huilier gives the excess
  // directly, where r^2 (angle sum - (n-2) pi) cancels badly for large r
  const double leg = p.circumradius / r, base = 1.0 / r, s = leg + base / 2;
  const double t = std::tan(s / 2) * std::tan(base / 4) * std::tan(base / 4) * std::tan((s - base) / 2);
  p.area = r * r * n * 4.0 * std::atan(std::sqrt(std::max(0.0, t)));
  return p;
}

struct CriticalRadius {
  double t0 = 0;
  /// Per input type: radius where its r-spherical angle-sum equals 2*pi.
  std::vector<double> thresholds;
};

struct CriticalRadiusOptions {
  double margin = 0.01;
  double tolerance = 1e-12;
  int max_iterations = 500;
};

/// Radius beyond which every given type has r-spherical angle-sum below 2*pi.
/// Each threshold is found by bisection, using that the angle-sum decreases
/// in r and tends to the Euclidean angle-sum, which must be below 2*pi.
inline CriticalRadius critical_radius(std::span<const VertexType> types, const CriticalRadiusOptions& opt = {}) {
  if (types.empty()) throw Error(ErrorKind::BadParameters, "critical_radius needs at least one vertex-type");
  if (opt.margin < 0) throw Error(ErrorKind::BadParameters, "margin must be >= 0");
  const double two_pi = 2.0 * std::numbers::pi;
  CriticalRadius out;
  for (const auto& vt : types) {
    if (angle_sum(vt).coefficient_of_pi >= 2)
      throw Error(ErrorKind::NotPositivelyCurved, vt.to_string() + " has Euclidean angle-sum >= 2 pi");
    auto excess = [&](double r) { return spherical_angle_sum(vt, r) - two_pi; };

    const double floor_r = min_radius(vt.max_sides());
    double lo = std::nextafter(floor_r, INFINITY);
    if (excess(lo) <= 0) {
      // already below 2*pi at the smallest admissible radius
      out.thresholds.push_back(floor_r);
      continue;
    }
    double hi = std::max(2.0 * floor_r, 1.0);
    int guard = 0;
    while (excess(hi) >= 0) {
      hi *= 2.0;
      if (++guard > 200) throw Error(ErrorKind::NonConvergence, "no upper bracket for " + vt.to_string());
    }
    int it = 0;
    while (hi - lo > opt.tolerance * std::max(1.0, hi)) {
      if (++it > opt.max_iterations) throw Error(ErrorKind::NonConvergence, "bisection cap reached");
      double mid = 0.5 * (lo + hi);
      (excess(mid) >= 0 ? lo : hi) = mid;
    }
    out.thresholds.push_back(hi);
  }
  out.t0 = *std::max_element(out.thresholds.begin(), out.thresholds.end()) * (1.0 + opt.margin);
  return out;
}

}  // namespace polysurf
