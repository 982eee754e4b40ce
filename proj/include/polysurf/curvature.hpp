#pragma once

// Exact angle-sums, combinatorial curvature and the curvature-sign type
// classification. No floating point in this header.

#include "polysurf/complex.hpp"
#include "polysurf/rational.hpp"
#include "polysurf/vertex_type.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace polysurf {

/// Angle-sum expressed as a multiple of pi.
struct AngleSum {
  Rational coefficient_of_pi;
};

/// Sum of interior angles (1 - 2/k) * pi of unit regular k-gons around the vertex.
inline AngleSum angle_sum(const VertexType& vt) {
  if (vt.degree() < 1) throw Error(ErrorKind::BadVertexType, "empty vertex-type");
  Rational total = 0;
  for (int k : vt.tuple()) total += Rational(1) - Rational(2, k);
  return {total};
}

/// kappa = 1 - deg/2 + sum 1/k_i.
inline Rational curvature(const VertexType& vt) {
  if (vt.degree() < 1) throw Error(ErrorKind::BadVertexType, "empty vertex-type");
  Rational kappa = Rational(1) - Rational(vt.degree(), 2);
  for (int k : vt.tuple()) kappa += Rational(1, k);
  return kappa;
}

enum class CurvatureSign { Positive, Zero, Negative };
enum class SignSummary { AllPositive, AllZero, AllNegative, Mixed };

inline std::string to_string(SignSummary s) {
  switch (s) {
    case SignSummary::AllPositive: return "all_positive";
    case SignSummary::AllZero: return "all_zero";
    case SignSummary::AllNegative: return "all_negative";
    case SignSummary::Mixed: return "mixed";
  }
  return "?";
}

/// The vertex-types a classification is asked about, plus an optional bound
/// on polygon sizes. Built either from the interior vertices of a complex or
/// from a declared set of types.
struct CurvatureProfile {
  enum class Source { Complex, DeclaredTypes };

  Source source = Source::DeclaredTypes;
  std::vector<VertexType> types;
  std::optional<int> side_bound;
  /// Euler characteristic when the source is a closed complex.
  std::optional<long long> euler_characteristic;

  SignSummary signs() const {
    bool pos = false, zero = false, neg = false;
    for (const auto& t : types) {
      int s = sign(curvature(t));
      pos |= s > 0;
      zero |= s == 0;
      neg |= s < 0;
    }
    if (pos + zero + neg != 1) return SignSummary::Mixed;
    return pos ? SignSummary::AllPositive : zero ? SignSummary::AllZero : SignSummary::AllNegative;
  }

  std::optional<Rational> min_curvature() const {
    std::optional<Rational> best;
    for (const auto& t : types) {
      Rational k = curvature(t);
      if (!best || k < *best) best = k;
    }
    return best;
  }
};

inline CurvatureProfile profile_from_types(std::vector<VertexType> types, std::optional<int> side_bound) {
  CurvatureProfile p;
  p.source = CurvatureProfile::Source::DeclaredTypes;
  p.types = std::move(types);
  p.side_bound = side_bound;
  return p;
}

/// Interior vertices only. A finite complex always has a side bound: its
/// largest face.
inline CurvatureProfile profile_from_complex(const PolygonalComplex& c) {
  if (!is_orientable(c)) throw Error(ErrorKind::NonOrientable, "classification requires an orientable complex");
  CurvatureProfile p;
  p.source = CurvatureProfile::Source::Complex;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (!c.vertex_is_boundary(v)) p.types.push_back(c.vertex_type(v));
  p.side_bound = c.max_sides();
  if (c.closed()) p.euler_characteristic = c.euler_number();
  return p;
}

enum class ConformalType { Elliptic, Parabolic, Hyperbolic, Indeterminate };

inline std::string to_string(ConformalType t) {
  switch (t) {
    case ConformalType::Elliptic: return "Elliptic";
    case ConformalType::Parabolic: return "Parabolic";
    case ConformalType::Hyperbolic: return "Hyperbolic";
    case ConformalType::Indeterminate: return "Indeterminate";
  }
  return "?";
}

struct TypeVerdict {
  ConformalType type = ConformalType::Indeterminate;
  std::string justification;
};

/// Elliptic needs every curvature positive and a side bound; Parabolic needs
/// every curvature zero; Hyperbolic needs every curvature negative and a side
/// bound. Anything else is Indeterminate with the unmet hypothesis named.
inline TypeVerdict classify(const CurvatureProfile& profile) {
  if (profile.types.empty()) throw Error(ErrorKind::EmptyProfile, "no interior vertices to classify");

  const SignSummary s = profile.signs();
  const Rational kmin = *profile.min_curvature();
  const bool from_complex = profile.source == CurvatureProfile::Source::Complex;
  const bool sphere_quotient = profile.euler_characteristic && *profile.euler_characteristic == 2;
  std::string bound = profile.side_bound ? "polygons have at most " + std::to_string(*profile.side_bound) + " sides"
                                         : "no side bound given";

  TypeVerdict v;
  switch (s) {
    case SignSummary::AllPositive:
      if (!profile.side_bound) {
        v.justification = "curvature strictly positive at every vertex, but " + bound +
                          "; the positive case needs a bound on polygon sizes";
        return v;
      }
      v.type = ConformalType::Elliptic;
      v.justification = "curvature strictly positive at every vertex (min " + to_string(kmin) + "), " + bound +
                        "; the surface is the Riemann sphere";
      return v;
    case SignSummary::AllZero:
      v.type = ConformalType::Parabolic;
      v.justification = "curvature zero at every vertex; the universal cover is the plane";
      if (from_complex && !sphere_quotient)
        v.justification += " (the complex itself is a quotient of the plane, not the plane)";
      return v;
    case SignSummary::AllNegative:
      if (!profile.side_bound) {
        v.justification = "curvature strictly negative at every vertex, but " + bound +
                          "; the negative case needs a bound on polygon sizes";
        return v;
      }
      v.type = ConformalType::Hyperbolic;
      v.justification = "curvature strictly negative at every vertex, " + bound + "; the universal cover is the disc";
      if (from_complex) v.justification += " (the complex itself is a quotient of the disc)";
      return v;
    case SignSummary::Mixed:
      v.justification = "curvature signs are mixed (min " + to_string(kmin) + "); no uniform-sign hypothesis holds";
      return v;
  }
  return v;
}

enum class AmbientSurface { Sphere, Plane };

inline std::string to_string(AmbientSurface a) { return a == AmbientSurface::Sphere ? "sphere" : "plane"; }

struct ExclusionResult {
  std::set<AmbientSurface> excluded;
  VertexType extremal;
  Rational extremal_curvature;
  std::string justification;
};

/// Which of the sphere and the plane cannot carry an edge-to-edge tiling whose
/// tiles have at least `min_sides` sides and whose vertices have degree at
/// least `min_degree`. Curvature decreases in every k_i and in the degree, so
/// the most curved admissible vertex-type is [min_sides x min_degree].
inline ExclusionResult exclusion_check(int min_sides, int min_degree = 3) {
  if (min_sides < 3) throw Error(ErrorKind::BadParameters, "min_sides must be >= 3");
  if (min_degree < 3) throw Error(ErrorKind::BadParameters, "edge-to-edge tilings have vertex degree >= 3");
  std::vector<int> tuple(min_degree, min_sides);
  ExclusionResult r;
  r.extremal = VertexType(tuple);
  r.extremal_curvature = curvature(r.extremal);
  const int s = sign(r.extremal_curvature);
  const std::string head =
      "extremal vertex-type " + r.extremal.to_string() + " has curvature " + to_string(r.extremal_curvature);
  if (s > 0) {
    r.justification = head + " > 0; nothing is excluded";
  } else if (s == 0) {
    r.excluded = {AmbientSurface::Sphere};
    r.justification = head + " = 0; every vertex has curvature <= 0, so the curvature sum cannot equal 2";
  } else {
    r.excluded = {AmbientSurface::Sphere, AmbientSurface::Plane};
    r.justification = head + " < 0; every vertex is negatively curved, so the surface is hyperbolic";
  }
  return r;
}

}  // namespace polysurf
