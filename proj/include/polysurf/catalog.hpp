#pragma once

// Enumeration of canonical vertex-types by curvature sign.

#include "polysurf/curvature.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace polysurf {

struct CatalogQuery {
  int side_bound = 3;
  int degree_min = 3;
  std::optional<int> degree_max;
  CurvatureSign sign = CurvatureSign::Positive;
};

namespace detail {

inline bool has_sign(const Rational& k, CurvatureSign s) {
  switch (s) {
    case CurvatureSign::Positive: return k > 0;
    case CurvatureSign::Zero: return k == 0;
    case CurvatureSign::Negative: return k < 0;
  }
  return false;
}

/// With every k_i >= 3, degree 7 already forces kappa <= 1 - 7/2 + 7/3 < 0.
inline constexpr int kNonNegativeDegreeCap = 6;

inline std::pair<int, int> degree_range(const CatalogQuery& q) {
  if (q.side_bound < 3) throw Error(ErrorKind::BadParameters, "side bound must be >= 3");
  if (q.degree_min < 1) throw Error(ErrorKind::BadParameters, "degree_min must be >= 1");
  int hi;
  if (q.degree_max) {
    hi = *q.degree_max;
  } else if (q.sign == CurvatureSign::Negative) {
    throw Error(ErrorKind::UnboundedQuery, "negative-curvature catalogs need degree_max");
  } else {
    hi = kNonNegativeDegreeCap;
  }
  if (q.sign != CurvatureSign::Negative) hi = std::min(hi, kNonNegativeDegreeCap);
  return {q.degree_min, hi};
}

// Calls visit(multiset) for each nondecreasing tuple in [3, N]^d.
template <class Visit>
void for_each_multiset(int d, int n, std::vector<int>& current, Visit&& visit) {
  if (static_cast<int>(current.size()) == d) {
    visit(current);
    return;
  }
  int lo = current.empty() ? 3 : current.back();
  for (int k = lo; k <= n; ++k) {
    current.push_back(k);
    for_each_multiset(d, n, current, visit);
    current.pop_back();
  }
}

}  // namespace detail

/// All canonical vertex-types with 3 <= k_i <= N, degree in range and the
/// requested curvature sign, sorted lexicographically. Curvature depends only
/// on the multiset of sizes, so multisets are filtered first and only the
/// survivors are expanded into their distinct dihedral arrangements.
inline std::vector<VertexType> enumerate_vertex_types(const CatalogQuery& q) {
  auto [lo, hi] = detail::degree_range(q);
  std::set<VertexType> out;
  std::vector<int> scratch;
  for (int d = lo; d <= hi; ++d) {
    detail::for_each_multiset(d, q.side_bound, scratch, [&](const std::vector<int>& multiset) {
      Rational kappa = Rational(1) - Rational(d, 2);
      for (int k : multiset) kappa += Rational(1, k);
      if (!detail::has_sign(kappa, q.sign)) return;
      std::vector<int> perm = multiset;
      do {
        out.insert(VertexType(perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
    });
  }
  return {out.begin(), out.end()};
}

/// For positive catalogs the least curved type (worst case for the vertex
/// bound); for zero and negative catalogs the type closest to zero from below.
inline std::pair<VertexType, Rational> extremal_curvature(const CatalogQuery& q) {
  auto types = enumerate_vertex_types(q);
  if (types.empty()) throw Error(ErrorKind::EmptyCatalog, "catalog query matched no vertex-types");
  std::optional<std::pair<VertexType, Rational>> best;
  for (const auto& t : types) {
    Rational k = curvature(t);
    bool better = !best || (q.sign == CurvatureSign::Positive ? k < best->second : k > best->second);
    if (better) best.emplace(t, k);
  }
  return *best;
}

}  // namespace polysurf
