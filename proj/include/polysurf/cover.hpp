#pragma once

// Face-by-face development of universal covers with vertex-link closure.
//
// The developer grows a simply connected complex breadth first. Every new
// face is a copy of the base face across a frontier side. A pending cover
// vertex owns a linear fan of corners; when the fan reaches the degree of
// the base vertex it projects to, the two free sides at its ends are glued
// and the link is closed. Nothing else is ever identified.

#include "polysurf/complex.hpp"

#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace polysurf {

struct CoverLimit {
  std::optional<int> max_faces;
  std::optional<int> max_generation;

  static CoverLimit faces(int n) { return {n, std::nullopt}; }
  static CoverLimit generations(int g) { return {std::nullopt, g}; }
};

enum class HaltReason { Closure, Limit };

inline std::string to_string(HaltReason h) { return h == HaltReason::Closure ? "closure" : "limit"; }

struct CoverBall {
  PolygonalComplex cover_complex;
  /// Cover dart -> base dart.
  std::vector<Dart> projection;
  /// Cover face -> BFS depth from the seed face.
  std::vector<int> generation;
  HaltReason halted_by = HaltReason::Limit;

  std::vector<int> faces_per_generation() const {
    std::vector<int> counts;
    for (int g : generation) {
      if (g >= static_cast<int>(counts.size())) counts.resize(g + 1, 0);
      ++counts[g];
    }
    return counts;
  }
};

/// Development rules backed by an actual closed base complex.
class BaseComplexRules {
 public:
  explicit BaseComplexRules(const PolygonalComplex& base) : base_(base) {}

  int seed_face() const { return 0; }
  int sides(int base_face) const { return base_.sides(base_face); }
  /// Base face and side met when crossing side `side` of `base_face`.
  std::pair<int, int> across(int base_face, int side) const {
    Dart p = base_.alpha(base_.dart(base_face, side));
    return {base_.face_of(p), base_.side_of(p)};
  }
  int degree(int base_face, int corner) const { return base_.degree(base_.vertex_of(base_.dart(base_face, corner))); }
  bool may_glue(int f_out, int s_out, int f_in, int s_in) const {
    return base_.alpha(base_.dart(f_out, s_out)) == base_.dart(f_in, s_in);
  }

 private:
  const PolygonalComplex& base_;
};

/// Rules of the regular {p,q} tiling: one virtual p-gon, every vertex of
/// degree q, any two free sides may be glued.
class RegularTilingRules {
 public:
  RegularTilingRules(int p, int q) : p_(p), q_(q) {}
  int seed_face() const { return 0; }
  int sides(int) const { return p_; }
  std::pair<int, int> across(int, int) const { return {0, 0}; }
  int degree(int, int) const { return q_; }
  bool may_glue(int, int, int, int) const { return true; }

 private:
  int p_;
  int q_;
};

/// Mutable development state. `Rules` supplies face sizes, neighbours and
/// vertex degrees of the complex being unfolded.
template <class Rules>
class Developer {
 public:
  explicit Developer(Rules rules) : rules_(std::move(rules)) {
    add_face(rules_.seed_face(), 0);
    for (int s = 0; s < sides_[0]; ++s) frontier_.push_back(offset_[0] + s);
    drain_closures();
  }

  int face_count() const { return static_cast<int>(sides_.size()); }

  /// Breadth-first growth across frontier sides in (generation, creation)
  /// order. Returns how the growth stopped.
  HaltReason grow(const CoverLimit& limit) {
    while (!frontier_.empty()) {
      Dart d = frontier_.front();
      if (alpha_[d] != kNoDart) {
        frontier_.pop_front();
        continue;
      }
      const int gen = generation_[face_[d]];
      if (limit.max_generation && gen >= *limit.max_generation) return HaltReason::Limit;
      if (limit.max_faces && face_count() >= *limit.max_faces) return HaltReason::Limit;
      frontier_.pop_front();
      attach(d);
    }
    return HaltReason::Closure;
  }

  /// Completes the links of the vertices currently on the rim, one face at a
  /// time, without completing the vertices those new faces create.
  void complete_rim() {
    std::vector<Dart> rim;
    for (Dart d = 0; d < static_cast<Dart>(alpha_.size()); ++d)
      if (alpha_[d] == kNoDart) rim.push_back(d);
    for (Dart corner : rim) {
      while (true) {
        Fan f = fan(corner);
        if (f.closed) break;
        attach(f.last);
      }
    }
  }

  /// Snapshot as gluing data with face ids 0..F-1.
  GluingData gluing_data() const {
    GluingData data;
    for (int f = 0; f < face_count(); ++f) data.faces.push_back({f, sides_[f]});
    for (Dart d = 0; d < static_cast<Dart>(alpha_.size()); ++d) {
      Dart p = alpha_[d];
      if (p == kNoDart || p < d) continue;
      data.gluings.push_back({{face_[d], d - offset_[face_[d]]}, {face_[p], p - offset_[face_[p]]}, true});
    }
    return data;
  }

  const std::vector<int>& generations() const { return generation_; }
  const std::vector<int>& base_faces() const { return base_; }

 private:
  struct Fan {
    Dart first = kNoDart;  // corner whose incoming side is free
    Dart last = kNoDart;   // corner whose outgoing side is free
    int length = 0;
    bool closed = false;
  };

  Dart phi(Dart d) const {
    int f = face_[d];
    return offset_[f] + (d - offset_[f] + 1) % sides_[f];
  }
  Dart phi_inv(Dart d) const {
    int f = face_[d];
    return offset_[f] + (d - offset_[f] + sides_[f] - 1) % sides_[f];
  }
  int side(Dart d) const { return d - offset_[face_[d]]; }
  int degree_at(Dart corner) const { return rules_.degree(base_[face_[corner]], side(corner)); }

  int add_face(int base_face, int generation) {
    const int f = face_count();
    const int n = rules_.sides(base_face);
    offset_.push_back(static_cast<int>(alpha_.size()));
    sides_.push_back(n);
    base_.push_back(base_face);
    generation_.push_back(generation);
    for (int s = 0; s < n; ++s) {
      alpha_.push_back(kNoDart);
      face_.push_back(f);
      pending_.push_back(offset_[f] + s);
    }
    return f;
  }

  void glue(Dart a, Dart b) {
    alpha_[a] = b;
    alpha_[b] = a;
  }

  Fan fan(Dart corner) const {
    Fan f;
    Dart cur = corner;
    // walk backwards: the corner before `cur` sits across its incoming side
    while (true) {
      Dart in = phi_inv(cur);
      if (alpha_[in] == kNoDart) break;
      Dart prev = alpha_[in];
      if (prev == corner) {
        f.closed = true;
        break;
      }
      cur = prev;
    }
    f.first = cur;
    f.length = 1;
    while (alpha_[cur] != kNoDart) {
      Dart next = phi(alpha_[cur]);
      if (next == f.first) break;
      cur = next;
      ++f.length;
    }
    f.last = cur;
    return f;
  }

  void attach(Dart d) {
    auto [g, j] = rules_.across(base_[face_[d]], side(d));
    const int f = add_face(g, generation_[face_[d]] + 1);
    const Dart e = offset_[f] + j;
    glue(d, e);
    for (int s = 0; s < sides_[f]; ++s) frontier_.push_back(offset_[f] + s);
    pending_.push_back(d);
    pending_.push_back(e);
    drain_closures();
  }

  void drain_closures() {
    while (!pending_.empty()) {
      Dart corner = pending_.back();
      pending_.pop_back();
      Fan f = fan(corner);
      const int deg = degree_at(corner);
      if (f.closed) {
        if (f.length != deg)
          throw Error(ErrorKind::InconsistentDevelopment,
                      "closed link of length " + std::to_string(f.length) + " at a degree-" + std::to_string(deg) +
                          " vertex");
        continue;
      }
      if (f.length > deg)
        throw Error(ErrorKind::InconsistentDevelopment,
                    "fan of length " + std::to_string(f.length) + " exceeds vertex degree " + std::to_string(deg));
      if (f.length < deg) continue;
      Dart out = f.last;
      Dart in = phi_inv(f.first);
      if (!rules_.may_glue(base_[face_[out]], side(out), base_[face_[in]], side(in)))
        throw Error(ErrorKind::InconsistentDevelopment, "completed fan ends do not project to glued sides");
      glue(out, in);
      // the far end of the new edge may now complete as well
      pending_.push_back(in);
    }
  }

  Rules rules_;
  std::vector<int> sides_;
  std::vector<int> offset_;
  std::vector<int> base_;
  std::vector<int> generation_;
  std::vector<int> face_;
  std::vector<Dart> alpha_;
  std::deque<Dart> frontier_;
  std::vector<Dart> pending_;
};

/// Unfolds a closed, orientable, connected base complex from a copy of face 0.
inline CoverBall develop_universal_cover(const PolygonalComplex& base, const CoverLimit& limit) {
  if ((limit.max_faces && *limit.max_faces < 1) || (limit.max_generation && *limit.max_generation < 1))
    throw Error(ErrorKind::LimitTooSmall, "development limits must be >= 1");
  if (!base.closed()) throw Error(ErrorKind::HasBoundary, "the base complex must be closed");
  // only sphere bases have finite universal covers
  if (!limit.max_faces && !limit.max_generation && base.euler_number() != 2)
    throw Error(ErrorKind::BadParameters, "the universal cover is infinite; give max_faces or max_generation");
  if (base.face_count() == 0) throw Error(ErrorKind::BadParameters, "empty base complex");
  if (!is_orientable(base)) throw Error(ErrorKind::NonOrientable, "covers of non-orientable complexes");
  for (Dart d = 0; d < base.dart_count(); ++d)
    if (!base.reversed(d))
      throw Error(ErrorKind::NonOrientable, "base uses a non-reversing gluing; reorient it first");
  if (component_count(base) != 1) throw Error(ErrorKind::BadParameters, "the base complex must be connected");

  Developer<BaseComplexRules> dev{BaseComplexRules(base)};
  CoverBall ball;
  ball.halted_by = dev.grow(limit);
  ball.cover_complex = build_complex(dev.gluing_data());
  ball.generation = dev.generations();
  ball.projection.resize(ball.cover_complex.dart_count());
  for (int f = 0; f < ball.cover_complex.face_count(); ++f)
    for (int s = 0; s < ball.cover_complex.sides(f); ++s)
      ball.projection[ball.cover_complex.dart(f, s)] = base.dart(dev.base_faces()[f], s);
  return ball;
}

struct CoveringReport {
  bool ok = true;
  std::vector<Dart> violating_darts;
  std::vector<std::string> violations;

  void fail(Dart d, std::string why) {
    ok = false;
    violating_darts.push_back(d);
    violations.push_back("dart " + std::to_string(d) + ": " + std::move(why));
  }
};

/// Checks that the projection commutes with phi and alpha, keeps side counts,
/// and maps every interior cover vertex to a base vertex of the same type.
inline CoveringReport verify_covering(const CoverBall& ball, const PolygonalComplex& base) {
  const auto& cover = ball.cover_complex;
  if (static_cast<int>(ball.projection.size()) != cover.dart_count())
    throw Error(ErrorKind::MismatchedBase, "projection size differs from cover dart count");
  for (Dart p : ball.projection)
    if (p < 0 || p >= base.dart_count()) throw Error(ErrorKind::MismatchedBase, "projection leaves the base");

  CoveringReport report;
  for (Dart d = 0; d < cover.dart_count(); ++d) {
    const Dart pd = ball.projection[d];
    if (cover.sides(cover.face_of(d)) != base.sides(base.face_of(pd)))
      report.fail(d, "side count differs from its image");
    if (ball.projection[cover.phi(d)] != base.phi(pd)) report.fail(d, "projection does not commute with phi");
    Dart a = cover.alpha(d);
    if (a != kNoDart && ball.projection[a] != base.alpha(pd))
      report.fail(d, "projection does not commute with alpha");
  }
  for (int v = 0; v < cover.vertex_count(); ++v) {
    if (cover.vertex_is_boundary(v)) continue;
    Dart c = cover.vertex_corners(v).front();
    int bv = base.vertex_of(ball.projection[c]);
    if (cover.vertex_type(v) != base.vertex_type(bv))
      report.fail(c, "vertex-type " + cover.vertex_type(v).to_string() + " differs from base " +
                         base.vertex_type(bv).to_string());
  }
  return report;
}

}  // namespace polysurf
