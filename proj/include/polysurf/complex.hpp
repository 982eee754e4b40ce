#pragma once

// Polygonal surfaces as pure gluing data.
//
// Every polygon side is a dart. Faces are listed counterclockwise, so dart
// (f, i) runs from corner i to corner i+1 (mod sides). Three maps describe
// the surface:
//   phi   - next dart counterclockwise inside the same face
//   alpha - the dart glued to this one (kNoDart for boundary sides)
//   sigma - phi(alpha(d)), rotation of darts sharing an origin vertex
// A dart's origin corner doubles as its corner id, so vertices are orbits of
// corners under the link walk below.

#include "polysurf/error.hpp"
#include "polysurf/vertex_type.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

namespace polysurf {

using FaceId = std::int64_t;
using Dart = int;
inline constexpr Dart kNoDart = -1;

struct Slot {
  FaceId face = 0;
  int side = 0;
  auto operator<=>(const Slot&) const = default;
};

struct FaceDecl {
  FaceId id = 0;
  int sides = 0;
  bool operator==(const FaceDecl&) const = default;
};

struct Gluing {
  Slot a;
  Slot b;
  bool reversed = true;
};

struct GluingData {
  std::vector<FaceDecl> faces;
  std::vector<Gluing> gluings;
};

struct VertexRecord {
  int vertex_id = 0;
  VertexType vertex_type;
  bool is_boundary = false;
};

class PolygonalComplex;
PolygonalComplex build_complex(const GluingData& data);

class PolygonalComplex {
 public:
  PolygonalComplex() = default;

  // faces -------------------------------------------------------------
  int face_count() const noexcept { return static_cast<int>(sides_.size()); }
  int sides(int face) const { return sides_[face]; }
  FaceId face_id(int face) const { return ids_[face]; }
  std::optional<int> face_index(FaceId id) const {
    auto it = index_of_id_.find(id);
    if (it == index_of_id_.end()) return std::nullopt;
    return it->second;
  }
  int max_sides() const { return sides_.empty() ? 0 : *std::max_element(sides_.begin(), sides_.end()); }

  // darts -------------------------------------------------------------
  int dart_count() const noexcept { return static_cast<int>(dart_face_.size()); }
  Dart dart(int face, int side) const { return offset_[face] + side; }
  int face_of(Dart d) const { return dart_face_[d]; }
  int side_of(Dart d) const { return d - offset_[dart_face_[d]]; }
  Dart phi(Dart d) const {
    int f = dart_face_[d];
    return offset_[f] + (d - offset_[f] + 1) % sides_[f];
  }
  Dart phi_inv(Dart d) const {
    int f = dart_face_[d];
    return offset_[f] + (d - offset_[f] + sides_[f] - 1) % sides_[f];
  }
  Dart alpha(Dart d) const { return alpha_[d]; }
  bool is_boundary_dart(Dart d) const { return alpha_[d] == kNoDart; }
  /// Orientation flag of the gluing through `d` (true for boundary darts).
  bool reversed(Dart d) const { return reversed_[d]; }
  Dart sigma(Dart d) const { return alpha_[d] == kNoDart ? kNoDart : phi(alpha_[d]); }
  bool closed() const noexcept { return boundary_darts_ == 0; }
  int boundary_dart_count() const noexcept { return boundary_darts_; }

  // vertices ----------------------------------------------------------
  int vertex_count() const noexcept { return static_cast<int>(corners_.size()); }
  /// Vertex at the origin corner of `d`.
  int vertex_of(Dart d) const { return vertex_of_corner_[d]; }
  /// Corners around `v` in link order: cyclic for interior vertices, from one
  /// boundary side to the other for boundary vertices.
  const std::vector<Dart>& vertex_corners(int v) const { return corners_[v]; }
  bool vertex_is_boundary(int v) const { return vertex_boundary_[v]; }
  int degree(int v) const { return static_cast<int>(corners_[v].size()); }
  VertexType vertex_type(int v) const {
    std::vector<int> sizes;
    sizes.reserve(corners_[v].size());
    for (Dart c : corners_[v]) sizes.push_back(sides_[dart_face_[c]]);
    return VertexType(sizes);
  }
  int interior_vertex_count() const {
    return static_cast<int>(std::count(vertex_boundary_.begin(), vertex_boundary_.end(), false));
  }

  // edges -------------------------------------------------------------
  int edge_count() const noexcept { return static_cast<int>(edge_darts_.size()); }
  int edge_of(Dart d) const { return edge_of_dart_[d]; }
  /// First dart and its partner (kNoDart for boundary edges).
  std::pair<Dart, Dart> edge_darts(int e) const { return edge_darts_[e]; }

  /// V - E + F over all cells, boundary included.
  long long euler_number() const {
    return static_cast<long long>(vertex_count()) - edge_count() + face_count();
  }

  /// Gluing data equivalent to this complex (faces in index order).
  GluingData gluing_data() const {
    GluingData data;
    for (int f = 0; f < face_count(); ++f) data.faces.push_back({ids_[f], sides_[f]});
    for (int e = 0; e < edge_count(); ++e) {
      auto [d0, d1] = edge_darts_[e];
      if (d1 == kNoDart) continue;
      data.gluings.push_back({{ids_[face_of(d0)], side_of(d0)}, {ids_[face_of(d1)], side_of(d1)}, reversed_[d0]});
    }
    return data;
  }

 private:
  friend PolygonalComplex build_complex(const GluingData& data);

  void compute_vertices();
  void compute_edges();

  std::vector<FaceId> ids_;
  std::vector<int> sides_;
  std::vector<int> offset_;
  std::unordered_map<FaceId, int> index_of_id_;
  std::vector<int> dart_face_;
  std::vector<Dart> alpha_;
  std::vector<bool> reversed_;
  int boundary_darts_ = 0;

  std::vector<int> vertex_of_corner_;
  std::vector<std::vector<Dart>> corners_;
  std::vector<bool> vertex_boundary_;

  std::vector<int> edge_of_dart_;
  std::vector<std::pair<Dart, Dart>> edge_darts_;
};

// Walks the link of a vertex one corner at a time. A corner is entered
// through one of its two sides and left through the other; crossing a glued
// side lands on the partner corner, and a non-reversing gluing flips the
// walking direction.
namespace detail {

struct LinkStep {
  Dart corner = kNoDart;
  bool forward = true;  // leave through the out-side (the corner's own dart)
};

inline LinkStep link_next(const PolygonalComplex& c, LinkStep at) {
  if (at.forward) {
    Dart p = c.alpha(at.corner);
    if (p == kNoDart) return {kNoDart, true};
    if (c.reversed(at.corner)) return {c.phi(p), true};
    return {p, false};
  }
  Dart in = c.phi_inv(at.corner);
  Dart p = c.alpha(in);
  if (p == kNoDart) return {kNoDart, false};
  if (c.reversed(in)) return {p, false};
  return {c.phi(p), true};
}

}  // namespace detail

inline void PolygonalComplex::compute_vertices() {
  const int n = dart_count();
  vertex_of_corner_.assign(n, -1);
  corners_.clear();
  vertex_boundary_.clear();
  for (Dart start = 0; start < n; ++start) {
    if (vertex_of_corner_[start] != -1) continue;
    const int v = static_cast<int>(corners_.size());
    std::vector<Dart> fwd{start};
    bool closed_link = false;
    detail::LinkStep step{start, true};
    while (true) {
      step = detail::link_next(*this, step);
      if (step.corner == kNoDart) break;
      if (step.corner == start) {
        closed_link = true;
        break;
      }
      fwd.push_back(step.corner);
    }
    std::vector<Dart> order;
    if (closed_link) {
      order = std::move(fwd);
    } else {
      std::vector<Dart> back;
      step = {start, false};
      while (true) {
        step = detail::link_next(*this, step);
        if (step.corner == kNoDart) break;
        back.push_back(step.corner);
      }
      order.assign(back.rbegin(), back.rend());
      order.insert(order.end(), fwd.begin(), fwd.end());
    }
    for (Dart c : order) vertex_of_corner_[c] = v;
    corners_.push_back(std::move(order));
    vertex_boundary_.push_back(!closed_link);
  }
}

inline void PolygonalComplex::compute_edges() {
  const int n = dart_count();
  edge_of_dart_.assign(n, -1);
  edge_darts_.clear();
  for (Dart d = 0; d < n; ++d) {
    if (edge_of_dart_[d] != -1) continue;
    const int e = static_cast<int>(edge_darts_.size());
    edge_of_dart_[d] = e;
    if (alpha_[d] != kNoDart) edge_of_dart_[alpha_[d]] = e;
    edge_darts_.emplace_back(d, alpha_[d]);
  }
}

/// Validates gluing data and builds the dart structure. Darts are numbered
/// face by face in declaration order, side by side.
inline PolygonalComplex build_complex(const GluingData& data) {
  PolygonalComplex c;
  int total = 0;
  for (std::size_t i = 0; i < data.faces.size(); ++i) {
    const auto& face = data.faces[i];
    if (face.sides < 3)
      throw Error(ErrorKind::BadSideCount,
                  "face " + std::to_string(face.id) + " has " + std::to_string(face.sides) + " sides");
    if (!c.index_of_id_.emplace(face.id, static_cast<int>(i)).second)
      throw Error(ErrorKind::DuplicateFace, "face id " + std::to_string(face.id) + " declared twice");
    c.ids_.push_back(face.id);
    c.sides_.push_back(face.sides);
    c.offset_.push_back(total);
    for (int s = 0; s < face.sides; ++s) c.dart_face_.push_back(static_cast<int>(i));
    total += face.sides;
  }
  c.alpha_.assign(total, kNoDart);
  c.reversed_.assign(total, true);

  auto resolve = [&](const Slot& slot) {
    auto it = c.index_of_id_.find(slot.face);
    if (it == c.index_of_id_.end())
      throw Error(ErrorKind::BadSlot, "unknown face id " + std::to_string(slot.face));
    if (slot.side < 0 || slot.side >= c.sides_[it->second])
      throw Error(ErrorKind::BadSlot, "side " + std::to_string(slot.side) + " out of range for face " +
                                          std::to_string(slot.face));
    return c.dart(it->second, slot.side);
  };
  auto describe = [](const Slot& s) { return "[" + std::to_string(s.face) + "," + std::to_string(s.side) + "]"; };

  for (const auto& g : data.gluings) {
    Dart a = resolve(g.a);
    Dart b = resolve(g.b);
    if (a == b) throw Error(ErrorKind::SelfPairedSlot, "slot " + describe(g.a) + " paired with itself");
    if (c.alpha_[a] != kNoDart) throw Error(ErrorKind::DuplicateSlot, "slot " + describe(g.a) + " glued twice");
    if (c.alpha_[b] != kNoDart) throw Error(ErrorKind::DuplicateSlot, "slot " + describe(g.b) + " glued twice");
    c.alpha_[a] = b;
    c.alpha_[b] = a;
    c.reversed_[a] = c.reversed_[b] = g.reversed;
  }
  c.boundary_darts_ = static_cast<int>(std::count(c.alpha_.begin(), c.alpha_.end(), kNoDart));
  c.compute_vertices();
  c.compute_edges();
  return c;
}

/// One record per vertex, in vertex-id order.
inline std::vector<VertexRecord> vertex_records(const PolygonalComplex& c) {
  std::vector<VertexRecord> out;
  out.reserve(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) out.push_back({v, c.vertex_type(v), c.vertex_is_boundary(v)});
  return out;
}

struct EdgeToEdgeResult {
  bool edge_to_edge = true;
  /// Offending face pair (equal indices for a face glued to itself).
  std::optional<std::pair<int, int>> face_pair;
  std::optional<int> vertex;
  std::string witness;
};

/// False when two faces (or one face with itself) share two or more glued
/// edges, or when an interior vertex has degree below 3.
inline EdgeToEdgeResult is_edge_to_edge(const PolygonalComplex& c) {
  std::map<std::pair<int, int>, int> shared;
  for (int e = 0; e < c.edge_count(); ++e) {
    auto [d0, d1] = c.edge_darts(e);
    if (d1 == kNoDart) continue;
    int f = c.face_of(d0), g = c.face_of(d1);
    auto key = std::minmax(f, g);
    if (++shared[key] >= 2) {
      EdgeToEdgeResult r;
      r.edge_to_edge = false;
      r.face_pair = key;
      r.witness = "faces " + std::to_string(c.face_id(key.first)) + " and " + std::to_string(c.face_id(key.second)) +
                  " share at least two edges";
      return r;
    }
  }
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (c.vertex_is_boundary(v) || c.degree(v) >= 3) continue;
    EdgeToEdgeResult r;
    r.edge_to_edge = false;
    r.vertex = v;
    r.witness = "vertex " + std::to_string(v) + " has degree " + std::to_string(c.degree(v));
    return r;
  }
  return {};
}

/// Orientation (+1/-1 per face) making every gluing reversing, if one exists.
inline std::optional<std::vector<int>> consistent_orientation(const PolygonalComplex& c) {
  std::vector<int> orient(c.face_count(), 0);
  for (int root = 0; root < c.face_count(); ++root) {
    if (orient[root] != 0) continue;
    orient[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop();
      for (int s = 0; s < c.sides(f); ++s) {
        Dart d = c.dart(f, s);
        Dart p = c.alpha(d);
        if (p == kNoDart) continue;
        int g = c.face_of(p);
        int want = c.reversed(d) ? orient[f] : -orient[f];
        if (orient[g] == 0) {
          orient[g] = want;
          queue.push(g);
        } else if (orient[g] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return orient;
}

inline bool is_orientable(const PolygonalComplex& c) { return consistent_orientation(c).has_value(); }

/// Number of connected components of the face adjacency graph.
inline int component_count(const PolygonalComplex& c) {
  std::vector<int> parent(c.face_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = c.face_count();
  for (Dart d = 0; d < c.dart_count(); ++d) {
    if (c.alpha(d) == kNoDart) continue;
    int a = find(c.face_of(d)), b = find(c.face_of(c.alpha(d)));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace polysurf
