#pragma once

// Mesh approximation of the piece-wise geodesic metric on an r-spherical
// realization of a complex.
//
// Each face lives in its own chart: a unit regular r-spherical polygon
// centered at the north pole. Nodes are sampled on every face, identified
// across glued sides, and linked inside one face by great-circle arcs. Every
// mesh path is therefore a genuine piece-wise geodesic, and every mesh
// distance is an upper bound on the true distance.

#include "polysurf/complex.hpp"
#include "polysurf/spherical.hpp"

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace polysurf {

using Vec3 = Eigen::Vector3d;

/// Angle between two unit vectors, stable for nearly (anti)parallel inputs.
inline double unit_angle(const Vec3& a, const Vec3& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

/// Point at fraction t along the minor great-circle arc from a to b.
inline Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
  double theta = unit_angle(a, b);
  if (theta < 1e-15) return a;
  double s = std::sin(theta);
  return ((std::sin((1 - t) * theta) / s) * a + (std::sin(t * theta) / s) * b).normalized();
}

/// One face realized as a unit regular r-spherical polygon. Positions are
/// unit vectors; multiply by r for points on the radius-r sphere.
struct EmbeddedFace {
  int face = 0;
  int n = 0;
  double r = 0;
  Vec3 center = Vec3::UnitZ();
  std::vector<Vec3> corners;       // counterclockwise seen from outside
  std::vector<Vec3> side_normals;  // side k runs corner k -> k+1; normals point inward

  double distance(const Vec3& a, const Vec3& b) const { return r * unit_angle(a, b); }
  double edge_length(int k) const { return distance(corners[k], corners[(k + 1) % n]); }

  double interior_angle(int k) const {
    const Vec3& p = corners[k];
    auto tangent = [&](const Vec3& q) { return (q - p.dot(q) * p).normalized(); };
    Vec3 t1 = tangent(corners[(k + n - 1) % n]);
    Vec3 t2 = tangent(corners[(k + 1) % n]);
    return std::atan2(t1.cross(t2).norm(), t1.dot(t2));
  }

  bool contains(const Vec3& u, double tol = 1e-12) const {
    for (const auto& normal : side_normals)
      if (normal.dot(u) < -tol) return false;
    return true;
  }

  /// The face is geodesically convex and lies in an open hemisphere, so the
  /// minor arc between two of its points stays inside; the midpoint check
  /// guards against charts that break that assumption.
  bool arc_inside(const Vec3& a, const Vec3& b, double tol = 1e-12) const {
    return contains(a, tol) && contains(b, tol) && contains(slerp(a, b, 0.5), tol);
  }
};

inline EmbeddedFace embed_face(int face, int n, double r) {
  SphericalPolygonSpec spec = polygon_spec(r, n);
  EmbeddedFace ef;
  ef.face = face;
  ef.n = n;
  ef.r = r;
  const double polar = spec.circumradius / r;
  for (int k = 0; k < n; ++k) {
    double az = 2.0 * std::numbers::pi * k / n;
    ef.corners.emplace_back(std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az), std::cos(polar));
  }
  for (int k = 0; k < n; ++k) ef.side_normals.push_back(ef.corners[k].cross(ef.corners[(k + 1) % n]).normalized());
  return ef;
}

inline std::vector<EmbeddedFace> embed_faces(const PolygonalComplex& c, double r) {
  if (!(r > min_radius(c.max_sides())))
    throw Error(ErrorKind::RadiusTooSmall, "r must exceed (largest face)/(2 pi) = " +
                                               std::to_string(min_radius(c.max_sides())));
  std::vector<EmbeddedFace> out;
  out.reserve(c.face_count());
  for (int f = 0; f < c.face_count(); ++f) out.push_back(embed_face(f, c.sides(f), r));
  return out;
}

/// A point of the surface given in the chart of one face.
struct SurfacePoint {
  int face = 0;
  Vec3 position = Vec3::UnitZ();
};

struct MeshOptions {
  double h = 0.1;
  std::size_t node_budget = 200000;
  /// Links join same-face nodes at distance <= link_factor * h.
  double link_factor = 2.0;
};

enum class NodeKind { Vertex, Edge, Interior };

struct MeshNode {
  NodeKind kind = NodeKind::Interior;
  int face = 0;  // a face whose chart holds `position`
  Vec3 position;
  int vertex = -1;
  int edge = -1;
};

struct DistanceEstimate {
  double value = 0;  // upper bound on the piece-wise geodesic distance
  double h = 0;
};

struct DiameterEstimate {
  double value = 0;
  double h = 0;
  int node_a = -1;
  int node_b = -1;
};

class MeshGraph {
 public:
  double r = 0;
  double h = 0;
  int subdivisions = 0;  // M: samples per unit edge and per spoke
  bool closed = false;
  std::vector<EmbeddedFace> faces;
  std::vector<MeshNode> nodes;
  std::vector<std::vector<int>> face_nodes;
  std::vector<std::vector<Vec3>> face_positions;  // parallel to face_nodes
  std::vector<int> vertex_node;

  // CSR adjacency
  std::vector<int> adj_offset;
  std::vector<int> adj_target;
  std::vector<double> adj_weight;

  int node_count() const { return static_cast<int>(nodes.size()); }
  std::size_t link_count() const { return adj_target.size() / 2; }

  /// Dijkstra from several seeds with initial distances.
  std::vector<double> distances_from(const std::vector<std::pair<int, double>>& seeds) const {
    std::vector<double> dist(nodes.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (auto [s, d0] : seeds) {
      if (d0 < dist[s]) {
        dist[s] = d0;
        heap.emplace(d0, s);
      }
    }
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (int k = adj_offset[u]; k < adj_offset[u + 1]; ++k) {
        double nd = d + adj_weight[k];
        int v = adj_target[k];
        if (nd < dist[v]) {
          dist[v] = nd;
          heap.emplace(nd, v);
        }
      }
    }
    return dist;
  }

  std::vector<double> distances_from(int source) const { return distances_from({{source, 0.0}}); }
};

namespace detail {

// Grid point of the triangle fan of a face: triangle k is (center, corner k,
// corner k+1), row j runs from the spoke to corner k to the spoke to corner
// k+1 at fraction j/M from the center, with j+1 points.
inline Vec3 fan_point(const EmbeddedFace& ef, int k, int j, int i, int M) {
  if (j == 0) return ef.center;
  Vec3 a = slerp(ef.center, ef.corners[k], static_cast<double>(j) / M);
  Vec3 b = slerp(ef.center, ef.corners[(k + 1) % ef.n], static_cast<double>(j) / M);
  return slerp(a, b, static_cast<double>(i) / j);
}

inline double max_fan_spacing(const EmbeddedFace& ef, int M) {
  double worst = 0;
  for (int j = 0; j < M; ++j) {
    for (int i = 0; i <= j; ++i) {
      Vec3 p = fan_point(ef, 0, j, i, M);
      worst = std::max(worst, ef.distance(p, fan_point(ef, 0, j + 1, i, M)));
      worst = std::max(worst, ef.distance(p, fan_point(ef, 0, j + 1, i + 1, M)));
      if (i < j) worst = std::max(worst, ef.distance(p, fan_point(ef, 0, j, i + 1, M)));
    }
  }
  for (int i = 0; i < M; ++i)
    worst = std::max(worst, ef.distance(fan_point(ef, 0, M, i, M), fan_point(ef, 0, M, i + 1, M)));
  return worst;
}

}  // namespace detail

/// Node count of a mesh with M subdivisions:
///   V + E*(M-1) + sum over faces of (1 + n_f * M*(M-1)/2).
inline std::size_t mesh_node_count(const PolygonalComplex& c, int M) {
  std::size_t total = static_cast<std::size_t>(c.vertex_count()) + static_cast<std::size_t>(c.edge_count()) * (M - 1);
  for (int f = 0; f < c.face_count(); ++f)
    total += 1 + static_cast<std::size_t>(c.sides(f)) * M * (M - 1) / 2;
  return total;
}

/// Smallest M >= ceil(1/h) with grid spacing <= h on every face size present.
inline int mesh_subdivisions(const PolygonalComplex& c, double r, double h) {
  std::set<int> sizes;
  for (int f = 0; f < c.face_count(); ++f) sizes.insert(c.sides(f));
  int M = std::max(1, static_cast<int>(std::ceil(1.0 / h - 1e-9)));
  for (int n : sizes) {
    EmbeddedFace ef = embed_face(0, n, r);
    while (detail::max_fan_spacing(ef, M) > h * (1 + 1e-12)) {
      ++M;
      if (M > 100000) throw Error(ErrorKind::MeshTooFine, "cannot reach spacing h");
    }
  }
  return M;
}

inline MeshGraph build_mesh(const PolygonalComplex& c, double r, const MeshOptions& opt = {}) {
  if (!(opt.h > 0 && opt.h <= 0.5)) throw Error(ErrorKind::BadParameters, "mesh resolution h must lie in (0, 0.5]");
  MeshGraph mesh;
  mesh.r = r;
  mesh.h = opt.h;
  mesh.closed = c.closed();
  mesh.faces = embed_faces(c, r);
  const int M = mesh_subdivisions(c, r, opt.h);
  mesh.subdivisions = M;
  const std::size_t predicted = mesh_node_count(c, M);
  if (predicted > opt.node_budget)
    throw Error(ErrorKind::MeshTooFine, std::to_string(predicted) + " nodes exceed the budget of " +
                                            std::to_string(opt.node_budget));
  mesh.nodes.reserve(predicted);

  // shared nodes: vertices, then edge samples
  mesh.vertex_node.resize(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) {
    Dart d = c.vertex_corners(v).front();
    const auto& ef = mesh.faces[c.face_of(d)];
    mesh.vertex_node[v] = mesh.node_count();
    mesh.nodes.push_back({NodeKind::Vertex, c.face_of(d), ef.corners[c.side_of(d)], v, -1});
  }
  std::vector<int> edge_base(c.edge_count());
  for (int e = 0; e < c.edge_count(); ++e) {
    Dart d = c.edge_darts(e).first;
    const auto& ef = mesh.faces[c.face_of(d)];
    int s = c.side_of(d);
    edge_base[e] = mesh.node_count();
    for (int i = 1; i < M; ++i)
      mesh.nodes.push_back({NodeKind::Edge, c.face_of(d),
                            slerp(ef.corners[s], ef.corners[(s + 1) % ef.n], static_cast<double>(i) / M), -1, e});
  }

  // per-face node lists, in that face's chart
  mesh.face_nodes.resize(c.face_count());
  mesh.face_positions.resize(c.face_count());
  for (int f = 0; f < c.face_count(); ++f) {
    const auto& ef = mesh.faces[f];
    auto& ids = mesh.face_nodes[f];
    auto& pos = mesh.face_positions[f];
    for (int s = 0; s < ef.n; ++s) {
      Dart d = c.dart(f, s);
      ids.push_back(mesh.vertex_node[c.vertex_of(d)]);
      pos.push_back(ef.corners[s]);
      const int e = c.edge_of(d);
      const bool along = c.edge_darts(e).first == d || !c.reversed(d);
      for (int i = 1; i < M; ++i) {
        int sample = along ? i : M - i;
        ids.push_back(edge_base[e] + sample - 1);
        pos.push_back(slerp(ef.corners[s], ef.corners[(s + 1) % ef.n], static_cast<double>(i) / M));
      }
    }
    ids.push_back(mesh.node_count());
    pos.push_back(ef.center);
    mesh.nodes.push_back({NodeKind::Interior, f, ef.center, -1, -1});
    for (int k = 0; k < ef.n; ++k) {
      for (int j = 1; j < M; ++j) {
        for (int i = 0; i < j; ++i) {
          Vec3 p = detail::fan_point(ef, k, j, i, M);
          ids.push_back(mesh.node_count());
          pos.push_back(p);
          mesh.nodes.push_back({NodeKind::Interior, f, p, -1, -1});
        }
      }
    }
  }

  // links
  struct Link {
    int a, b;
    double w;
  };
  std::vector<Link> links;
  const double reach = opt.link_factor * opt.h;
  for (int f = 0; f < c.face_count(); ++f) {
    const auto& ef = mesh.faces[f];
    const auto& ids = mesh.face_nodes[f];
    const auto& pos = mesh.face_positions[f];
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (ids[i] == ids[j]) continue;
        double w = ef.distance(pos[i], pos[j]);
        if (w > reach || !ef.arc_inside(pos[i], pos[j], 1e-9)) continue;
        links.push_back({std::min(ids[i], ids[j]), std::max(ids[i], ids[j]), w});
      }
    }
  }
  std::sort(links.begin(), links.end(), [](const Link& x, const Link& y) {
    return std::tie(x.a, x.b, x.w) < std::tie(y.a, y.b, y.w);
  });
  links.erase(std::unique(links.begin(), links.end(), [](const Link& x, const Link& y) { return x.a == y.a && x.b == y.b; }),
              links.end());

  const int N = mesh.node_count();
  std::vector<int> degree(N + 1, 0);
  for (const auto& l : links) {
    ++degree[l.a];
    ++degree[l.b];
  }
  mesh.adj_offset.assign(N + 1, 0);
  for (int v = 0; v < N; ++v) mesh.adj_offset[v + 1] = mesh.adj_offset[v] + degree[v];
  mesh.adj_target.resize(mesh.adj_offset[N]);
  mesh.adj_weight.resize(mesh.adj_offset[N]);
  std::vector<int> fill(mesh.adj_offset.begin(), mesh.adj_offset.end() - 1);
  for (const auto& l : links) {
    mesh.adj_target[fill[l.a]] = l.b;
    mesh.adj_weight[fill[l.a]++] = l.w;
    mesh.adj_target[fill[l.b]] = l.a;
    mesh.adj_weight[fill[l.b]++] = l.w;
  }
  return mesh;
}

/// Upper bound on the distance between two surface points. Both points are
/// joined by exact arcs to every node of their face; points sharing a face
/// are also joined directly.
inline DistanceEstimate approx_distance(const MeshGraph& mesh, const SurfacePoint& x, const SurfacePoint& y) {
  const auto& fx = mesh.faces.at(x.face);
  const auto& fy = mesh.faces.at(y.face);
  std::vector<std::pair<int, double>> seeds;
  const auto& xn = mesh.face_nodes[x.face];
  const auto& xp = mesh.face_positions[x.face];
  for (std::size_t i = 0; i < xn.size(); ++i) seeds.emplace_back(xn[i], fx.distance(x.position, xp[i]));
  auto dist = mesh.distances_from(seeds);

  double best = std::numeric_limits<double>::infinity();
  if (x.face == y.face) best = fx.distance(x.position, y.position);
  const auto& yn = mesh.face_nodes[y.face];
  const auto& yp = mesh.face_positions[y.face];
  for (std::size_t i = 0; i < yn.size(); ++i) best = std::min(best, dist[yn[i]] + fy.distance(y.position, yp[i]));
  if (!std::isfinite(best)) throw Error(ErrorKind::Disconnected, "no mesh path between the points");
  return {best, mesh.h};
}

inline DistanceEstimate approx_distance(const MeshGraph& mesh, int node_x, int node_y) {
  double d = mesh.distances_from(node_x)[node_y];
  if (!std::isfinite(d)) throw Error(ErrorKind::Disconnected, "no mesh path between the nodes");
  return {d, mesh.h};
}

/// Largest node-to-node mesh distance.
inline DiameterEstimate approx_diameter(const MeshGraph& mesh) {
  if (!mesh.closed) throw Error(ErrorKind::HasBoundary, "diameter estimates need a closed complex");
  DiameterEstimate best{0.0, mesh.h, 0, 0};
  for (int s = 0; s < mesh.node_count(); ++s) {
    auto dist = mesh.distances_from(s);
    for (int t = 0; t < mesh.node_count(); ++t) {
      if (!std::isfinite(dist[t])) throw Error(ErrorKind::Disconnected, "mesh is disconnected");
      if (dist[t] > best.value) best = {dist[t], mesh.h, s, t};
    }
  }
  return best;
}

struct AvoidancePair {
  int x = -1;
  int y = -1;
  double unconstrained = 0;
  double best_constrained = std::numeric_limits<double>::infinity();
  int worst_vertex = -1;  // vertex giving the smallest detour
  double min_detour() const { return best_constrained - unconstrained; }
};

struct AvoidanceReport {
  std::vector<AvoidancePair> pairs;
  double min_detour = std::numeric_limits<double>::infinity();
};

/// For each node pair, compares the best path forced through some vertex w
/// (other than the endpoints) with the best unconstrained path. The
/// r-spherical angle-sum must be below 2*pi at every interior vertex.
inline AvoidanceReport vertex_avoidance_probe(const MeshGraph& mesh, const PolygonalComplex& c,
                                              const std::vector<std::pair<int, int>>& node_pairs) {
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (c.vertex_is_boundary(v)) continue;
    double a = spherical_angle_sum(c.vertex_type(v), mesh.r);
    if (a >= 2.0 * std::numbers::pi)
      throw Error(ErrorKind::HypothesisViolated,
                  "vertex " + std::to_string(v) + " has r-spherical angle-sum " + std::to_string(a) + " >= 2 pi");
  }
  AvoidanceReport report;
  for (auto [x, y] : node_pairs) {
    auto dx = mesh.distances_from(x);
    auto dy = mesh.distances_from(y);
    AvoidancePair p;
    p.x = x;
    p.y = y;
    p.unconstrained = dx[y];
    if (!std::isfinite(p.unconstrained)) throw Error(ErrorKind::Disconnected, "pair is not connected");
    for (int v = 0; v < c.vertex_count(); ++v) {
      int w = mesh.vertex_node[v];
      if (w == x || w == y) continue;
      double through = dx[w] + dy[w];
      if (through < p.best_constrained) {
        p.best_constrained = through;
        p.worst_vertex = v;
      }
    }
    report.min_detour = std::min(report.min_detour, p.min_detour());
    report.pairs.push_back(p);
  }
  return report;
}

/// Seeded sample of distinct node pairs avoiding vertex nodes.
inline std::vector<std::pair<int, int>> sample_node_pairs(const MeshGraph& mesh, int count, std::uint64_t seed) {
  std::vector<int> pool;
  for (int i = 0; i < mesh.node_count(); ++i)
    if (mesh.nodes[i].kind != NodeKind::Vertex) pool.push_back(i);
  if (pool.size() < 2) throw Error(ErrorKind::BadParameters, "mesh has too few non-vertex nodes");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::pair<int, int>> out;
  while (static_cast<int>(out.size()) < count) {
    int a = pool[pick(rng)], b = pool[pick(rng)];
    if (a != b) out.emplace_back(a, b);
  }
  return out;
}

/// Nearest non-vertex node of `face` to `target` (in that face's chart).
inline int nearest_face_node(const MeshGraph& mesh, int face, const Vec3& target) {
  const auto& ids = mesh.face_nodes[face];
  const auto& pos = mesh.face_positions[face];
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (mesh.nodes[ids[i]].kind == NodeKind::Vertex) continue;
    double d = unit_angle(pos[i], target);
    if (d < best_d) {
      best_d = d;
      best = ids[i];
    }
  }
  return best;
}

/// Two nodes on the diagonals of two consecutive faces around `vertex`, each
/// at distance `delta` from it. The straight route between them bends around
/// the vertex.
inline std::pair<int, int> straddling_pair(const MeshGraph& mesh, const PolygonalComplex& c, int vertex,
                                           double delta) {
  const auto& corners = c.vertex_corners(vertex);
  if (corners.size() < 2) throw Error(ErrorKind::BadParameters, "vertex needs at least two corners");
  auto on_diagonal = [&](Dart corner) {
    const auto& ef = mesh.faces[c.face_of(corner)];
    const Vec3& w = ef.corners[c.side_of(corner)];
    double len = ef.distance(w, ef.center);
    return nearest_face_node(mesh, ef.face, slerp(w, ef.center, std::min(1.0, delta / len)));
  };
  return {on_diagonal(corners[0]), on_diagonal(corners[1])};
}

}  // namespace polysurf
