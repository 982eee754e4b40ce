#pragma once

// SVG drawings of complexes.
//
// Default layout is Tutte's barycentric embedding: the boundary cycle is
// pinned to a regular polygon on the unit circle and each interior vertex
// sits at the average of its neighbours. Only disks qualify, i.e. connected
// orientable complexes with euler number 1 and one simple boundary cycle.
// A closed complex is drawn with one face removed (its largest face, lowest
// index on ties), and that face becomes the outer region.

#include "polysurf/complex.hpp"
#include "polysurf/curvature.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace polysurf {

using Point2 = Eigen::Vector2d;

enum class LayoutKind { Tutte, Stored };

struct RenderOptions {
  LayoutKind layout = LayoutKind::Tutte;
  /// Per-vertex coordinates for LayoutKind::Stored, indexed like the
  /// vertices of the complex that is actually drawn.
  std::vector<Point2> stored_positions;
  bool stroke = true;
  bool fill = true;
  bool curvature_labels = false;
  bool vertex_dots = false;
  int size_px = 800;
};

struct Layout {
  PolygonalComplex drawn;              // the disk that was laid out
  std::optional<int> removed_face;     // face of the input dropped first
  std::vector<int> original_vertex;    // drawn vertex -> input vertex
  std::vector<int> boundary_cycle;     // drawn vertex ids in order
  std::vector<Point2> positions;       // per drawn vertex
};

namespace detail {

inline PolygonalComplex drop_face(const PolygonalComplex& c, int face) {
  GluingData g = c.gluing_data();
  const FaceId id = c.face_id(face);
  GluingData out;
  for (const auto& f : g.faces)
    if (f.id != id) out.faces.push_back(f);
  for (const auto& gl : g.gluings)
    if (gl.a.face != id && gl.b.face != id) out.gluings.push_back(gl);
  return build_complex(out);
}

inline std::vector<int> boundary_cycle(const PolygonalComplex& c) {
  // undirected graph of boundary edges; a disk makes it one simple cycle
  std::vector<std::vector<int>> nb(c.vertex_count());
  int count = 0;
  for (Dart d = 0; d < c.dart_count(); ++d) {
    if (!c.is_boundary_dart(d)) continue;
    int u = c.vertex_of(d), v = c.vertex_of(c.phi(d));
    if (u == v) throw Error(ErrorKind::NotPlanar, "boundary edge is a loop");
    nb[u].push_back(v);
    nb[v].push_back(u);
    ++count;
  }
  std::vector<int> cycle;
  int start = -1;
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (nb[v].empty()) continue;
    if (nb[v].size() != 2) throw Error(ErrorKind::NotPlanar, "boundary is not a simple cycle");
    if (start < 0) start = v;
  }
  if (start < 0) throw Error(ErrorKind::NotPlanar, "no boundary");
  int prev = -1, at = start;
  do {
    cycle.push_back(at);
    int next = nb[at][0] == prev ? nb[at][1] : nb[at][0];
    prev = at;
    at = next;
    if (static_cast<int>(cycle.size()) > count) throw Error(ErrorKind::NotPlanar, "boundary walk did not close");
  } while (at != start);
  if (static_cast<int>(cycle.size()) != count)
    throw Error(ErrorKind::NotPlanar, "boundary has more than one component");
  return cycle;
}

inline double polygon_area(const std::vector<Point2>& p) {
  double a = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& u = p[i];
    const auto& v = p[(i + 1) % p.size()];
    a += u.x() * v.y() - v.x() * u.y();
  }
  return 0.5 * a;
}

inline std::vector<Point2> tutte_positions(const PolygonalComplex& c, const std::vector<int>& cycle) {
  const int V = c.vertex_count();
  std::vector<Point2> pos(V, Point2::Zero());
  std::vector<int> slot(V, -1);  // interior unknown index, -1 if pinned
  std::vector<char> pinned(V, 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(cycle.size());
    pos[cycle[i]] = {std::cos(t), std::sin(t)};
    pinned[cycle[i]] = 1;
  }
  int unknowns = 0;
  for (int v = 0; v < V; ++v)
    if (!pinned[v]) slot[v] = unknowns++;

  std::set<std::pair<int, int>> links;
  for (int e = 0; e < c.edge_count(); ++e) {
    Dart d = c.edge_darts(e).first;
    int u = c.vertex_of(d), v = c.vertex_of(c.phi(d));
    if (u == v) throw Error(ErrorKind::NotPlanar, "edge " + std::to_string(e) + " is a loop");
    links.emplace(std::min(u, v), std::max(u, v));
  }
  if (unknowns == 0) return pos;

  std::vector<Eigen::Triplet<double>> trip;
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(unknowns, 2);
  std::vector<double> diag(unknowns, 0.0);
  for (auto [u, v] : links) {
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      if (slot[a] < 0) continue;
      diag[slot[a]] += 1.0;
      if (slot[b] >= 0)
        trip.emplace_back(slot[a], slot[b], -1.0);
      else
        rhs.row(slot[a]) += pos[b].transpose();
    }
  }
  for (int i = 0; i < unknowns; ++i) trip.emplace_back(i, i, diag[i]);
  Eigen::SparseMatrix<double> L(unknowns, unknowns);
  L.setFromTriplets(trip.begin(), trip.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(L);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::LayoutDegenerate, "Laplacian factorization failed");
  Eigen::MatrixXd x = solver.solve(rhs);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::LayoutDegenerate, "Laplacian solve failed");
  for (int v = 0; v < V; ++v)
    if (slot[v] >= 0) pos[v] = x.row(slot[v]).transpose();
  return pos;
}

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

inline const char* face_colour(int n) {
  static const char* palette[] = {"#f4d35e", "#83c5be", "#ee964b", "#b8b8ff", "#90be6d", "#f28482", "#a3c4f3"};
  return palette[(n - 3) % 7];
}

}  // namespace detail

inline std::vector<Point2> face_polygon(const Layout& L, int face) {
  std::vector<Point2> p;
  for (int s = 0; s < L.drawn.sides(face); ++s) p.push_back(L.positions[L.drawn.vertex_of(L.drawn.dart(face, s))]);
  return p;
}

inline Layout compute_layout(const PolygonalComplex& input, const RenderOptions& opt = {}) {
  if (input.face_count() == 0) throw Error(ErrorKind::NotPlanar, "complex has no faces");
  std::optional<int> removed;
  if (input.closed()) {
    int best = 0;
    for (int f = 1; f < input.face_count(); ++f)
      if (input.sides(f) > input.sides(best)) best = f;
    removed = best;
    if (input.face_count() == 1) throw Error(ErrorKind::NotPlanar, "a single closed face leaves nothing to draw");
  }
  Layout L{removed ? detail::drop_face(input, *removed) : input, removed, {}, {}, {}};
  const auto& c = L.drawn;

  if (component_count(c) != 1) throw Error(ErrorKind::NotPlanar, "complex is not connected");
  if (!is_orientable(c)) throw Error(ErrorKind::NotPlanar, "complex is not orientable");
  if (c.euler_number() != 1)
    throw Error(ErrorKind::NotPlanar, "not a disk: euler number " + std::to_string(c.euler_number()));
  L.boundary_cycle = detail::boundary_cycle(c);

  // drawn faces keep their order, shifted past the removed one
  L.original_vertex.resize(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) {
    Dart d = c.vertex_corners(v).front();
    int f = c.face_of(d);
    int orig_f = removed && f >= *removed ? f + 1 : f;
    L.original_vertex[v] = input.vertex_of(input.dart(orig_f, c.side_of(d)));
  }

  if (opt.layout == LayoutKind::Stored) {
    if (static_cast<int>(opt.stored_positions.size()) != c.vertex_count())
      throw Error(ErrorKind::BadParameters, "stored layout has " + std::to_string(opt.stored_positions.size()) +
                                                " positions for " + std::to_string(c.vertex_count()) + " vertices");
    L.positions = opt.stored_positions;
  } else {
    L.positions = detail::tutte_positions(c, L.boundary_cycle);
  }

  for (int f = 0; f < c.face_count(); ++f)
    if (std::abs(detail::polygon_area(face_polygon(L, f))) < 1e-12)
      throw Error(ErrorKind::LayoutDegenerate, "face " + std::to_string(c.face_id(f)) + " has zero area in the layout");
  return L;
}

inline std::string render_svg(const PolygonalComplex& input, const Layout& L, const RenderOptions& opt = {}) {
  const auto& c = L.drawn;
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const auto& p : L.positions) {
    lo_x = std::min(lo_x, p.x());
    lo_y = std::min(lo_y, p.y());
    hi_x = std::max(hi_x, p.x());
    hi_y = std::max(hi_y, p.y());
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double margin = 0.05 * opt.size_px;
  const double scale = (opt.size_px - 2 * margin) / span;
  auto X = [&](const Point2& p) { return detail::fmt(margin + (p.x() - lo_x) * scale); };
  // flip y so counterclockwise stays counterclockwise on screen
  auto Y = [&](const Point2& p) { return detail::fmt(opt.size_px - margin - (p.y() - lo_y) * scale); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size_px << "\" height=\"" << opt.size_px
      << "\" viewBox=\"0 0 " << opt.size_px << ' ' << opt.size_px << "\">\n";
  out << "<g id=\"faces\" stroke=\"" << (opt.stroke ? "#222222" : "none") << "\" stroke-width=\"1\">\n";
  for (int f = 0; f < c.face_count(); ++f) {
    out << "<polygon data-face=\"" << c.face_id(f) << "\" data-sides=\"" << c.sides(f) << "\" fill=\""
        << (opt.fill ? detail::face_colour(c.sides(f)) : "none") << "\" points=\"";
    auto poly = face_polygon(L, f);
    for (std::size_t i = 0; i < poly.size(); ++i) out << (i ? " " : "") << X(poly[i]) << ',' << Y(poly[i]);
    out << "\"/>\n";
  }
  out << "</g>\n";
  if (opt.vertex_dots || opt.curvature_labels) {
    out << "<g id=\"vertices\" font-family=\"monospace\" font-size=\"10\">\n";
    for (int v = 0; v < c.vertex_count(); ++v) {
      const auto& p = L.positions[v];
      if (opt.vertex_dots) out << "<circle cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"2\" fill=\"#000000\"/>\n";
      int ov = L.original_vertex[v];
      if (opt.curvature_labels && !input.vertex_is_boundary(ov))
        out << "<text x=\"" << X(p) << "\" y=\"" << Y(p) << "\" dx=\"3\" dy=\"-3\">"
            << to_string(curvature(input.vertex_type(ov))) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

inline std::string render_svg(const PolygonalComplex& input, const RenderOptions& opt = {}) {
  return render_svg(input, compute_layout(input, opt), opt);
}

}  // namespace polysurf
