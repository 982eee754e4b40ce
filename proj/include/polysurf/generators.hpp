#pragma once

// Builders for the standard complexes: Platonic solids, prisms, antiprisms,
// double n-gons, flat tori, the genus-2 octagon and finite balls of the
// regular {p,q} tilings.

#include "polysurf/cover.hpp"
#include "polysurf/curvature.hpp"
#include "polysurf/gauss_bonnet.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace polysurf {

/// Gluing data from faces given as counterclockwise vertex cycles. Each
/// directed edge must occur once; it is glued (reversing) to its opposite if
/// that occurs, otherwise left as boundary.
inline GluingData from_face_cycles(const std::vector<std::vector<int>>& cycles) {
  GluingData data;
  std::map<std::pair<int, int>, Slot> directed;
  for (std::size_t f = 0; f < cycles.size(); ++f) {
    const auto& cyc = cycles[f];
    data.faces.push_back({static_cast<FaceId>(f), static_cast<int>(cyc.size())});
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::pair<int, int> key{cyc[i], cyc[(i + 1) % cyc.size()]};
      if (!directed.emplace(key, Slot{static_cast<FaceId>(f), static_cast<int>(i)}).second)
        throw Error(ErrorKind::BadParameters, "directed edge " + std::to_string(key.first) + "->" +
                                                  std::to_string(key.second) + " used twice");
    }
  }
  for (const auto& [key, slot] : directed) {
    if (key.first > key.second) continue;
    auto it = directed.find({key.second, key.first});
    if (it != directed.end()) data.gluings.push_back({slot, it->second, true});
  }
  return data;
}

namespace tables {

inline const std::vector<std::vector<int>>& tetrahedron() {
  static const std::vector<std::vector<int>> t{{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
  return t;
}

// corners 0..7 = (x,y,z) bits 000,100,110,010,001,101,111,011
inline const std::vector<std::vector<int>>& cube() {
  static const std::vector<std::vector<int>> t{{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                               {2, 3, 7, 6}, {0, 4, 7, 3}, {1, 2, 6, 5}};
  return t;
}

// corners +x,-x,+y,-y,+z,-z
inline const std::vector<std::vector<int>>& octahedron() {
  static const std::vector<std::vector<int>> t{{0, 2, 4}, {0, 4, 3}, {0, 5, 2}, {0, 3, 5},
                                               {1, 4, 2}, {1, 3, 4}, {1, 2, 5}, {1, 5, 3}};
  return t;
}

inline const std::vector<std::vector<int>>& icosahedron() {
  static const std::vector<std::vector<int>> t{
      {0, 1, 2},  {6, 2, 4},  {6, 5, 0},  {6, 0, 2},  {7, 3, 1},  {7, 0, 5},  {7, 1, 0},
      {8, 4, 2},  {8, 2, 1},  {8, 1, 3},  {8, 3, 9},  {8, 9, 4},  {10, 4, 9}, {10, 6, 4},
      {10, 5, 6}, {11, 7, 5}, {11, 9, 3}, {11, 3, 7}, {11, 10, 9}, {11, 5, 10}};
  return t;
}

// dual of the icosahedron table: corner j is icosahedron face j
inline const std::vector<std::vector<int>>& dodecahedron() {
  static const std::vector<std::vector<int>> t{
      {5, 6, 0, 3, 2},      {4, 9, 8, 0, 6},     {8, 7, 1, 3, 0},      {17, 16, 10, 9, 4},
      {11, 12, 13, 1, 7},   {19, 15, 5, 2, 14},  {13, 14, 2, 3, 1},    {15, 17, 4, 6, 5},
      {9, 10, 11, 7, 8},    {10, 16, 18, 12, 11}, {12, 18, 19, 14, 13}, {18, 16, 17, 15, 19}};
  return t;
}

}  // namespace tables

enum class Family {
  Platonic,
  Prism,
  Antiprism,
  DoubleNgon,
  PqBall,
  SquareTorus,
  HexagonalTorus,
  Genus2Octagon,
};

struct GeneratorSpec {
  Family family = Family::Platonic;
  std::string name;  // Platonic solid name
  int n = 0;         // prism / antiprism / double n-gon
  int p = 0, q = 0, radius = 0;
  bool complete_rim = false;  // pq ball: also close the links of rim vertices

  static GeneratorSpec platonic(std::string solid) {
    GeneratorSpec s;
    s.family = Family::Platonic;
    s.name = std::move(solid);
    return s;
  }
  static GeneratorSpec prism(int n) { return with_n(Family::Prism, n); }
  static GeneratorSpec antiprism(int n) { return with_n(Family::Antiprism, n); }
  static GeneratorSpec double_ngon(int n) { return with_n(Family::DoubleNgon, n); }
  static GeneratorSpec pq_ball(int p, int q, int radius, bool complete_rim = false) {
    GeneratorSpec s;
    s.family = Family::PqBall;
    s.p = p;
    s.q = q;
    s.radius = radius;
    s.complete_rim = complete_rim;
    return s;
  }
  static GeneratorSpec square_torus() { return of(Family::SquareTorus); }
  static GeneratorSpec hexagonal_torus() { return of(Family::HexagonalTorus); }
  static GeneratorSpec genus2_octagon() { return of(Family::Genus2Octagon); }

 private:
  static GeneratorSpec of(Family f) {
    GeneratorSpec s;
    s.family = f;
    return s;
  }
  static GeneratorSpec with_n(Family f, int n) {
    GeneratorSpec s = of(f);
    s.n = n;
    return s;
  }
};

inline const std::vector<std::string>& platonic_names() {
  static const std::vector<std::string> names{"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"};
  return names;
}

inline GluingData square_torus_data() { return {{{0, 4}}, {{{0, 0}, {0, 2}, true}, {{0, 1}, {0, 3}, true}}}; }

inline GluingData hexagonal_torus_data() {
  return {{{0, 6}}, {{{0, 0}, {0, 3}, true}, {{0, 1}, {0, 4}, true}, {{0, 2}, {0, 5}, true}}};
}

/// Octagon with boundary word a b a^-1 b^-1 c d c^-1 d^-1.
inline GluingData genus2_octagon_data() {
  return {{{0, 8}},
          {{{0, 0}, {0, 2}, true}, {{0, 1}, {0, 3}, true}, {{0, 4}, {0, 6}, true}, {{0, 5}, {0, 7}, true}}};
}

/// Finite ball of the {p,q} tiling, grown by the cover developer to dual
/// depth `radius` around one seed p-gon.
inline PolygonalComplex pq_ball(int p, int q, int radius, bool complete_rim = false) {
  if (p < 3 || q < 3 || radius < 0) throw Error(ErrorKind::BadParameters, "pq_ball needs p, q >= 3 and radius >= 0");
  Developer<RegularTilingRules> dev{RegularTilingRules(p, q)};
  dev.grow(CoverLimit::generations(radius));
  if (complete_rim) dev.complete_rim();
  return build_complex(dev.gluing_data());
}

inline GluingData generate_data(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::Platonic:
      if (spec.name == "tetrahedron") return from_face_cycles(tables::tetrahedron());
      if (spec.name == "cube") return from_face_cycles(tables::cube());
      if (spec.name == "octahedron") return from_face_cycles(tables::octahedron());
      if (spec.name == "dodecahedron") return from_face_cycles(tables::dodecahedron());
      if (spec.name == "icosahedron") return from_face_cycles(tables::icosahedron());
      throw Error(ErrorKind::UnknownFamily, "unknown Platonic solid '" + spec.name + "'");
    case Family::Prism: {
      const int n = spec.n;
      if (n < 3) throw Error(ErrorKind::BadParameters, "prism needs n >= 3");
      std::vector<std::vector<int>> cyc;
      std::vector<int> bottom, top;
      for (int i = n - 1; i >= 0; --i) bottom.push_back(i);
      for (int i = 0; i < n; ++i) top.push_back(n + i);
      cyc.push_back(bottom);
      cyc.push_back(top);
      for (int i = 0; i < n; ++i) cyc.push_back({i, (i + 1) % n, n + (i + 1) % n, n + i});
      return from_face_cycles(cyc);
    }
    case Family::Antiprism: {
      const int n = spec.n;
      if (n < 3) throw Error(ErrorKind::BadParameters, "antiprism needs n >= 3");
      std::vector<std::vector<int>> cyc;
      std::vector<int> bottom, top;
      for (int i = n - 1; i >= 0; --i) bottom.push_back(i);
      for (int i = 0; i < n; ++i) top.push_back(n + i);
      cyc.push_back(bottom);
      cyc.push_back(top);
      for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        cyc.push_back({i, j, n + i});
        cyc.push_back({j, n + j, n + i});
      }
      return from_face_cycles(cyc);
    }
    case Family::DoubleNgon: {
      const int n = spec.n;
      if (n < 3) throw Error(ErrorKind::BadParameters, "double n-gon needs n >= 3");
      std::vector<int> front, back;
      for (int i = 0; i < n; ++i) front.push_back(i);
      for (int i = n - 1; i >= 0; --i) back.push_back(i);
      return from_face_cycles({front, back});
    }
    case Family::PqBall:
      return pq_ball(spec.p, spec.q, spec.radius, spec.complete_rim).gluing_data();
    case Family::SquareTorus:
      return square_torus_data();
    case Family::HexagonalTorus:
      return hexagonal_torus_data();
    case Family::Genus2Octagon:
      return genus2_octagon_data();
  }
  throw Error(ErrorKind::UnknownFamily, "unknown generator family");
}

inline PolygonalComplex generate(const GeneratorSpec& spec) { return build_complex(generate_data(spec)); }

struct GeneratorCheck {
  bool ok = true;
  std::vector<std::string> failures;

  void expect(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      failures.push_back(std::move(what));
    }
  }
};

namespace detail {
struct Expected {
  int V, E, F;
  std::vector<VertexType> types;  // allowed interior types
  bool edge_to_edge;
};

inline Expected expected_for(const GeneratorSpec& spec) {
  auto uniform = [](int k, int d) { return VertexType(std::vector<int>(d, k)); };
  switch (spec.family) {
    case Family::Platonic:
      if (spec.name == "tetrahedron") return {4, 6, 4, {uniform(3, 3)}, true};
      if (spec.name == "cube") return {8, 12, 6, {uniform(4, 3)}, true};
      if (spec.name == "octahedron") return {6, 12, 8, {uniform(3, 4)}, true};
      if (spec.name == "dodecahedron") return {20, 30, 12, {uniform(5, 3)}, true};
      if (spec.name == "icosahedron") return {12, 30, 20, {uniform(3, 5)}, true};
      throw Error(ErrorKind::UnknownFamily, spec.name);
    case Family::Prism:
      return {2 * spec.n, 3 * spec.n, spec.n + 2, {VertexType{spec.n, 4, 4}}, true};
    case Family::Antiprism:
      return {2 * spec.n, 4 * spec.n, 2 * spec.n + 2, {VertexType{spec.n, 3, 3, 3}}, true};
    case Family::DoubleNgon:
      return {spec.n, spec.n, 2, {uniform(spec.n, 2)}, false};
    case Family::SquareTorus:
      return {1, 2, 1, {uniform(4, 4)}, false};
    case Family::HexagonalTorus:
      return {2, 3, 1, {uniform(6, 3)}, false};
    case Family::Genus2Octagon:
      return {1, 4, 1, {uniform(8, 8)}, false};
    case Family::PqBall:
      break;
  }
  return {};
}
}  // namespace detail

/// Family-specific postconditions: counts, vertex-types, Euler
/// characteristic, edge-to-edge flag.
inline GeneratorCheck verify_generator(const GeneratorSpec& spec, const PolygonalComplex& c) {
  GeneratorCheck check;
  if (spec.family == Family::PqBall) {
    const VertexType want(std::vector<int>(spec.q, spec.p));
    check.expect(c.face_count() >= 1, "ball has faces");
    for (int f = 0; f < c.face_count(); ++f) check.expect(c.sides(f) == spec.p, "face sizes are p");
    for (int v = 0; v < c.vertex_count(); ++v)
      if (!c.vertex_is_boundary(v)) check.expect(c.vertex_type(v) == want, "interior vertex-type is [p x q]");
    check.expect(is_orientable(c), "ball is orientable");
    check.expect(c.euler_number() == 1, "ball is a disc (V - E + F = 1)");
    return check;
  }
  auto exp = detail::expected_for(spec);
  check.expect(c.closed(), "complex is closed");
  check.expect(c.vertex_count() == exp.V, "V = " + std::to_string(exp.V) + ", got " + std::to_string(c.vertex_count()));
  check.expect(c.edge_count() == exp.E, "E = " + std::to_string(exp.E) + ", got " + std::to_string(c.edge_count()));
  check.expect(c.face_count() == exp.F, "F = " + std::to_string(exp.F) + ", got " + std::to_string(c.face_count()));
  for (int v = 0; v < c.vertex_count(); ++v) {
    auto t = c.vertex_type(v);
    bool allowed = std::find(exp.types.begin(), exp.types.end(), t) != exp.types.end();
    check.expect(allowed, "unexpected vertex-type " + t.to_string());
  }
  check.expect(is_orientable(c), "complex is orientable");
  check.expect(is_edge_to_edge(c).edge_to_edge == exp.edge_to_edge, "edge-to-edge flag");
  if (c.closed()) {
    auto gb = check_gauss_bonnet(c);
    check.expect(gb.consistent, "Euler characteristic equals curvature sum");
    check.expect(gb.chi_euler == exp.V - exp.E + exp.F, "Euler characteristic");
  }
  return check;
}

/// Text form used on the command line:
///   tetrahedron | cube | octahedron | dodecahedron | icosahedron
///   prism:N | antiprism:N | double-ngon:N
///   pq:P,Q,R  (append "+rim" to close the rim vertex links)
///   square-torus | hexagonal-torus | genus2-octagon
inline GeneratorSpec parse_generator_spec(std::string_view text) {
  std::string s(text);
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : s.substr(colon + 1);
  auto ints = [&](std::size_t want) {
    std::vector<int> out;
    std::size_t at = 0;
    while (at < args.size()) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(args.substr(at), &used);
      } catch (const std::exception&) {
        throw Error(ErrorKind::BadParameters, "bad number in '" + s + "'");
      }
      out.push_back(v);
      at += used;
      if (at < args.size() && args[at] == ',') ++at;
      else if (at < args.size()) break;
    }
    if (out.size() != want)
      throw Error(ErrorKind::BadParameters, "'" + head + "' takes " + std::to_string(want) + " integer argument(s)");
    return out;
  };
  for (const auto& n : platonic_names())
    if (s == n) return GeneratorSpec::platonic(n);
  if (s == "square-torus") return GeneratorSpec::square_torus();
  if (s == "hexagonal-torus") return GeneratorSpec::hexagonal_torus();
  if (s == "genus2-octagon") return GeneratorSpec::genus2_octagon();
  if (head == "prism") return GeneratorSpec::prism(ints(1)[0]);
  if (head == "antiprism") return GeneratorSpec::antiprism(ints(1)[0]);
  if (head == "double-ngon") return GeneratorSpec::double_ngon(ints(1)[0]);
  if (head == "pq") {
    bool rim = false;
    if (args.size() >= 4 && args.substr(args.size() - 4) == "+rim") {
      rim = true;
      args.resize(args.size() - 4);
    }
    auto v = ints(3);
    return GeneratorSpec::pq_ball(v[0], v[1], v[2], rim);
  }
  throw Error(ErrorKind::UnknownFamily, "unknown generator '" + s + "'");
}

inline std::string to_string(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::Platonic: return spec.name;
    case Family::Prism: return "prism:" + std::to_string(spec.n);
    case Family::Antiprism: return "antiprism:" + std::to_string(spec.n);
    case Family::DoubleNgon: return "double-ngon:" + std::to_string(spec.n);
    case Family::PqBall:
      return "pq:" + std::to_string(spec.p) + "," + std::to_string(spec.q) + "," + std::to_string(spec.radius) +
             (spec.complete_rim ? "+rim" : "");
    case Family::SquareTorus: return "square-torus";
    case Family::HexagonalTorus: return "hexagonal-torus";
    case Family::Genus2Octagon: return "genus2-octagon";
  }
  return "?";
}

/// Every closed built-in complex: Platonic solids, prisms, antiprisms and
/// double n-gons for n = 3..8, both tori and the genus-2 octagon.
inline std::vector<GeneratorSpec> closed_fixture_specs() {
  std::vector<GeneratorSpec> out;
  for (const auto& n : platonic_names()) out.push_back(GeneratorSpec::platonic(n));
  for (int n = 3; n <= 8; ++n) {
    out.push_back(GeneratorSpec::prism(n));
    out.push_back(GeneratorSpec::antiprism(n));
    out.push_back(GeneratorSpec::double_ngon(n));
  }
  out.push_back(GeneratorSpec::square_torus());
  out.push_back(GeneratorSpec::hexagonal_torus());
  out.push_back(GeneratorSpec::genus2_octagon());
  return out;
}

}  // namespace polysurf
