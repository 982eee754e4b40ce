// polysurf command line tool.
//
// Exit codes: 0 success, 2 invalid input or failed precondition,
// 3 numerical non-convergence, 1 anything else (I/O, internal errors).

#include "polysurf/polysurf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace polysurf;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string format = "human";
  std::uint64_t seed = 1;
  bool machine() const { return format == "machine"; }
};

struct Input {
  std::string file;
  std::string gen;
};

void add_input(CLI::App* sub, Input& in) {
  sub->add_option("file", in.file, "psc-1 file");
  sub->add_option("--gen", in.gen, "built-in complex, e.g. cube, prism:5, pq:7,3,2, square-torus");
}

PolygonalComplex load(const Input& in) {
  if (!in.gen.empty() && !in.file.empty()) throw Error(ErrorKind::BadParameters, "give a file or --gen, not both");
  if (!in.gen.empty()) return generate(parse_generator_spec(in.gen));
  if (in.file.empty()) throw Error(ErrorKind::BadParameters, "no input: give a psc-1 file or --gen");
  return build_complex(load_psc(in.file));
}

std::string num(double x, int digits = 12) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

json rational_json(const Rational& q) { return to_string(q); }

void emit(const Globals& g, const json& j, const std::string& human) {
  if (g.machine())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human;
}

std::vector<VertexType> parse_types(const std::vector<std::string>& texts) {
  std::vector<VertexType> out;
  for (const auto& t : texts) out.push_back(parse_vertex_type(t));
  return out;
}

std::vector<VertexType> distinct_interior_types(const PolygonalComplex& c) {
  std::set<VertexType> s;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (!c.vertex_is_boundary(v)) s.insert(c.vertex_type(v));
  return {s.begin(), s.end()};
}

// --- validate / report -----------------------------------------------------

int cmd_validate(const Globals& g, const Input& in) {
  auto c = load(in);
  auto e2e = is_edge_to_edge(c);
  json j{{"valid", true},
         {"faces", c.face_count()},
         {"edges", c.edge_count()},
         {"vertices", c.vertex_count()},
         {"closed", c.closed()},
         {"orientable", is_orientable(c)},
         {"components", component_count(c)},
         {"edge_to_edge", e2e.edge_to_edge}};
  std::ostringstream h;
  h << "valid: " << c.face_count() << " faces, " << c.edge_count() << " edges, " << c.vertex_count()
    << " vertices\n";
  h << "closed: " << (c.closed() ? "yes" : "no") << ", orientable: " << (is_orientable(c) ? "yes" : "no")
    << ", edge-to-edge: " << (e2e.edge_to_edge ? "yes" : "no") << "\n";
  if (!e2e.edge_to_edge) h << "  " << e2e.witness << "\n";
  emit(g, j, h.str());
  return 0;
}

int cmd_report(const Globals& g, const Input& in) {
  auto c = load(in);
  json j;
  j["faces"] = c.face_count();
  j["edges"] = c.edge_count();
  j["vertices"] = c.vertex_count();
  j["euler_number"] = c.euler_number();
  j["closed"] = c.closed();
  j["orientable"] = is_orientable(c);
  j["edge_to_edge"] = is_edge_to_edge(c).edge_to_edge;
  std::map<int, int> sizes;
  for (int f = 0; f < c.face_count(); ++f) ++sizes[c.sides(f)];
  json hist = json::object();
  for (auto [n, k] : sizes) hist[std::to_string(n)] = k;
  j["face_sizes"] = hist;
  json verts = json::array();
  std::ostringstream h;
  h << "faces " << c.face_count() << "  edges " << c.edge_count() << "  vertices " << c.vertex_count()
    << "  V-E+F " << c.euler_number() << (c.closed() ? "  (closed)" : "  (with boundary)") << "\n";
  h << std::left << std::setw(8) << "vertex" << std::setw(20) << "type" << std::setw(12) << "curvature"
    << "boundary\n";
  for (const auto& r : vertex_records(c)) {
    json v{{"id", r.vertex_id}, {"type", r.vertex_type.to_string()}, {"boundary", r.is_boundary}};
    std::string kappa = "-";
    if (!r.is_boundary) {
      kappa = to_string(curvature(r.vertex_type));
      v["curvature"] = kappa;
    }
    verts.push_back(v);
    h << std::setw(8) << r.vertex_id << std::setw(20) << r.vertex_type.to_string() << std::setw(12) << kappa
      << (r.is_boundary ? "yes" : "no") << "\n";
  }
  j["vertex_records"] = verts;
  emit(g, j, h.str());
  return 0;
}

// --- classify / euler / catalog ------------------------------------------

struct ClassifyArgs {
  Input in;
  std::vector<std::string> types;
  std::optional<int> side_bound;
  std::optional<int> min_sides;
  int min_degree = 3;
};

int cmd_classify(const Globals& g, const ClassifyArgs& a) {
  if (a.min_sides) {
    auto r = exclusion_check(*a.min_sides, a.min_degree);
    json ex = json::array();
    std::string names;
    for (auto s : r.excluded) {
      ex.push_back(to_string(s));
      names += (names.empty() ? "" : ", ") + to_string(s);
    }
    json j{{"min_sides", *a.min_sides},
           {"min_degree", a.min_degree},
           {"excluded", ex},
           {"extremal", r.extremal.to_string()},
           {"extremal_curvature", rational_json(r.extremal_curvature)},
           {"justification", r.justification}};
    emit(g, j, "excluded: {" + names + "}\n" + r.justification + "\n");
    return 0;
  }
  CurvatureProfile p = a.types.empty() ? profile_from_complex(load(a.in))
                                       : profile_from_types(parse_types(a.types), a.side_bound);
  auto v = classify(p);
  json j{{"type", to_string(v.type)}, {"signs", to_string(p.signs())}, {"min_curvature", rational_json(*p.min_curvature())},
         {"justification", v.justification}};
  emit(g, j, to_string(v.type) + "\n" + v.justification + "\n");
  return 0;
}

int cmd_euler(const Globals& g, const Input& in) {
  auto c = load(in);
  auto r = check_gauss_bonnet(c);
  json j{{"vertices", r.vertices},       {"edges", r.edges},
         {"faces", r.faces},             {"chi", r.chi_euler},
         {"curvature_sum", rational_json(r.curvature_sum)}, {"consistent", r.consistent}};
  std::ostringstream h;
  h << "V-E+F = " << r.vertices << " - " << r.edges << " + " << r.faces << " = " << r.chi_euler << "\n";
  h << "sum of curvatures = " << to_string(r.curvature_sum) << "\n";
  h << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
  auto p = profile_from_complex(c);
  if (p.signs() == SignSummary::AllPositive) {
    Rational c0 = *p.min_curvature();
    Rational bound = vertex_bound(c0);
    bool holds = Rational(r.vertices) <= bound;
    j["min_curvature"] = rational_json(c0);
    j["vertex_bound"] = rational_json(bound);
    j["vertex_bound_holds"] = holds;
    h << "vertex bound 2/c0 = " << to_string(bound) << " (" << (holds ? "holds" : "VIOLATED") << ")\n";
  }
  emit(g, j, h.str());
  return r.consistent ? 0 : 1;
}

struct CatalogArgs {
  int sides = 3;
  std::string sign = "positive";
  int degree_min = 3;
  std::optional<int> degree_max;
};

int cmd_catalog(const Globals& g, const CatalogArgs& a) {
  CatalogQuery q;
  q.side_bound = a.sides;
  q.degree_min = a.degree_min;
  q.degree_max = a.degree_max;
  q.sign = a.sign == "positive" ? CurvatureSign::Positive
           : a.sign == "zero"   ? CurvatureSign::Zero
                                : CurvatureSign::Negative;
  auto types = enumerate_vertex_types(q);
  json list = json::array();
  std::ostringstream h;
  for (const auto& t : types) {
    list.push_back({{"type", t.to_string()}, {"curvature", rational_json(curvature(t))}});
    h << std::left << std::setw(28) << t.to_string() << to_string(curvature(t)) << "\n";
  }
  json j{{"side_bound", a.sides}, {"sign", a.sign}, {"count", types.size()}, {"types", list}};
  h << types.size() << " vertex-types\n";
  if (!types.empty()) {
    auto [vt, k] = extremal_curvature(q);
    j["extremal"] = {{"type", vt.to_string()}, {"curvature", rational_json(k)}};
    h << "extremal: " << vt.to_string() << " with curvature " << to_string(k) << "\n";
  }
  emit(g, j, h.str());
  return 0;
}

// --- cover ------------------------------------------------------------------

struct CoverArgs {
  Input in;
  std::optional<int> faces;
  std::optional<int> generations;
  std::string out;
  std::string projection;
};

int cmd_cover(const Globals& g, const CoverArgs& a) {
  auto base = load(a.in);
  CoverLimit lim{a.faces, a.generations};
  auto ball = develop_universal_cover(base, lim);
  auto check = verify_covering(ball, base);
  auto per = ball.faces_per_generation();
  json j{{"faces", ball.cover_complex.face_count()},
         {"halted_by", to_string(ball.halted_by)},
         {"faces_per_generation", per},
         {"covering_ok", check.ok}};
  if (!a.out.empty()) save_psc(a.out, ball.cover_complex.gluing_data());
  if (!a.projection.empty()) {
    json rows = json::array();
    for (int f = 0; f < ball.cover_complex.face_count(); ++f) {
      Dart bd = ball.projection[ball.cover_complex.dart(f, 0)];
      rows.push_back({{"cover_face", ball.cover_complex.face_id(f)},
                      {"base_face", base.face_id(base.face_of(bd))},
                      {"generation", ball.generation[f]}});
    }
    std::ofstream(a.projection) << json{{"projection", rows}}.dump(2) << "\n";
  }
  std::ostringstream h;
  h << ball.cover_complex.face_count() << " faces, halted by " << to_string(ball.halted_by) << "\n";
  h << "faces per generation:";
  for (int k : per) h << ' ' << k;
  h << "\ncovering map check: " << (check.ok ? "ok" : "FAILED") << "\n";
  for (const auto& v : check.violations) h << "  " << v << "\n";
  emit(g, j, h.str());
  return check.ok ? 0 : 1;
}

// --- spherical geometry ---------------------------------------------------

struct SphericalArgs {
  double r = 1;
  std::optional<int> n;
  std::vector<std::string> types;
};

int cmd_spherical(const Globals& g, const SphericalArgs& a) {
  if (!a.n && a.types.empty()) throw Error(ErrorKind::BadParameters, "give --n and/or --type");
  json j{{"r", a.r}};
  std::ostringstream h;
  if (a.n) {
    auto p = polygon_spec(a.r, *a.n);
    j["polygon"] = {{"n", p.n},
                    {"phi", p.phi},
                    {"interior_angle", p.interior_angle},
                    {"circumradius", p.circumradius},
                    {"area", p.area}};
    h << "unit regular " << p.n << "-gon on the sphere of radius " << num(a.r) << "\n"
      << "  base angle phi   " << num(p.phi) << "\n"
      << "  interior angle   " << num(p.interior_angle) << "\n"
      << "  circumradius     " << num(p.circumradius) << "\n"
      << "  area             " << num(p.area) << "\n";
  }
  json sums = json::array();
  for (const auto& t : parse_types(a.types)) {
    double s = spherical_angle_sum(t, a.r);
    sums.push_back({{"type", t.to_string()}, {"angle_sum", s}, {"below_2pi", s < 2 * std::numbers::pi}});
    h << "angle-sum of " << t.to_string() << " = " << num(s) << (s < 2 * std::numbers::pi ? " < 2pi" : " >= 2pi")
      << "\n";
  }
  if (!a.types.empty()) j["angle_sums"] = sums;
  emit(g, j, h.str());
  return 0;
}

struct CriticalArgs {
  Input in;
  std::vector<std::string> types;
  double margin = 0.01;
  double tolerance = 1e-12;
  int max_iterations = 500;
};

int cmd_critical(const Globals& g, const CriticalArgs& a) {
  auto types = a.types.empty() ? distinct_interior_types(load(a.in)) : parse_types(a.types);
  CriticalRadiusOptions opt{a.margin, a.tolerance, a.max_iterations};
  auto cr = critical_radius(types, opt);
  json th = json::array();
  std::ostringstream h;
  for (std::size_t i = 0; i < types.size(); ++i) {
    th.push_back({{"type", types[i].to_string()}, {"threshold", cr.thresholds[i]}});
    h << std::left << std::setw(20) << types[i].to_string() << num(cr.thresholds[i], 15) << "\n";
  }
  json j{{"t0", cr.t0}, {"margin", a.margin}, {"thresholds", th}};
  h << "t0 = " << num(cr.t0, 15) << "\n";
  emit(g, j, h.str());
  return 0;
}

// --- metric -----------------------------------------------------------------

struct MeshArgs {
  Input in;
  double r = 1;
  double h = 0.1;
  std::size_t budget = 200000;
};

int cmd_diameter(const Globals& g, const MeshArgs& a) {
  auto c = load(a.in);
  auto mesh = build_mesh(c, a.r, {a.h, a.budget});
  auto d = approx_diameter(mesh);
  const double bound = std::numbers::pi * a.r;
  json j{{"diameter", d.value},    {"h", d.h},          {"r", a.r},
         {"nodes", mesh.node_count()}, {"pi_r", bound}, {"within_pi_r", d.value <= bound + 1e-6}};
  std::ostringstream h;
  h << "diameter estimate " << num(d.value) << " at h = " << a.h << " (" << mesh.node_count() << " nodes)\n"
    << "pi r = " << num(bound) << (d.value <= bound + 1e-6 ? "  bound holds" : "  BOUND EXCEEDED") << "\n";
  emit(g, j, h.str());
  return 0;
}

struct AvoidanceArgs {
  MeshArgs mesh;
  int pairs = 50;
  std::optional<int> straddle_vertex;
  double delta = 0.3;
};

int cmd_avoidance(const Globals& g, const AvoidanceArgs& a) {
  auto c = load(a.mesh.in);
  auto mesh = build_mesh(c, a.mesh.r, {a.mesh.h, a.mesh.budget});
  auto pairs = sample_node_pairs(mesh, a.pairs, g.seed);
  auto rep = vertex_avoidance_probe(mesh, c, pairs);
  int negative = 0;
  for (const auto& p : rep.pairs) negative += p.min_detour() < 0;
  json j{{"pairs", rep.pairs.size()}, {"seed", g.seed}, {"min_detour", rep.min_detour}, {"negative", negative}};
  std::ostringstream h;
  h << rep.pairs.size() << " sampled pairs (seed " << g.seed << "), smallest detour through a vertex "
    << num(rep.min_detour) << ", negative: " << negative << "\n";
  if (a.straddle_vertex) {
    auto sp = straddling_pair(mesh, c, *a.straddle_vertex, a.delta);
    auto sr = vertex_avoidance_probe(mesh, c, {sp});
    const auto& p = sr.pairs.front();
    j["straddling"] = {{"vertex", *a.straddle_vertex},
                       {"delta", a.delta},
                       {"unconstrained", p.unconstrained},
                       {"through_vertex", p.best_constrained},
                       {"detour", p.min_detour()}};
    h << "straddling pair at vertex " << *a.straddle_vertex << ": detour " << num(p.min_detour()) << "\n";
  }
  emit(g, j, h.str());
  return 0;
}

// --- isoperimetric ----------------------------------------------------------

struct IsoArgs {
  Input in;
  int center = 0;
  std::optional<int> max_radius;
  std::vector<int> faces;
  bool subdivide = false;
};

json report_json(const IsoperimetricReport& r) {
  return {{"faces", r.face_count},
          {"boundary_edges", r.boundary_edge_count},
          {"ratio", rational_json(r.ratio)},
          {"ratio_value", to_double(r.ratio)},
          {"rho_area", r.rho_area},
          {"rho_perimeter", r.rho_perimeter}};
}

int cmd_isoperimetric(const Globals& g, const IsoArgs& a) {
  auto c = load(a.in);
  if (a.subdivide) c = star_subdivide(c);
  std::ostringstream h;
  json j;
  if (!a.faces.empty()) {
    auto r = isoperimetric_report({c, a.faces});
    j = report_json(r);
    h << r.face_count << " faces, " << r.boundary_edge_count << " boundary edges, ratio " << to_string(r.ratio)
      << "\n";
  } else {
    if (!a.max_radius) throw Error(ErrorKind::BadParameters, "give --faces or --max-radius");
    auto prof = ball_profile(c, a.center, *a.max_radius);
    json rows = json::array();
    h << std::left << std::setw(8) << "radius" << std::setw(8) << "faces" << std::setw(10) << "boundary"
      << "ratio\n";
    double top = 0;
    for (std::size_t k = 0; k < prof.size(); ++k) {
      json row = report_json(prof[k]);
      row["radius"] = k;
      rows.push_back(row);
      top = std::max(top, to_double(prof[k].ratio));
      h << std::setw(8) << k << std::setw(8) << prof[k].face_count << std::setw(10) << prof[k].boundary_edge_count
        << to_string(prof[k].ratio) << " = " << num(to_double(prof[k].ratio), 6) << "\n";
    }
    j = {{"center", a.center}, {"balls", rows}, {"max_ratio", top}};
  }
  emit(g, j, h.str());
  return 0;
}

// --- generate / render ------------------------------------------------------

int cmd_generate(const Globals& g, const std::string& spec_text, const std::string& out) {
  auto spec = parse_generator_spec(spec_text);
  auto data = generate_data(spec);
  auto c = build_complex(data);
  auto check = verify_generator(spec, c);
  if (!check.ok) {
    for (const auto& f : check.failures) std::cerr << "generator check: " << f << "\n";
    return 1;
  }
  if (out.empty()) {
    std::cout << serialize_psc(data);
    return 0;
  }
  save_psc(out, data);
  json j{{"spec", to_string(spec)}, {"output", out}, {"faces", c.face_count()}, {"edges", c.edge_count()},
         {"vertices", c.vertex_count()}};
  emit(g, j, "wrote " + out + " (" + std::to_string(c.face_count()) + " faces)\n");
  return 0;
}

struct RenderArgs {
  Input in;
  std::string out;
  std::string layout = "tutte";
  std::string positions;
  std::string dump_layout;
  bool labels = false;
  bool dots = false;
  bool no_stroke = false;
  bool no_fill = false;
  int size = 800;
};

int cmd_render(const Globals& g, const RenderArgs& a) {
  auto c = load(a.in);
  RenderOptions opt;
  opt.curvature_labels = a.labels;
  opt.vertex_dots = a.dots;
  opt.stroke = !a.no_stroke;
  opt.fill = !a.no_fill;
  opt.size_px = a.size;
  if (a.layout == "stored") {
    if (a.positions.empty()) throw Error(ErrorKind::BadParameters, "stored layout needs --positions");
    json pj;
    try {
      pj = json::parse(read_text_file(a.positions));
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::SyntaxError, a.positions + ": " + e.what());
    }
    if (!pj.contains("positions") || !pj["positions"].is_array())
      throw Error(ErrorKind::SchemaError, "field 'positions': expected an array of [x, y]");
    for (const auto& p : pj["positions"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        throw Error(ErrorKind::SchemaError, "field 'positions': expected [x, y] pairs");
      opt.stored_positions.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    opt.layout = LayoutKind::Stored;
  }
  auto L = compute_layout(c, opt);
  auto svg = render_svg(c, L, opt);
  if (!a.dump_layout.empty()) {
    json pos = json::array();
    for (const auto& p : L.positions) pos.push_back({p.x(), p.y()});
    std::ofstream(a.dump_layout) << json{{"positions", pos}}.dump(1) << "\n";
  }
  if (a.out.empty()) {
    std::cout << svg;
    return 0;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + a.out + "'");
  f << svg;
  json j{{"output", a.out}, {"faces_drawn", L.drawn.face_count()}, {"removed_face", nullptr}};
  if (L.removed_face) j["removed_face"] = c.face_id(*L.removed_face);
  emit(g, j, "wrote " + a.out + " (" + std::to_string(L.drawn.face_count()) + " faces)\n");
  return 0;
}

int exit_code(const Error& e) {
  if (e.kind() == ErrorKind::NonConvergence) return 3;
  if (e.is_internal()) return 1;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polysurf: combinatorics and geometry of polygonal surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--seed", g.seed, "seed for sampled pairs");

  std::function<int()> run;

  Input validate_in;
  auto* s = app.add_subcommand("validate", "check a psc-1 file and build the complex");
  add_input(s, validate_in);
  s->callback([&] { run = [&] { return cmd_validate(g, validate_in); }; });

  Input report_in;
  s = app.add_subcommand("report", "counts and vertex records");
  add_input(s, report_in);
  s->callback([&] { run = [&] { return cmd_report(g, report_in); }; });

  ClassifyArgs cl;
  s = app.add_subcommand("classify", "type of the universal cover, or exclusion by minimum polygon size");
  add_input(s, cl.in);
  s->add_option("--type", cl.types, "vertex-type such as [7,7,7]; repeatable")->allow_extra_args(false);  // keep "[7,7,7]" whole
  s->add_option("--side-bound", cl.side_bound, "largest polygon size, for --type profiles");
  s->add_option("--min-sides", cl.min_sides, "report which of sphere / plane admit no tiling by such polygons");
  s->add_option("--min-degree", cl.min_degree, "minimum vertex degree for --min-sides");
  s->callback([&] { run = [&] { return cmd_classify(g, cl); }; });

  Input euler_in;
  s = app.add_subcommand("euler", "euler characteristic against the curvature sum");
  add_input(s, euler_in);
  s->callback([&] { run = [&] { return cmd_euler(g, euler_in); }; });

  CatalogArgs cat;
  s = app.add_subcommand("catalog", "enumerate vertex-types with a curvature sign");
  s->add_option("--sides", cat.sides, "largest polygon size N")->required();
  s->add_option("--sign", cat.sign)->check(CLI::IsMember({"positive", "zero", "negative"}));
  s->add_option("--degree-min", cat.degree_min);
  s->add_option("--degree-max", cat.degree_max);
  s->callback([&] { run = [&] { return cmd_catalog(g, cat); }; });

  CoverArgs cov;
  s = app.add_subcommand("cover", "develop the universal cover of a closed orientable complex");
  add_input(s, cov.in);
  s->add_option("--faces", cov.faces, "stop after this many faces");
  s->add_option("--generations", cov.generations, "stop after this many BFS generations");
  s->add_option("-o,--output", cov.out, "write the developed ball as psc-1");
  s->add_option("--projection", cov.projection, "write the face projection as JSON");
  s->callback([&] { run = [&] { return cmd_cover(g, cov); }; });

  SphericalArgs sph;
  s = app.add_subcommand("spherical", "unit regular polygons on the sphere of radius r");
  s->add_option("--r", sph.r)->required();
  s->add_option("--n", sph.n);
  s->add_option("--type", sph.types, "vertex-type whose angle-sum to report; repeatable")->allow_extra_args(false);
  s->callback([&] { run = [&] { return cmd_spherical(g, sph); }; });

  CriticalArgs crit;
  s = app.add_subcommand("critical-radius", "radius beyond which all angle-sums drop below 2 pi");
  add_input(s, crit.in);
  s->add_option("--type", crit.types, "vertex-type; repeatable (overrides the input complex)")->allow_extra_args(false);
  s->add_option("--margin", crit.margin);
  s->add_option("--tolerance", crit.tolerance);
  s->add_option("--max-iterations", crit.max_iterations);
  s->callback([&] { run = [&] { return cmd_critical(g, crit); }; });

  MeshArgs dia;
  s = app.add_subcommand("diameter", "mesh estimate of the diameter of the r-spherical surface");
  add_input(s, dia.in);
  s->add_option("--r", dia.r);
  s->set_help_flag("--help", "print this help and exit");  // -h would clash with --h
  s->add_option("--h", dia.h, "mesh resolution");
  s->add_option("--budget", dia.budget, "maximum mesh nodes");
  s->callback([&] { run = [&] { return cmd_diameter(g, dia); }; });

  AvoidanceArgs av;
  s = app.add_subcommand("avoidance", "detours of shortest paths forced through a vertex");
  add_input(s, av.mesh.in);
  s->add_option("--r", av.mesh.r);
  s->set_help_flag("--help", "print this help and exit");
  s->add_option("--h", av.mesh.h, "mesh resolution");
  s->add_option("--budget", av.mesh.budget);
  s->add_option("--pairs", av.pairs);
  s->add_option("--straddle-vertex", av.straddle_vertex, "also probe a pair straddling this vertex");
  s->add_option("--delta", av.delta, "distance of the straddling points from the vertex");
  s->callback([&] { run = [&] { return cmd_avoidance(g, av); }; });

  IsoArgs iso;
  s = app.add_subcommand("isoperimetric", "face count against boundary length");
  add_input(s, iso.in);
  s->add_option("--center", iso.center, "center face index for balls");
  s->add_option("--max-radius", iso.max_radius, "largest dual-graph ball radius");
  s->add_option("--faces", iso.faces, "explicit face indices")->delimiter(',');
  s->add_flag("--subdivide", iso.subdivide, "star-subdivide first");
  s->callback([&] { run = [&] { return cmd_isoperimetric(g, iso); }; });

  std::string gen_spec, gen_out;
  s = app.add_subcommand("generate", "write a built-in complex as psc-1");
  s->add_option("spec", gen_spec, "e.g. dodecahedron, antiprism:5, pq:7,3,2")->required();
  s->add_option("-o,--output", gen_out);
  s->callback([&] { run = [&] { return cmd_generate(g, gen_spec, gen_out); }; });

  RenderArgs ren;
  s = app.add_subcommand("render", "SVG drawing");
  add_input(s, ren.in);
  s->add_option("-o,--output", ren.out);
  s->add_option("--layout", ren.layout)->check(CLI::IsMember({"tutte", "stored"}));
  s->add_option("--positions", ren.positions, "JSON {\"positions\": [[x, y], ...]} for --layout stored");
  s->add_option("--dump-layout", ren.dump_layout, "write the vertex positions used");
  s->add_flag("--labels", ren.labels, "label interior vertices with their curvature");
  s->add_flag("--dots", ren.dots);
  s->add_flag("--no-stroke", ren.no_stroke);
  s->add_flag("--no-fill", ren.no_fill);
  s->add_option("--size", ren.size);
  s->callback([&] { run = [&] { return cmd_render(g, ren); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (const Error& e) {
    if (g.machine()) std::cout << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    if (g.machine()) std::cout << json{{"error", "IOError"}, {"message", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
