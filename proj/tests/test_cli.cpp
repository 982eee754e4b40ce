#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

const std::string kCli = POLYSURF_CLI;
const std::string kData = POLYSURF_TEST_DATA;
const std::string kSamples = POLYSURF_SAMPLE_DATA;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = "'" + kCli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json machine(const std::string& args, int want_status = 0) {
  auto r = run("--format machine " + args);
  EXPECT_EQ(r.status, want_status) << args << "\n" << r.out;
  try {
    return nlohmann::json::parse(r.out);
  } catch (const std::exception& e) {
    ADD_FAILURE() << "not JSON for " << args << ": " << r.out;
    return {};
  }
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("polysurf_cli_" + name)).string();
}

}  // namespace

TEST(Cli, ValidateFixtures) {
  auto j = machine("validate " + kSamples + "/square_torus.psc");
  EXPECT_EQ(j["valid"], true);
  EXPECT_EQ(j["faces"], 1);
  EXPECT_EQ(run("validate " + kSamples + "/cube.psc").status, 0);
}

TEST(Cli, ValidationFailuresExitTwo) {
  for (const char* f : {"syntax_error.psc", "slot_out_of_range.psc", "duplicate_slot.psc", "unknown_face.psc"}) {
    auto j = machine(std::string("validate ") + kData + "/" + f, 2);
    EXPECT_TRUE(j.contains("error")) << f;
  }
  EXPECT_EQ(machine("validate " + kData + "/syntax_error.psc", 2)["error"], "SyntaxError");
  EXPECT_EQ(machine("validate " + kData + "/slot_out_of_range.psc", 2)["error"], "SchemaError");
  EXPECT_EQ(run("validate --gen no-such-thing").status, 2);
  EXPECT_EQ(run("catalog").status, 2);  // --sides is required
}

TEST(Cli, MissingFileIsNotAValidationFailure) {
  EXPECT_EQ(run("validate /nonexistent/polysurf.psc").status, 1);
}

TEST(Cli, NonConvergenceExitsThree) {
  auto j = machine("critical-radius --type [4,4,4] --max-iterations 3 --tolerance 1e-15", 3);
  EXPECT_EQ(j["error"], "NonConvergence");
}

TEST(Cli, ClassifyAndEuler) {
  EXPECT_EQ(machine("classify --gen dodecahedron")["type"], "Elliptic");
  EXPECT_EQ(machine("classify --gen hexagonal-torus")["type"], "Parabolic");
  EXPECT_EQ(machine("classify --type [7,7,7] --side-bound 7")["type"], "Hyperbolic");
  auto e = machine("euler --gen dodecahedron");
  EXPECT_EQ(e["chi"], 2);
  EXPECT_EQ(e["curvature_sum"], "2");
  EXPECT_EQ(e["consistent"], true);
}

TEST(Cli, Catalog) {
  auto j = machine("catalog --sides 7 --sign negative --degree-max 3");
  ASSERT_TRUE(j.contains("types"));
  EXPECT_FALSE(j["types"].empty());
}

TEST(Cli, GenerateValidateRoundTrip) {
  std::string path = temp_path("icosa.psc");
  ASSERT_EQ(run("generate icosahedron -o " + path).status, 0);
  auto j = machine("report " + path);
  EXPECT_EQ(j["faces"], 20);
  EXPECT_EQ(j["vertices"], 12);
  EXPECT_EQ(j["edges"], 30);
  // stdout form parses the same way
  auto text = run("generate icosahedron");
  EXPECT_EQ(text.status, 0);
  std::ifstream in(path);
  std::string saved((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text.out, saved);
  std::filesystem::remove(path);
}

TEST(Cli, CoverWritesBall) {
  std::string path = temp_path("cover.psc");
  auto j = machine("cover --gen square-torus --generations 3 -o " + path);
  EXPECT_EQ(j["faces"], 25);
  auto r = machine("validate " + path);
  EXPECT_EQ(r["faces"], 25);
  std::filesystem::remove(path);
}

TEST(Cli, SphericalAndCriticalRadius) {
  auto s = machine("spherical --r 1 --n 4");
  EXPECT_NEAR(s["polygon"]["phi"].get<double>(), 0.9369, 1e-4);
  auto c = machine("critical-radius --type [4,4,4] --margin 0");
  EXPECT_NEAR(c["t0"].get<double>(), 1 / std::acos(1.0 / 3), 1e-9);
}

TEST(Cli, DiameterAndAvoidance) {
  auto d = machine("diameter --gen cube --r 1 --h 0.2");
  EXPECT_LE(d["diameter"].get<double>(), M_PI + 1e-6);
  auto a = machine("--seed 7 avoidance --gen cube --r 1 --h 0.25 --pairs 5 --straddle-vertex 0");
  EXPECT_GE(a["min_detour"].get<double>(), 0.0);
  auto b = machine("--seed 7 avoidance --gen cube --r 1 --h 0.25 --pairs 5 --straddle-vertex 0");
  EXPECT_EQ(a, b);
  EXPECT_EQ(run("diameter --gen cube --r 0.5 --h 0.2").status, 2);
}

TEST(Cli, Isoperimetric) {
  auto j = machine("isoperimetric --gen pq:6,3,4 --center 0 --max-radius 3");
  ASSERT_TRUE(j.contains("balls"));
  EXPECT_EQ(j["balls"].size(), 4u);
  EXPECT_EQ(j["balls"][1]["faces"], 7);
  EXPECT_EQ(j["balls"][1]["ratio"], "7/18");
}

TEST(Cli, Render) {
  std::string svg = temp_path("ball.svg"), layout = temp_path("layout.json");
  ASSERT_EQ(run("render --gen pq:7,3,2 -o " + svg + " --dump-layout " + layout).status, 0);
  std::ifstream in(svg);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("<svg"), std::string::npos);
  // the dumped layout feeds back in as a stored layout and reproduces the drawing
  std::string again = temp_path("again.svg");
  ASSERT_EQ(run("render --gen pq:7,3,2 --layout stored --positions " + layout + " -o " + again).status, 0);
  std::ifstream in2(again);
  std::string text2((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, text2);
  EXPECT_EQ(run("render --gen square-torus -o " + svg).status, 2);
  for (const auto& p : {svg, layout, again}) std::filesystem::remove(p);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("").status, 2);
}
