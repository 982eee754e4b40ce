#include "polysurf/generators.hpp"
#include "polysurf/psc.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace polysurf;

namespace {
const std::string kData = POLYSURF_TEST_DATA;
const std::string kSamples = POLYSURF_SAMPLE_DATA;

Error parse_error(const std::string& text) {
  try {
    parse_psc(text);
  } catch (const Error& e) {
    return e;
  }
  return Error(ErrorKind::InconsistentDevelopment, "nothing thrown");
}
}  // namespace

TEST(Psc, SquareTorusFixture) {
  auto g = load_psc(kSamples + "/square_torus.psc");
  EXPECT_EQ(g.faces.size(), 1u);
  EXPECT_EQ(g.gluings.size(), 2u);
  auto c = build_complex(g);
  EXPECT_EQ(c.vertex_count(), 1);
  EXPECT_TRUE(same_gluing_data(g, square_torus_data()));
}

TEST(Psc, SampleFixturesRoundTrip) {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kSamples)) {
    if (entry.path().extension() != ".psc") continue;
    ++seen;
    auto g = load_psc(entry.path().string());
    EXPECT_TRUE(same_gluing_data(parse_psc(serialize_psc(g)), g)) << entry.path();
    EXPECT_NO_THROW(build_complex(g)) << entry.path();
  }
  EXPECT_GE(seen, 4);
}

TEST(Psc, GeneratorOutputsRoundTrip) {
  auto specs = closed_fixture_specs();
  specs.push_back(GeneratorSpec::pq_ball(7, 3, 3));
  specs.push_back(GeneratorSpec::pq_ball(5, 4, 2, true));
  for (const auto& spec : specs) {
    auto g = generate_data(spec);
    auto text = serialize_psc(g);
    auto back = parse_psc(text);
    EXPECT_TRUE(same_gluing_data(back, g)) << to_string(spec);
    EXPECT_EQ(serialize_psc(back), text) << to_string(spec);
  }
}

TEST(Psc, ReversedDefaultsToTrue) {
  auto g = load_psc(kData + "/default_reversed.psc");
  ASSERT_EQ(g.gluings.size(), 2u);
  for (const auto& gl : g.gluings) EXPECT_TRUE(gl.reversed);
  EXPECT_EQ(g.faces[0].id, 7);
}

TEST(Psc, SlotIndexEqualToSidesIsASchemaError) {
  auto e = parse_error(read_text_file(kData + "/slot_out_of_range.psc"));
  EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
  EXPECT_NE(std::string(e.what()).find("gluings[1].b[1]"), std::string::npos) << e.what();
}

TEST(Psc, SyntaxErrorCitesLine) {
  auto e = parse_error(read_text_file(kData + "/syntax_error.psc"));
  EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
  EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos) << e.what();
}

TEST(Psc, DuplicateSlot) {
  auto e = parse_error(read_text_file(kData + "/duplicate_slot.psc"));
  EXPECT_EQ(e.kind(), ErrorKind::DuplicateSlot);
  EXPECT_NE(std::string(e.what()).find("gluings[1].a"), std::string::npos) << e.what();
}

TEST(Psc, SchemaErrors) {
  EXPECT_EQ(parse_error(read_text_file(kData + "/unknown_face.psc")).kind(), ErrorKind::SchemaError);
  EXPECT_EQ(parse_error("[1,2]").kind(), ErrorKind::SchemaError);
  EXPECT_EQ(parse_error(R"({"format":"psc-2","faces":[]})").kind(), ErrorKind::SchemaError);
  EXPECT_EQ(parse_error(R"({"format":"psc-1"})").kind(), ErrorKind::SchemaError);
  EXPECT_EQ(parse_error(R"({"format":"psc-1","faces":[{"id":0,"sides":2}]})").kind(), ErrorKind::SchemaError);
  EXPECT_EQ(parse_error(R"({"format":"psc-1","faces":[{"id":0,"sides":4},{"id":0,"sides":3}]})").kind(),
            ErrorKind::SchemaError);
  EXPECT_EQ(parse_error(R"({"format":"psc-1","faces":[{"id":0,"sides":"4"}]})").kind(), ErrorKind::SchemaError);
  EXPECT_EQ(
      parse_error(R"({"format":"psc-1","faces":[{"id":0,"sides":4}],"gluings":[{"a":[0,0],"b":[0,2],"reversed":1}]})")
          .kind(),
      ErrorKind::SchemaError);
  EXPECT_EQ(parse_error(R"({"format":"psc-1","faces":[{"id":0,"sides":4}],"gluings":[{"a":[0,0]}]})").kind(),
            ErrorKind::SchemaError);
  EXPECT_EQ(parse_error("").kind(), ErrorKind::SyntaxError);
}

TEST(Psc, NonReversedGluingSurvives) {
  auto g = load_psc(kData + "/klein_bottle.psc");
  auto back = parse_psc(serialize_psc(g));
  EXPECT_TRUE(same_gluing_data(g, back));
  EXPECT_FALSE(is_orientable(build_complex(back)));
}

TEST(Psc, SameGluingDataIgnoresOrder) {
  GluingData a{{{0, 4}, {1, 4}}, {{{0, 0}, {1, 2}, true}, {{0, 1}, {1, 1}, false}}};
  GluingData b{{{1, 4}, {0, 4}}, {{{1, 1}, {0, 1}, false}, {{1, 2}, {0, 0}, true}}};
  EXPECT_TRUE(same_gluing_data(a, b));
  b.gluings[0].reversed = true;
  EXPECT_FALSE(same_gluing_data(a, b));
}
