#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "dehnlat/io.hpp"

using namespace dehnlat;

namespace {

std::string data(const std::string& name) { return std::string(DEHNLAT_DATA_DIR) + "/" + name; }

void expect_round_trip(const Json& doc) {
  const std::string text = render(doc);
  EXPECT_EQ(render(Json::parse(text)), text);
}

KnotModel load(const std::string& name) { return parse_knot(read_json_file(data(name))); }

}  // namespace

TEST(Io, GramFiles) {
  const auto L = parse_gram(read_json_file(data("lam11_4.json")));
  EXPECT_EQ(L.det(), 11);
  EXPECT_EQ(parse_gram(gram_to_json(L)).gram(), L.gram());
  EXPECT_EQ(parse_gram(read_json_file(data("lam9_2.json"))).gram(), linear_lattice(9, 2).gram());
}

TEST(Io, GramErrors) {
  auto kind = [](const char* text) {
    try {
      parse_gram(Json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind(R"({"gram": [[1, 2], [3]]})"), ErrorKind::ParseError);
  EXPECT_EQ(kind(R"({"matrix": [[1]]})"), ErrorKind::ParseError);
  EXPECT_EQ(kind(R"({"gram": [[1, 2], [0, 1]]})"), ErrorKind::NotSymmetric);
  EXPECT_EQ(kind(R"({"gram": [[0]]})"), ErrorKind::NotPositiveDefinite);
}

TEST(Io, MalformedFileReportsLine) {
  const std::string path = testing::TempDir() + "broken.json";
  {
    std::ofstream out(path);
    out << "{\n  \"gram\": [[1,\n  ]]\n}\n";
  }
  try {
    read_json_file(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find(path + ":3"), std::string::npos) << e.what();
  }
  std::remove(path.c_str());
}

TEST(Io, KnotFiles) {
  EXPECT_EQ(v_sequence(load("trefoil.json")).sequence.values(), (IntVector{1}));
  EXPECT_EQ(v_sequence(load("t25.json")).sequence.values(), (IntVector{1, 1}));
  EXPECT_TRUE(v_sequence(load("unknot.json")).sequence.values().empty());
}

TEST(Io, ReportsRoundTripByteForByte) {
  const auto lam = linear_lattice(11, 4);
  const auto vs = v_sequence(load("t25.json"));
  expect_round_trip(table_json(d_lens_table(LensSpace::make(11, 4))));
  expect_round_trip(analysis_json(lam));
  expect_round_trip(vsequence_json(vs));
  for (auto mode : {ObstructionMode::Global, ObstructionMode::Matching, ObstructionMode::Affine}) {
    expect_round_trip(obstruction_json(lattice_obstruction(lam, d_table(vs.sequence, 11), mode)));
    expect_round_trip(obstruction_json(sharpness_check(lam, d_table(vs.sequence, 11).reversed(), mode)));
  }
  expect_round_trip(standardness_json(standardness_verdict(load("trefoil.json"), 9, linear_lattice(9, 2))));
}

TEST(Io, AnalysisContents) {
  const Json doc = analysis_json(linear_lattice(11, 4));
  EXPECT_EQ(doc["verdict"], "non-standard");
  EXPECT_EQ(doc["data"]["determinant"], "11");
  EXPECT_EQ(doc["data"]["min_char_norm"], "4/11");
  EXPECT_EQ(doc["data"]["invariant_factors"], Json::array({"11"}));
  EXPECT_EQ(doc["data"]["owens_strle"]["bound"], "12/11");
}

TEST(Io, RationalStrings) {
  EXPECT_EQ(to_string(parse_rational("-3/6")), "-1/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(parse_rational("8/12"), Rational(2, 3));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}
