#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected toric::Error";
  return ErrorCode::InternalError;
}

std::string data(const std::string& name) { return std::string(TORIC_TEST_DATA_DIR) + "/data/" + name; }

}  // namespace

TEST(ParseInput, FanDocument) {
  std::istringstream none;
  const InputDocument doc = parse_input(data("paper_fan.json"), false, none);
  ASSERT_TRUE(std::holds_alternative<FanDocument>(doc));
  EXPECT_EQ(std::get<FanDocument>(doc).name, "five-ray example");
  EXPECT_EQ(to_fan(doc), paper_fan());
}

TEST(ParseInput, PolygonDocument) {
  std::istringstream none;
  const InputDocument doc = parse_input(data("unit_square.json"), false, none);
  ASSERT_TRUE(std::holds_alternative<PolygonDocument>(doc));
  EXPECT_EQ(std::get<PolygonDocument>(doc).vertices.size(), 4u);
  EXPECT_EQ(to_fan(doc), make_fan({{0, -1}, {1, 0}, {0, 1}, {-1, 0}}));
}

TEST(ParseInput, Errors) {
  std::istringstream none;
  EXPECT_EQ(code_of([&] { parse_input(data("ambiguous.json"), false, none); }),
            ErrorCode::AmbiguousDocument);
  EXPECT_EQ(code_of([&] { parse_input(data("float.json"), false, none); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_input(data("missing.json"), false, none); }), ErrorCode::IoError);
  EXPECT_EQ(code_of([] { parse_json_document("{}"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_json_document("[1, 2]"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_json_document(R"({"rays": [[1, 0, 3]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_json_document(R"({"rays": [[1, "x"]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_json_document(R"({"rays": [[1, 18446744073709551615]]})"); }),
            ErrorCode::ParseError);
}

TEST(ParseInput, SyntaxErrorsReportPosition) {
  try {
    parse_json_document("{\"rays\": [[1, 0],\n [0, 1] [-1, -1]]}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(ParseInput, StdinAndPlainText) {
  std::istringstream in(R"({"rays": [[-1,-1],[1,0],[0,1]]})");
  EXPECT_EQ(to_fan(parse_input("-", false, in)), p2_fan());

  std::istringstream none;
  EXPECT_EQ(to_fan(parse_input(data("paper_fan.txt"), true, none)), paper_fan());
  EXPECT_TRUE(std::holds_alternative<PolygonDocument>(parse_plain_document("vertices 0 0 1 0 0 1")));
  EXPECT_EQ(to_fan(parse_plain_document("-1 -1 1 0 0 1")), p2_fan());
  EXPECT_EQ(code_of([] { parse_plain_document("1 0 0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_plain_document("1 0 0 1.5"); }), ErrorCode::ParseError);
}

TEST(ParseInput, BigIntegersAsStrings) {
  const auto doc = std::get<FanDocument>(
      parse_json_document(R"({"rays": [["123456789012345678901234567890", 1], [0, 1]]})"));
  EXPECT_EQ(doc.rays[0].a, Integer("123456789012345678901234567890"));
}

TEST(FanDocumentJson, RoundTrip) {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> coord(-1000000, 1000000);
  for (int t = 0; t < 200; ++t) {
    FanDocument doc;
    const int count = static_cast<int>(rng() % 12);
    for (int k = 0; k < count; ++k) doc.rays.emplace_back(coord(rng), coord(rng));
    if (rng() % 2) doc.name = "fan " + std::to_string(t);
    if (t == 0) doc.rays.emplace_back(Integer("-98765432109876543210987654321"), Integer(3));
    const InputDocument back = parse_json_document(to_json(doc).dump());
    ASSERT_TRUE(std::holds_alternative<FanDocument>(back));
    EXPECT_EQ(std::get<FanDocument>(back), doc);
  }
}

TEST(Render, Table) {
  const RationalMatrix m{{q(-1, 4), q(1, 4)}, {q(1, 4), q(-3, 20)}};
  EXPECT_EQ(render_table(m), " -1/4    1/4\n  1/4  -3/20\n");
}

TEST(Render, Latex) {
  const RationalMatrix m{{q(-1, 4), q(2)}, {q(0), q(3, 20)}};
  EXPECT_EQ(render_latex(m),
            "\\begin{pmatrix}\n-\\frac{1}{4} & 2 \\\\\n0 & \\frac{3}{20}\n\\end{pmatrix}\n");
}

TEST(Render, JsonStrings) {
  const RationalMatrix m{{make_rational(-6, 40)}};
  EXPECT_EQ(to_json(m).dump(), R"([["-3/20"]])");
}
