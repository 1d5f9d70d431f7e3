#include "univgate/gate_io.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_util.h"

namespace univgate {
namespace {

constexpr double kPi = std::numbers::pi;

std::string parse_error(const std::string& text) {
  try {
    parse_gate_set(text, "f.json");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no error for " << text;
  return "";
}

TEST(ParseAngleTest, Forms) {
  EXPECT_NEAR(parse_angle("2/3 pi").radians, 2 * kPi / 3, 1e-15);
  EXPECT_EQ(*parse_angle("2/3 pi").exact, Rational(2, 3));
  EXPECT_EQ(*parse_angle("pi").exact, Rational(1));
  EXPECT_EQ(*parse_angle("-pi/4").exact, Rational(-1, 4));
  EXPECT_EQ(*parse_angle("3pi").exact, Rational(3));
  EXPECT_EQ(*parse_angle("PI/2").exact, Rational(1, 2));
  EXPECT_NEAR(parse_angle("0.25").radians, 0.25, 0);
  EXPECT_FALSE(parse_angle("1e-3").exact);
  for (const char* bad : {"", "pie", "1/0 pi", "2/3", "pi/", "x"}) {
    testing::expect_error(ErrorCode::kParse, [&] { parse_angle(bad); });
  }
}

TEST(LocateTest, PointerAndLineColumn) {
  const std::string text = "{\n  \"a\": [1,\n    {\"b\": 7}]\n}";
  const auto off = locate_pointer(text, "/a/1/b");
  ASSERT_TRUE(off);
  EXPECT_EQ(text[*off], '7');
  EXPECT_EQ(line_column(text, *off), std::make_pair(3, 11));
  EXPECT_EQ(line_column(text, 0), std::make_pair(1, 1));
  EXPECT_FALSE(locate_pointer(text, "/a/5"));
  EXPECT_FALSE(locate_pointer(text, "/c"));
}

TEST(GateSetTest, MatrixAndAxisAngle) {
  const std::string text = R"({"group": "SU", "dim": 2, "gates": [
    [[[0, 0], [1, 0]], [[-1, 0], [0, 0]]],
    {"phi": "1/3 pi", "axis": [0, 0, 2]}
  ]})";
  const GateSetDocument doc = parse_gate_set(text);
  ASSERT_EQ(doc.gates.size(), 2u);
  EXPECT_FALSE(doc.axis_angle[0]);
  ASSERT_TRUE(doc.axis_angle[1]);
  EXPECT_EQ(*doc.axis_angle[1]->exact, Rational(1, 3));
  EXPECT_NEAR(doc.axis_angle[1]->axis.z(), 1.0, 1e-15);
  EXPECT_NEAR(doc.gates[1].entries()(0, 0).imag(), std::sin(kPi / 3), 1e-15);

  const GateSetDocument so = parse_gate_set(
      R"({"group": "SO", "dim": 3, "gates": [[[1,0,0],[0,0,1],[0,-1,0]]]})");
  EXPECT_EQ(so.group, Group::kSO);
  EXPECT_EQ(so.gates[0].dim(), 3);
}

TEST(GateSetTest, Diagnostics) {
  // Syntax errors point at the offending byte.
  EXPECT_NE(parse_error("{\"group\": \"SU\",\n \"dim\": }").find("f.json:2:"), std::string::npos);
  EXPECT_NE(parse_error(R"({"group": "SP", "dim": 2, "gates": [1]})").find("f.json:1:11"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"group": "SU", "gates": []})").find("dim"), std::string::npos);
  const std::string short_row = "{\"group\": \"SU\", \"dim\": 2, \"gates\": [\n"
                                "  [[[1, 0]], [[0, 0], [1, 0]]]]}";
  const std::string msg = parse_error(short_row);
  EXPECT_NE(msg.find("f.json:2:4"), std::string::npos) << msg;
  EXPECT_NE(msg.find("expected 2 entries"), std::string::npos);
  EXPECT_NE(parse_error(R"({"group": "SU", "dim": 3, "gates": [{"phi": 1, "axis": [0,0,1]}]})")
                .find("SU(2) or SO(3)"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"group": "SU", "dim": 2, "gates": [{"phi": "x", "axis": [0,0,1]}]})")
                .find("bad angle"),
            std::string::npos);
}

TEST(GateSetTest, ValidationErrorsKeepTheirCode) {
  const std::string text = R"({"group": "SU", "dim": 2, "gates": [
    [[[2, 0], [0, 0]], [[0, 0], [0.5, 0]]]]})";
  try {
    parse_gate_set(text, "g.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotUnitary);
    EXPECT_NE(std::string(e.what()).find("g.json:2:"), std::string::npos) << e.what();
  }
  testing::expect_error(ErrorCode::kParse, [] { load_gate_set("/nonexistent/file.json"); });
}

TEST(ReportTest, VerdictRoundTrip) {
  UniversalityVerdict v;
  v.status = VerdictStatus::kUniversal;
  v.step = 2;
  v.termination_l = 3;
  v.commutant_dim = 1;
  v.commutant_gap = 1e12;
  v.n_g_used = 6;
  v.ng_source = NgSource::kExact;
  v.generator_names = {"g0", "g1"};
  v.group_label = "SU(2)";
  v.witness = Witness{{0, 1, 1}, 4, Complex(-1, 0), false};
  v.trace = {{1, 1, "commutant trivial"}, {3, 2, "landed"}};
  nlohmann::json body = verdict_to_json(v);
  body["timings"] = {{"total_ms", 0.1}};
  const nlohmann::json parsed = parse_report(make_report("check", body).dump());
  const UniversalityVerdict back = verdict_from_json(parsed);
  EXPECT_EQ(back.status, v.status);
  EXPECT_EQ(back.termination_l, 3);
  EXPECT_EQ(back.group_label, "SU(2)");
  ASSERT_TRUE(back.witness);
  EXPECT_EQ(back.witness->word, v.witness->word);
  EXPECT_EQ(back.witness->power, 4);
  EXPECT_EQ(back.witness->center, Complex(-1, 0));
  ASSERT_EQ(back.trace.size(), 2u);
  EXPECT_EQ(back.trace[1].message, "landed");
  EXPECT_EQ(verdict_to_json(back), verdict_to_json(v));

  UniversalityVerdict f;
  f.status = VerdictStatus::kFinite;
  f.order = 48;
  f.group_label = "<2,3,4>";
  EXPECT_EQ(verdict_from_json(verdict_to_json(f)).order, 48);
}

TEST(ReportTest, Rejections) {
  nlohmann::json r = make_report("ng", {{"value", 6}, {"source", "Exact"}});
  EXPECT_NO_THROW(parse_report(r.dump()));
  r["schema_version"] = "2";
  testing::expect_error(ErrorCode::kParse, [&] { parse_report(r.dump()); });
  testing::expect_error(ErrorCode::kParse, [] {
    parse_report(make_report("ng", {{"value", 6}}).dump());
  });
  testing::expect_error(ErrorCode::kParse, [] {
    parse_report(make_report("mystery", nlohmann::json::object()).dump());
  });
  testing::expect_error(ErrorCode::kParse, [] { parse_report("{"); });
  testing::expect_error(ErrorCode::kParse, [] {
    parse_report(make_report("check", verdict_to_json(UniversalityVerdict{})).dump());
  });
  nlohmann::json bad = verdict_to_json(UniversalityVerdict{});
  bad["verdict"] = "Maybe";
  testing::expect_error(ErrorCode::kParse, [&] { verdict_from_json(bad); });
}

}  // namespace
}  // namespace univgate
