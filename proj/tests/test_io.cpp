#include <algorithm>
#include <string>

#include "doctest.h"

#include "kingiso/io.hpp"

using namespace kingiso;

namespace {

std::size_t count_glyph(const std::string& text, const std::string& glyph) {
  std::size_t n = 0;
  for (auto pos = text.find(glyph); pos != std::string::npos; pos = text.find(glyph, pos + 1)) ++n;
  return n;
}

PointSet box_4x3() {
  std::vector<LatticePoint> pts;
  for (Coord x = 0; x < 4; ++x)
    for (Coord y = 0; y < 3; ++y) pts.push_back({x, y});
  return PointSet(2, pts);
}

}  // namespace

TEST_CASE("parse_point_set examples") {
  CHECK(parse_point_set("0 0\n1 0\n0 1\n1 1\n") == PointSet(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(parse_point_set("dim 1\n0\n2\n") == PointSet(1, {{0}, {2}}));
  CHECK(parse_point_set("# header\n\n 3, -4 # trailing\n+1,\t2\n") == PointSet(2, {{3, -4}, {1, 2}}));
  CHECK(parse_point_set("dim 3\n") == PointSet(3));
  CHECK(parse_point_set("", 2) == PointSet(2));
}

TEST_CASE("parse_point_set errors") {
  try {
    parse_point_set("0 0\n0 0\n");
    FAIL("expected duplicate error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
  try {
    parse_point_set("0 0\n# comment\n1 2 3\n");
    FAIL("expected arity error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_point_set("dim 2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("1.5\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("0\ndim 1\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("dim 0\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("99999999999999999999 1\n"), ParseError);
}

TEST_CASE("set files round-trip") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const std::vector<Coord> window(static_cast<std::size_t>(n), n == 1 ? 12 : 6);
    const auto s = random_point_set(n, seed % 9, window, seed).translated(
        LatticePoint(std::vector<Coord>(static_cast<std::size_t>(n), -3)));
    const auto text = format_point_set(s);
    CHECK(parse_point_set(text) == s);
    CHECK(format_point_set(parse_point_set(text)) == text);
  }
}

TEST_CASE("breakdown serialization") {
  const auto single = edge_boundary_formula(PointSet(1, {{0}}));
  const auto j = to_json(single);
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK(j.at("total") == 2);
  REQUIRE(j.at("per_direction").size() == 2);
  CHECK(j.at("per_direction")[0].at("direction") == Json::array({-1}));
  CHECK(j.at("per_direction")[0].at("projection_count") == 1);
  CHECK(j.at("per_direction")[0].at("gap_count") == 0);
  CHECK(j.at("per_direction")[1].at("direction") == Json::array({1}));

  CHECK(to_json(edge_boundary_formula(box_4x3())).at("total") == 38);
  CHECK(to_json(edge_boundary_formula(PointSet(2))).at("total") == 0);

  // Key order is part of the format.
  const auto text = serialize_report(single);
  CHECK(text.find("\"schema_version\"") < text.find("\"kind\""));
  CHECK(text.find("\"kind\"") < text.find("\"total\""));

  for (const auto& s : {box_4x3(), PointSet(1, {{0}, {2}}), PointSet(3)}) {
    const auto b = edge_boundary_formula(s);
    CHECK(breakdown_from_json(Json::parse(serialize_report(b))) == b);
  }
}

TEST_CASE("search report serialization round-trips") {
  for (const auto& r : {min_edge_boundary(2, 12), min_edge_boundary(3, 5), min_edge_boundary(1, 3)}) {
    const auto back = report_from_json(Json::parse(serialize_report(r)));
    CHECK(back == r);
  }
  CHECK_THROWS_AS(report_from_json(to_json(edge_boundary_formula(PointSet(1, {{0}})))), ParseError);
}

TEST_CASE("plain formats mention the key numbers") {
  CHECK(format_plain(edge_boundary_formula(box_4x3())).find("formula total: 38") != std::string::npos);
  const auto trace = compress_to_fixed_point(PointSet(1, {{0}, {2}}));
  const auto t = format_plain(trace);
  CHECK(t.find("changing steps: 1") != std::string::npos);
  CHECK(t.find("(4,-2) -> (1,-1)") != std::string::npos);
  CHECK(to_json(trace).at("final").at("points") == Json::array({Json::array({0}), Json::array({1})}));
  const auto table = format_survey_table(survey_gap_free_optima(2, 3));
  CHECK(std::count(table.begin(), table.end(), '\n') == 4);
  CHECK(survey_to_json(survey_gap_free_optima(2, 3)).at("rows").size() == 3);
}

TEST_CASE("render_grid ascii") {
  CHECK(render_grid(PointSet(2, {{0, 0}})) == "○○○\n○●○\n○○○\n");

  const auto pic = render_grid(box_4x3());
  CHECK(count_glyph(pic, "○") == 18);
  CHECK(count_glyph(pic, "●") == 12);

  // {0,2} x {0}: the hole between the two points is a neighbor.
  CHECK(render_grid(PointSet(2, {{0, 0}, {2, 0}})) == "○○○○○\n○●○●○\n○○○○○\n");

  // y grows upward: the top row holds the higher point's neighbors.
  CHECK(render_grid(PointSet(2, {{0, 0}, {2, 3}})) ==
        "··○○○\n"
        "··○●○\n"
        "··○○○\n"
        "○○○··\n"
        "○●○··\n"
        "○○○··\n");

  CHECK_THROWS_AS(render_grid(PointSet(1, {{0}})), LatticeError);
  RenderOptions small;
  small.max_extent = 4;
  CHECK_THROWS_AS(render_grid(box_4x3(), small), LatticeError);
}

TEST_CASE("render_grid svg") {
  RenderOptions opt;
  opt.mode = RenderMode::svg;
  const auto svg = render_grid(box_4x3(), opt);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_glyph(svg, "class=\"member\"") == 12);
  CHECK(count_glyph(svg, "class=\"neighbor\"") == 18);
}
