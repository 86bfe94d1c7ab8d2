#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "polynorm/io.hpp"
#include "polynorm/svg.hpp"

using namespace polynorm;
using namespace polynorm::testing;

TEST_CASE("vertex document round-trips through print and parse") {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto p = random_rational_polytope(rng, 2, 3, 6, 4);
    auto doc = PolytopeDocument::from_polytope(p, "case-" + std::to_string(i));
    auto text = doc.print();
    auto back = PolytopeDocument::parse(text);
    CHECK(back.print() == text);
    CHECK(back.to_polytope() == p);
    CHECK(back.name == doc.name);
  }
}

TEST_CASE("inequality documents build the same polytope") {
  auto sq = unit_cube(2);
  PolytopeDocument doc;
  doc.dim = 2;
  doc.inequalities = sq.facets();
  auto text = doc.print();
  auto back = PolytopeDocument::parse(text);
  CHECK(back.print() == text);
  CHECK(back.to_polytope() == sq);
}

TEST_CASE("decimal coordinates are parsed exactly and re-emitted as fractions") {
  auto doc = PolytopeDocument::parse(
      R"({"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "0.7"]]})");
  REQUIRE(doc.vertices);
  CHECK((*doc.vertices)[2][1] == Rational(7, 10));
  CHECK(doc.print().find("\"7/10\"") != std::string::npos);
  CHECK(doc.print().find("0.7") == std::string::npos);
}

TEST_CASE("malformed documents are rejected with a reason") {
  CHECK_THROWS_AS(PolytopeDocument::parse("{"), ParseError);
  CHECK_THROWS_AS(PolytopeDocument::parse(R"({"dim": 2})"), ParseError);
  CHECK_THROWS_AS(PolytopeDocument::parse(R"({"vertices": [["0","0"]]})"), ParseError);
  CHECK_THROWS_AS(
      PolytopeDocument::parse(R"({"dim": 2, "vertices": [["0"]]})"), ParseError);
  CHECK_THROWS_AS(
      PolytopeDocument::parse(R"({"dim": 2, "vertices": [[0, 0]]})"), ParseError);
  CHECK_THROWS_AS(
      PolytopeDocument::parse(R"({"dim": 1, "inequalities": [{"a": [1]}]})"), ParseError);
  CHECK_THROWS_AS(PolytopeDocument::load("/nonexistent/path.json"), ParseError);
}

TEST_CASE("report fragments carry exact data") {
  auto report = make_report("idp", json_idp_verdict(idp_single(unit_cube(2), 3)));
  CHECK(report["schema_version"] == kReportSchemaVersion);
  CHECK(report["command"] == "idp");
  CHECK(report["result"]["holds"] == true);

  auto v = convex_normal_at(unit_simplex(2), Rational(2));
  auto j = json_cover_verdict(v);
  CHECK(j["covered"] == false);
  CHECK(j["witness"].is_array());

  auto e = json_edge(make_edge(pt({"0", "0"}), pt({"2", "4"})));
  CHECK(e["lattice_length"] == "2");
  CHECK(e["direction"][0] == 1);
}

TEST_CASE("svg output is byte-stable and reflects the verdict") {
  auto half_simplex = scale(unit_simplex(2), Rational(3, 2));
  auto covered = svg_cover_figure(half_simplex, Rational(2));
  CHECK(covered == svg_cover_figure(half_simplex, Rational(2)));
  // 9 translate outlines (one per G-point) and no residual highlight
  std::size_t outlines = 0;
  for (std::size_t pos = covered.find("fill=\"none\""); pos != std::string::npos;
       pos = covered.find("fill=\"none\"", pos + 1))
    ++outlines;
  CHECK(outlines == 9);
  CHECK(covered.find("#ffb3b3") == std::string::npos);

  auto uncovered = svg_cover_figure(unit_simplex(2), Rational(2));
  CHECK(uncovered.find("#ffb3b3") != std::string::npos);
}

TEST_CASE("fan figure draws one sector per vertex") {
  auto hexagon = Polytope::hull({pt({"0", "0"}), pt({"3", "0"}), pt({"3", "-2"}),
                                 pt({"2", "-3"}), pt({"-1", "-3"}), pt({"-1", "-1"})});
  auto fig = svg_fan_figure(hexagon);
  std::size_t sectors = 0;
  for (std::size_t pos = fig.find("fill-opacity"); pos != std::string::npos;
       pos = fig.find("fill-opacity", pos + 1))
    ++sectors;
  CHECK(sectors == 6);
  CHECK(fig == svg_fan_figure(hexagon));
}

TEST_CASE("figures refuse non-planar input") {
  CHECK_THROWS_AS(svg_cover_figure(unit_cube(3), Rational(2)), NotTwoDimensional);
  CHECK_THROWS_AS(svg_fan_figure(unit_cube(1)), NotTwoDimensional);
  CHECK_THROWS_AS(svg_pair_figure(unit_cube(3), unit_cube(3)), NotTwoDimensional);
}
