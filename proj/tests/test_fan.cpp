#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "polynorm/fan.hpp"

using namespace polynorm;
using namespace polynorm::testing;

namespace {

Polytope sample_hexagon() {
  return Polytope::hull({ipt({0, 0}), ipt({3, 0}), ipt({3, -2}), ipt({2, -3}), ipt({-1, -3}),
                         ipt({-1, -1})});
}

Polytope sample_quad() {
  return Polytope::hull({ipt({0, 0}), ipt({2, 0}), ipt({2, -2}), ipt({0, -2})});
}

const Cone& vertex_cone(const Polytope& p, const Fan& fan, const Point& v) {
  const auto& fs = p.faces();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].dim == 0 && p.vertices()[fs[i].vertex_indices[0]] == v) return fan.cones[i];
  }
  throw std::runtime_error("vertex not found");
}

bool has_generator(const Cone& c, IntVector g) {
  return std::find(c.generators.begin(), c.generators.end(), g) != c.generators.end();
}

}  // namespace

TEST_CASE("normal fan of the unit square") {
  auto sq = unit_cube(2);
  auto fan = normal_fan(sq);
  auto c00 = vertex_cone(sq, fan, ipt({0, 0}));
  CHECK(c00.generators.size() == 2);
  CHECK(has_generator(c00, {-1, 0}));
  CHECK(has_generator(c00, {0, -1}));
  auto c11 = vertex_cone(sq, fan, ipt({1, 1}));
  CHECK(has_generator(c11, {1, 0}));
  CHECK(has_generator(c11, {0, 1}));
}

TEST_CASE("normal fan of the hexagon") {
  auto hex = sample_hexagon();
  auto fan = normal_fan(hex);
  int vertex_cones = 0;
  for (std::size_t i = 0; i < hex.faces().size(); ++i) {
    if (hex.faces()[i].dim != 0) continue;
    ++vertex_cones;
    CHECK(fan.cones[i].generators.size() == 2);
  }
  CHECK(vertex_cones == 6);
  // the edge from (-1,-1) to (0,0) has the single generator (-1,1)
  const auto& fs = hex.faces();
  bool found = false;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].dim != 1) continue;
    std::vector<Point> endpoints = {hex.vertices()[fs[i].vertex_indices[0]],
                                    hex.vertices()[fs[i].vertex_indices[1]]};
    if ((endpoints[0] == ipt({-1, -1}) && endpoints[1] == ipt({0, 0})) ||
        (endpoints[1] == ipt({-1, -1}) && endpoints[0] == ipt({0, 0}))) {
      found = true;
      REQUIRE(fan.cones[i].generators.size() == 1);
      CHECK(fan.cones[i].generators[0] == IntVector{-1, 1});
    }
  }
  CHECK(found);
}

TEST_CASE("vertex cone of the triangle at the origin") {
  auto t = unit_simplex(2);
  auto fan = normal_fan(t);
  auto c = vertex_cone(t, fan, ipt({0, 0}));
  CHECK(has_generator(c, {-1, 0}));
  CHECK(has_generator(c, {0, -1}));
}

TEST_CASE("cone membership via the maximization test") {
  auto sq = unit_cube(2);
  CHECK(cone_in_vertex_cone({0, 1}, sq, ipt({0, 1})));
  CHECK(!cone_in_vertex_cone({0, 1}, sq, ipt({0, 0})));
  CHECK(cone_in_vertex_cone({-1, 1}, sample_quad(), ipt({0, 0})));
  CHECK_THROWS_AS(cone_in_vertex_cone({0, 1}, sq, ipt({5, 5})), NotAVertex);
}

TEST_CASE("refinement") {
  auto hex = sample_hexagon();
  auto quad = sample_quad();
  CHECK(refines(hex, quad));
  CHECK(!refines(quad, hex));
  CHECK(refines(hex, hex));

  auto rect = box({{Rational(0), Rational(1)}, {Rational(0), Rational(7, 10)}});
  auto sq = unit_cube(2);
  CHECK(refines(rect, sq));
  CHECK(refines(sq, rect));
}

TEST_CASE("the face map on the hexagon-quad pair") {
  auto hex = sample_hexagon();
  auto quad = sample_quad();

  // edge from (-1,-1) to (0,0) maps to the vertex (0,0) of Q
  const Face* e = nullptr;
  for (const auto& f : hex.faces()) {
    if (f.dim != 1) continue;
    const auto& a = hex.vertices()[f.vertex_indices[0]];
    const auto& b = hex.vertices()[f.vertex_indices[1]];
    if ((a == ipt({-1, -1}) && b == ipt({0, 0})) || (b == ipt({-1, -1}) && a == ipt({0, 0})))
      e = &f;
  }
  REQUIRE(e != nullptr);
  const Face& img = phi(hex, quad, *e);
  CHECK(img.dim == 0);
  CHECK(quad.vertices()[img.vertex_indices[0]] == ipt({0, 0}));

  // vertex (3,0) maps to vertex (2,0)
  const Face* v30 = nullptr;
  for (const auto& f : hex.faces())
    if (f.dim == 0 && hex.vertices()[f.vertex_indices[0]] == ipt({3, 0})) v30 = &f;
  REQUIRE(v30 != nullptr);
  const Face& img2 = phi(hex, quad, *v30);
  CHECK(img2.dim == 0);
  CHECK(quad.vertices()[img2.vertex_indices[0]] == ipt({2, 0}));
}

TEST_CASE("phi is the identity when P equals Q") {
  auto hex = sample_hexagon();
  for (const auto& f : hex.faces()) CHECK(phi(hex, hex, f) == f);
}

TEST_CASE("phi demands refinement") {
  auto hex = sample_hexagon();
  auto quad = sample_quad();
  CHECK_THROWS_AS(phi(quad, hex, quad.faces().front()), NotRefining);
}

TEST_CASE("edge hypothesis report") {
  auto sq = unit_cube(2);
  auto report = edge_hypothesis(scale(sq, 2), sq, Rational(2));
  CHECK(report.all_satisfied);
  CHECK(report.pairs.size() == 4);
  CHECK(report.collapsed_edges == 0);

  auto fail = edge_hypothesis(sample_hexagon(), sample_quad(), Rational(2));
  CHECK(!fail.all_satisfied);
  CHECK(fail.collapsed_edges > 0);  // the diagonal edges collapse to vertices
}

TEST_CASE("property: face/cone correspondence reverses inclusion") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    auto p = random_lattice_polytope(rng, 2 + trial % 2, 3, 6);
    auto fan = normal_fan(p);
    const auto& fs = p.faces();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = 0; j < fs.size(); ++j) {
        bool face_incl = std::includes(fs[j].vertex_indices.begin(),
                                       fs[j].vertex_indices.end(),
                                       fs[i].vertex_indices.begin(),
                                       fs[i].vertex_indices.end());
        auto gen_less = [](const IntVector& a, const IntVector& b) { return a < b; };
        auto gi = fan.cones[i].generators;
        auto gj = fan.cones[j].generators;
        std::sort(gi.begin(), gi.end(), gen_less);
        std::sort(gj.begin(), gj.end(), gen_less);
        bool cone_incl = std::includes(gi.begin(), gi.end(), gj.begin(), gj.end(), gen_less);
        CHECK(face_incl == cone_incl);
      }
    }
  }
}

TEST_CASE("property: every polytope refines its scalings") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 8; ++trial) {
    auto p = random_lattice_polytope(rng, 2, 3, 6);
    CHECK(refines(p, scale(p, Rational(5, 2))));
    CHECK(refines(p, p));
  }
}

TEST_CASE("property: phi preserves inclusions and inverts for equal fans") {
  auto hex = sample_hexagon();
  auto quad = sample_quad();
  const auto& fs = hex.faces();
  for (const auto& f1 : fs) {
    for (const auto& f2 : fs) {
      if (!std::includes(f2.vertex_indices.begin(), f2.vertex_indices.end(),
                         f1.vertex_indices.begin(), f1.vertex_indices.end()))
        continue;
      const Face& i1 = phi(hex, quad, f1);
      const Face& i2 = phi(hex, quad, f2);
      CHECK(std::includes(i2.vertex_indices.begin(), i2.vertex_indices.end(),
                          i1.vertex_indices.begin(), i1.vertex_indices.end()));
    }
  }

  auto rect = box({{Rational(0), Rational(1)}, {Rational(0), Rational(7, 10)}});
  auto sq = unit_cube(2);
  for (const auto& f : sq.faces()) CHECK(phi(rect, sq, phi(sq, rect, f)) == f);
}
