#include "polynorm/paperlab.hpp"

#include <chrono>
#include <sstream>

namespace polynorm {

namespace {

Point pt2(long x, long y) { return Point{Rational(x), Rational(y)}; }

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += format_rational(p[i]);
  }
  return s + ")";
}

std::string vertices_str(const Polytope& p) {
  std::string s = "conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) s += ", ";
    s += point_str(p.vertices()[i]);
  }
  return s + "}";
}

Polytope triangle15() {
  return Polytope::hull({pt2(0, 0), Point{Rational(3, 2), Rational(0)},
                         Point{Rational(0), Rational(3, 2)}});
}

Polytope std_triangle() { return Polytope::hull({pt2(0, 0), pt2(1, 0), pt2(0, 1)}); }

Polytope unit_square() {
  return Polytope::hull({pt2(0, 0), pt2(1, 0), pt2(0, 1), pt2(1, 1)});
}

Polytope rect07() {
  return Polytope::hull({pt2(0, 0), pt2(1, 0), Point{Rational(0), Rational(7, 10)},
                         Point{Rational(1), Rational(7, 10)}});
}

ExampleResult check(const std::string& name, bool ok, const std::string& detail) {
  return ExampleResult{name, ok, detail};
}

ExampleResult run_gset_example() {
  PointSet expected(2);
  const char* coords[][2] = {{"0", "0"},   {"1", "0"},   {"0", "1"},
                             {"3/2", "0"}, {"1/2", "0"}, {"1/2", "1"},
                             {"0", "3/2"}, {"0", "1/2"}, {"1", "1/2"}};
  for (const auto& c : coords)
    expected.insert(Point{parse_rational(c[0]), parse_rational(c[1])});
  auto got = g_set(triangle15());
  std::ostringstream os;
  os << "G(1.5*triangle) has " << got.size() << " points (expected 9)";
  return check("gset-1.5-simplex", got == expected, os.str());
}

ExampleResult run_simplex_not_2cn() {
  auto v = convex_normal_at(std_triangle(), 2);
  bool ok = !v.covered && v.witness.has_value();
  std::string detail = ok ? "uncovered with witness " + point_str(*v.witness)
                          : "unexpectedly covered";
  return check("simplex-not-2cn", ok, detail);
}

ExampleResult run_15simplex_2cn() {
  auto v = convex_normal_at(triangle15(), 2);
  return check("1.5-simplex-2cn", v.covered,
               v.covered ? "2*Q covered by G(Q) translates" : "unexpectedly uncovered");
}

ExampleResult run_non_idp_simplex() {
  auto p3 = Polytope::hull({Point{Rational(0), Rational(0), Rational(0)},
                            Point{Rational(1), Rational(1), Rational(0)},
                            Point{Rational(1), Rational(0), Rational(1)},
                            Point{Rational(0), Rational(1), Rational(1)}});
  auto v = idp_single(p3, 2);
  bool ok = !v.holds && v.witness.has_value() &&
            *v.witness == Point{Rational(1), Rational(1), Rational(1)};
  return check("non-idp-simplex", ok,
               v.witness ? "witness " + point_str(*v.witness) : "no witness");
}

ExampleResult run_pair_asymmetry() {
  auto p = unit_square();
  auto q = rect07();
  auto qp = pair_convex_normal(q, p);
  auto pq = pair_convex_normal(p, q);
  bool ok = qp.covered && !pq.covered && pq.witness.has_value();
  std::string detail = "(Q,P) " + std::string(qp.covered ? "covered" : "uncovered") +
                       ", (P,Q) " + std::string(pq.covered ? "covered" : "uncovered");
  if (pq.witness) detail += " with witness " + point_str(*pq.witness);
  return check("pair-asymmetry", ok, detail);
}

ExampleResult run_counterexample_family() {
  auto q = Polytope::hull({pt2(0, 0), pt2(1, 2), pt2(0, 1)});
  auto p = Polytope::hull({pt2(0, 0), pt2(-3, 1), pt2(-2, 1)});
  auto idp = idp_pair(q, p);
  auto cover = pair_convex_normal(q, p);
  bool ok = !idp.holds && idp.witness.has_value() && !cover.covered &&
            cover.witness.has_value();
  std::string detail;
  if (idp.witness) detail += "IDP witness " + point_str(*idp.witness);
  if (cover.witness) detail += ", cover witness " + point_str(*cover.witness);
  return check("counterexample-family", ok, detail);
}

ExampleResult run_phi_hexagon() {
  auto hex = Polytope::hull(
      {pt2(0, 0), pt2(3, 0), pt2(3, -2), pt2(2, -3), pt2(-1, -3), pt2(-1, -1)});
  auto quad = Polytope::hull({pt2(0, 0), pt2(2, 0), pt2(2, -2), pt2(0, -2)});
  if (!refines(hex, quad)) return check("phi-hexagon", false, "refinement does not hold");
  const Face* e = nullptr;
  for (const auto& f : hex.faces()) {
    if (f.dim != 1) continue;
    const auto& a = hex.vertices()[f.vertex_indices[0]];
    const auto& b = hex.vertices()[f.vertex_indices[1]];
    if ((a == pt2(-1, -1) && b == pt2(0, 0)) || (b == pt2(-1, -1) && a == pt2(0, 0))) e = &f;
  }
  if (!e) return check("phi-hexagon", false, "edge (-1,-1)-(0,0) not found");
  const Face& img = phi(hex, quad, *e);
  bool ok = img.dim == 0 && quad.vertices()[img.vertex_indices[0]] == pt2(0, 0);
  // the full table must preserve inclusions
  for (const auto& f1 : hex.faces()) {
    for (const auto& f2 : hex.faces()) {
      if (!std::includes(f2.vertex_indices.begin(), f2.vertex_indices.end(),
                         f1.vertex_indices.begin(), f1.vertex_indices.end()))
        continue;
      const Face& i1 = phi(hex, quad, f1);
      const Face& i2 = phi(hex, quad, f2);
      if (!std::includes(i2.vertex_indices.begin(), i2.vertex_indices.end(),
                         i1.vertex_indices.begin(), i1.vertex_indices.end()))
        ok = false;
    }
  }
  return check("phi-hexagon", ok, "Phi(e) = vertex (0,0), table inclusion-preserving");
}

ExampleResult run_minkowski_example() {
  auto sum = minkowski_sum(unit_square(), rect07());
  auto expected = Polytope::hull({pt2(0, 0), pt2(2, 0), Point{Rational(0), Rational(17, 10)},
                                  Point{Rational(2), Rational(17, 10)}});
  return check("minkowski-p-plus-q", sum == expected, "P+Q = [0,2] x [0,17/10]");
}

ExampleResult run_interval_base_case() {
  bool ok = interval_base_case(Rational(5, 2), Rational(3, 2)) &&
            interval_base_case(Rational(1), Rational(100)) &&
            interval_base_case(Rational(1, 2), Rational(1, 3));
  return check("interval-base-case", ok, "three hypothesis-satisfying interval pairs covered");
}

ExampleResult run_pair_idp_without_cn() {
  // (triangle, triangle) has the pair IDP yet is not convex-normal
  auto t = std_triangle();
  bool ok = idp_pair(t, t).holds && !pair_convex_normal(t, t).covered;
  return check("pair-idp-without-cn", ok, "pair IDP holds, pair covering fails");
}

}  // namespace

const std::vector<ExampleCase>& example_catalog() {
  static const std::vector<ExampleCase> catalog = {
      {"gset-1.5-simplex", "G-set of conv{(0,0),(3/2,0),(0,3/2)}", run_gset_example},
      {"1.5-simplex-2cn", "1.5*triangle is 2-convex-normal", run_15simplex_2cn},
      {"simplex-not-2cn", "the standard triangle is not convex-normal", run_simplex_not_2cn},
      {"non-idp-simplex", "3d simplex missing (1,1,1) in 2P", run_non_idp_simplex},
      {"pair-asymmetry", "square / 0.7-rectangle pair covers one way only",
       run_pair_asymmetry},
      {"counterexample-family", "pair with incompatible fans at n=1,k=2,l=3",
       run_counterexample_family},
      {"phi-hexagon", "face map from the hexagon to the quadrilateral", run_phi_hexagon},
      {"minkowski-p-plus-q", "Minkowski sum of the asymmetry pair", run_minkowski_example},
      {"interval-base-case", "1-dimensional covering base case", run_interval_base_case},
      {"pair-idp-without-cn", "pair IDP does not imply pair convex-normality",
       run_pair_idp_without_cn},
  };
  return catalog;
}

ExampleResult run_example(const std::string& name) {
  for (const auto& c : example_catalog())
    if (c.name == name) return c.run();
  throw UnknownExample(name);
}

bool interval_base_case(const Rational& q, const Rational& m) {
  auto p_int = Polytope::hull({Point{Rational(0)}, Point{q}});
  auto q_int = Polytope::hull({Point{Rational(0)}, Point{m}});
  return pair_convex_normal(q_int, p_int).covered;
}

std::pair<Polytope, Polytope> gen_theorem_pair(std::mt19937& rng, int d,
                                               const PairGenParams& params) {
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    try {
      Polytope q = [&] {
        if (d == 1) {
          std::uniform_int_distribution<int> numdist(1, 4 * params.span);
          return Polytope::hull({Point{Rational(0)}, Point{Rational(numdist(rng), 4)}});
        }
        std::uniform_int_distribution<int> coord(0, params.span);
        std::vector<Point> pts;
        for (int i = 0; i < params.points; ++i) {
          Point p(d);
          for (int j = 0; j < d; ++j) p[j] = Rational(coord(rng));
          pts.push_back(std::move(p));
        }
        return Polytope::hull(pts);
      }();

      if (q.vertices().size() < static_cast<std::size_t>(d + 1)) continue;
      Polytope p = scale(q, Rational(d));
      if (d == 1) {
        // stretch P a little so the pair is not always the trivial d*Q
        std::uniform_int_distribution<int> extra(0, 4);
        p = scale(p, Rational(4 + extra(rng), 4));
      }
      if (params.zonotope && d >= 2 && std::uniform_int_distribution<int>(0, 1)(rng)) {
        std::uniform_int_distribution<int> g(-2, 2);
        IntVector seg(d);
        bool nonzero = false;
        for (auto& c : seg) {
          c = g(rng);
          if (c != 0) nonzero = true;
        }
        if (nonzero) {
          std::vector<Point> pts;
          for (const auto& v : p.vertices()) {
            pts.push_back(v);
            pts.push_back(add(v, to_point(seg)));
          }
          p = Polytope::hull(pts);
        }
      }
      if (refines(p, q) && edge_hypothesis(p, q, Rational(d)).all_satisfied)
        return {std::move(q), std::move(p)};
    } catch (const NotFullDimensional&) {
    }
  }
  throw GenerationBudgetExceeded();
}

TrialReport harness_mainB(int trials, int d, unsigned seed) {
  TrialReport report;
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < trials; ++i) {
    unsigned trial_seed = seed + static_cast<unsigned>(i);
    std::mt19937 rng(trial_seed);
    auto [q, p] = gen_theorem_pair(rng, d);
    ++report.trials;
    auto verdict = pair_convex_normal(q, p);
    std::string instance = "Q=" + vertices_str(q) + " P=" + vertices_str(p);
    if (!verdict.covered) {
      report.failures.push_back({trial_seed, instance,
                                 "pair not covered, witness " + point_str(*verdict.witness)});
      continue;
    }
    if (!polytope_contained(q, scale(p, Rational(1, d))))
      report.failures.push_back({trial_seed, instance, "Q not contained in (1/d)P"});
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

TrialReport harness_mainB_controls(int trials, unsigned seed) {
  TrialReport report;
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < trials; ++i) {
    unsigned trial_seed = seed + static_cast<unsigned>(i);
    std::mt19937 rng(trial_seed);
    auto [q, p] = gen_theorem_pair(rng, 2);
    ++report.trials;
    // shrink P so every edge pair violates the length hypothesis
    auto shrunk = scale(p, Rational(1, 4));
    auto verdict = pair_convex_normal(q, shrunk);
    if (!verdict.covered)
      report.failures.push_back(
          {trial_seed, "Q=" + vertices_str(q) + " P=" + vertices_str(shrunk),
           "control pair uncovered (expected for violated hypotheses)"});
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

TrialReport harness_main_lemma(const Polytope& p, int c_max) {
  TrialReport report;
  auto t0 = std::chrono::steady_clock::now();
  auto base = convex_normal_at(p, 2);
  if (!base.covered) {
    report.failures.push_back({0, vertices_str(p), "not 2-convex-normal: hypothesis unmet"});
    return report;
  }
  for (int c = 3; c <= c_max; ++c) {
    ++report.trials;
    auto v = convex_normal_at(p, Rational(c));
    if (!v.covered)
      report.failures.push_back(
          {0, vertices_str(p), "uncovered at c = " + std::to_string(c)});
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

bool harness_sum_corollary(const std::vector<Polytope>& q_parts, const Polytope& p) {
  Polytope sum = q_parts.front();
  for (std::size_t i = 1; i < q_parts.size(); ++i) sum = minkowski_sum(sum, q_parts[i]);
  for (const auto& part : q_parts) {
    if (!part.is_lattice_polytope()) throw NotLatticePolytope();
    if (!pair_convex_normal(part, p).covered) return true;  // hypothesis unmet, vacuous
  }
  return pair_convex_normal(sum, p).covered;
}

}  // namespace polynorm
