#include "doctest.h"
#include "helpers.hpp"
#include "polynorm/paperlab.hpp"

using namespace polynorm;
using namespace polynorm::testing;

TEST_CASE("every catalog example passes") {
  for (const auto& c : example_catalog()) {
    auto result = c.run();
    INFO(result.name, ": ", result.detail);
    CHECK(result.passed);
  }
}

TEST_CASE("running examples by name") {
  CHECK(run_example("gset-1.5-simplex").passed);
  CHECK_THROWS_AS(run_example("no-such-case"), UnknownExample);
}

TEST_CASE("interval base case across its branches") {
  CHECK(interval_base_case(Rational(5, 2), Rational(3, 2)));
  CHECK(interval_base_case(Rational(1), Rational(100)));  // long Q, q = 1
  CHECK(interval_base_case(Rational(1, 2), Rational(1, 3)));  // q >= m branch
  // hypothesis violated: q shorter than both 1 and m leaves a gap
  CHECK(!interval_base_case(Rational(1, 3), Rational(1, 2)));
}

TEST_CASE("generated pairs satisfy both hypotheses") {
  std::mt19937 rng(1);
  for (int d : {1, 2}) {
    for (int i = 0; i < 5; ++i) {
      auto [q, p] = gen_theorem_pair(rng, d);
      CHECK(refines(p, q));
      CHECK(edge_hypothesis(p, q, Rational(d)).all_satisfied);
    }
  }
  std::mt19937 rng2(2);
  auto [q, p] = gen_theorem_pair(rng2, 2);
  CHECK(q.dim() == 2);
}

TEST_CASE("zonotope summands can make the fan strictly finer") {
  bool strict = false;
  for (unsigned seed = 2; seed < 40 && !strict; ++seed) {
    std::mt19937 rng(seed);
    auto [q, p] = gen_theorem_pair(rng, 2);
    if (refines(p, q) && !refines(q, p)) strict = true;
  }
  CHECK(strict);
}

TEST_CASE("mainB harness: covered pairs, zero failures") {
  auto r1 = harness_mainB(15, 2, 7);
  CHECK(r1.trials == 15);
  CHECK(r1.failures.empty());

  auto r2 = harness_mainB(10, 1, 11);
  CHECK(r2.failures.empty());
}

TEST_CASE("mainB controls: violated hypotheses do produce uncovered pairs") {
  auto r = harness_mainB_controls(10, 5);
  CHECK(!r.failures.empty());
}

TEST_CASE("main lemma chain for known 2-convex-normal polytopes") {
  auto r = harness_main_lemma(unit_cube(2), 5);
  CHECK(r.trials == 3);  // c = 3, 4, 5
  CHECK(r.failures.empty());

  // 2 * (1.5 triangle) = 3 * triangle is a lattice polytope
  auto r2 = harness_main_lemma(scale(unit_simplex(2), 3), 5);
  CHECK(r2.failures.empty());

  // the plain triangle is excluded: it fails at c = 2
  auto r3 = harness_main_lemma(unit_simplex(2), 5);
  CHECK(r3.trials == 0);
  CHECK(!r3.failures.empty());
}

TEST_CASE("sum corollary harness") {
  auto sq = unit_cube(2);
  auto p = scale(sq, 3);
  CHECK(harness_sum_corollary({sq, sq}, p));
  CHECK(harness_sum_corollary({sq}, p));

  std::mt19937 rng(13);
  auto [q, pp] = gen_theorem_pair(rng, 2);
  CHECK(harness_sum_corollary({q, q}, pp));
}

TEST_CASE("generator failure is reported, not looped forever") {
  std::mt19937 rng(3);
  PairGenParams params;
  params.max_attempts = 0;
  CHECK_THROWS_AS(gen_theorem_pair(rng, 2, params), GenerationBudgetExceeded);
}
