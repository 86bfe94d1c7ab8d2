#pragma once

#include <functional>
#include <random>
#include <string>

#include "polynorm/covering.hpp"
#include "polynorm/fan.hpp"

namespace polynorm {

class UnknownExample : public GeometryError {
 public:
  explicit UnknownExample(const std::string& name)
      : GeometryError("unknown example: " + name) {}
};

class GenerationBudgetExceeded : public GeometryError {
 public:
  GenerationBudgetExceeded()
      : GeometryError("could not generate a hypothesis-satisfying pair in budget") {}
};

struct ExampleResult {
  std::string name;
  bool passed = false;
  std::string detail;  // what was checked and what came out
};

struct ExampleCase {
  std::string name;
  std::string description;
  std::function<ExampleResult()> run;
};

/// Curated catalog of worked examples with pinned expected outcomes.
const std::vector<ExampleCase>& example_catalog();

ExampleResult run_example(const std::string& name);

/// 1-dimensional base case: is ([0,m], [0,q]) convex-normal? The hypothesis
/// q >= min(1, m) is reported, not enforced.
bool interval_base_case(const Rational& q, const Rational& m);

struct TrialFailure {
  unsigned seed;
  std::string instance;
  std::string discrepancy;
};

struct TrialReport {
  int trials = 0;
  std::vector<TrialFailure> failures;
  double elapsed_seconds = 0;
};

struct PairGenParams {
  int span = 3;          // vertex coordinate range of Q
  int points = 6;        // sample points per attempt
  bool zonotope = true;  // sometimes add a segment summand to P
  int max_attempts = 200;
};

/// Random rational pair (Q, P) provably satisfying the refinement and
/// edge-length hypotheses: P = d*Q (+ optional segment), verified with
/// refines and edge_hypothesis before returning.
std::pair<Polytope, Polytope> gen_theorem_pair(std::mt19937& rng, int d,
                                               const PairGenParams& params = {});

/// Every generated pair must be convex-normal and satisfy Q inside (1/d)P.
TrialReport harness_mainB(int trials, int d, unsigned seed);

/// Control run: pairs with a deliberately shrunk P (edge hypothesis broken);
/// records how many fail covering, which must be nonzero over a standard set.
TrialReport harness_mainB_controls(int trials, unsigned seed);

/// If P is 2-convex-normal, convex-normality must hold at every integer c up
/// to c_max.
TrialReport harness_main_lemma(const Polytope& p, int c_max);

/// If each (Q_i, P) is convex-normal, so is (Q_1 + ... + Q_s, P).
bool harness_sum_corollary(const std::vector<Polytope>& q_parts, const Polytope& p);

}  // namespace polynorm
