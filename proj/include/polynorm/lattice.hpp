#pragma once

#include <optional>
#include <set>
#include <string>

#include "polynorm/polytope.hpp"

namespace polynorm {

class BudgetExceeded : public GeometryError {
 public:
  explicit BudgetExceeded(const std::string& what) : GeometryError(what) {}
};

class NotLatticePolytope : public GeometryError {
 public:
  NotLatticePolytope() : GeometryError("operation requires a lattice polytope") {}
};

/// Deduplicated finite set of exact rational points, ordered
/// lexicographically.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const Point& p) const { return points_.count(p) > 0; }
  void insert(Point p);
  bool subset_of(const PointSet& other) const;

  // ref-qualified so iterating the points of a temporary set cannot compile
  const std::set<Point, PointLess>& points() const& { return points_; }
  const std::set<Point, PointLess>& points() const&& = delete;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  int dim_ = 0;
  std::set<Point, PointLess> points_;
};

/// Grid-scan candidate cap; refuses (BudgetExceeded) instead of truncating.
inline constexpr long kDefaultEnumerationBudget = 10'000'000;

/// Reads POLYNORM_ENUM_BUDGET from the environment, falling back to the
/// default cap.
long enumeration_budget();

/// All integer points of P, by an exact bounding-box scan.
PointSet lattice_points(const Polytope& p, long budget = enumeration_budget());

/// The union over vertices v of (v + Z^d) intersected with Q.
PointSet g_set(const Polytope& q, long budget = enumeration_budget());

PointSet sumset(const PointSet& a, const PointSet& b);

struct IdpVerdict {
  bool holds = false;
  std::optional<Point> witness;     // a lattice point with no decomposition
  std::string checked_range;
};

/// Pair IDP: every lattice point of Q+P splits as one of Q plus one of P.
IdpVerdict idp_pair(const Polytope& q, const Polytope& p, long budget = enumeration_budget());

/// Stepwise single-polytope IDP up to k_max; the verdict records the range
/// actually checked.
IdpVerdict idp_single(const Polytope& p, int k_max, long budget = enumeration_budget());

/// G(rP) + G(P) inside G((r+1)P); false only on an implementation bug.
bool lemmaA_holds(const Polytope& p, const Rational& r, long budget = enumeration_budget());

}  // namespace polynorm
