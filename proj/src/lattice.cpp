#include "polynorm/lattice.hpp"

#include <cstdlib>

namespace polynorm {

void PointSet::insert(Point p) {
  if (dim_ == 0 && points_.empty()) dim_ = static_cast<int>(p.size());
  if (static_cast<int>(p.size()) != dim_) throw DimensionMismatch();
  points_.insert(std::move(p));
}

bool PointSet::subset_of(const PointSet& other) const {
  for (const auto& p : points_)
    if (!other.contains(p)) return false;
  return true;
}

long enumeration_budget() {
  if (const char* env = std::getenv("POLYNORM_ENUM_BUDGET")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return kDefaultEnumerationBudget;
}

PointSet lattice_points(const Polytope& p, long budget) {
  const int d = p.dim();
  std::vector<Integer> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = rat_ceil(mn);
    hi[i] = rat_floor(mx);
  }
  Integer count = 1;
  for (int i = 0; i < d; ++i) {
    Integer range = hi[i] - lo[i] + 1;
    if (range <= 0) return PointSet(d);
    count *= range;
  }
  if (count > budget)
    throw BudgetExceeded("lattice scan of " + count.str() + " candidates exceeds budget " +
                         std::to_string(budget));

  PointSet result(d);
  std::vector<Integer> x = lo;
  while (true) {
    Point cand(d);
    for (int i = 0; i < d; ++i) cand[i] = Rational(x[i]);
    if (p.contains(cand)) result.insert(std::move(cand));
    int i = d - 1;
    while (i >= 0 && x[i] == hi[i]) {
      x[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
  return result;
}

PointSet g_set(const Polytope& q, long budget) {
  PointSet result(q.dim());
  for (const auto& v : q.vertices()) {
    Point neg = scale_point(v, Rational(-1));
    auto shifted = lattice_points(translate(q, neg), budget);
    for (const auto& z : shifted.points()) result.insert(add(z, v));
  }
  return result;
}

PointSet sumset(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim() && !a.empty() && !b.empty()) throw DimensionMismatch();
  PointSet result(a.dim());
  for (const auto& x : a.points())
    for (const auto& y : b.points()) result.insert(add(x, y));
  return result;
}

namespace {

// z = x + y with x in a, y in b? Searching beats materializing the whole
// sumset, whose size is quadratic.
bool decomposes(const Point& z, const PointSet& a, const PointSet& b) {
  for (const auto& x : a.points())
    if (b.contains(sub(z, x))) return true;
  return false;
}

}  // namespace

IdpVerdict idp_pair(const Polytope& q, const Polytope& p, long budget) {
  if (!q.is_lattice_polytope() || !p.is_lattice_polytope()) throw NotLatticePolytope();
  auto target = lattice_points(minkowski_sum(q, p), budget);
  auto from_q = lattice_points(q, budget);
  auto from_p = lattice_points(p, budget);
  IdpVerdict v;
  v.checked_range = "pair (Q,P)";
  v.holds = true;
  for (const auto& z : target.points()) {
    if (!decomposes(z, from_q, from_p)) {
      v.holds = false;
      v.witness = z;
      break;
    }
  }
  return v;
}

IdpVerdict idp_single(const Polytope& p, int k_max, long budget) {
  if (!p.is_lattice_polytope()) throw NotLatticePolytope();
  if (k_max < 2) throw GeometryError("k_max must be at least 2");
  IdpVerdict v;
  v.checked_range = "stepwise k = 2.." + std::to_string(k_max);
  v.holds = true;
  auto base = lattice_points(p, budget);
  auto current = base;  // lattice points of jP
  for (int j = 1; j < k_max; ++j) {
    auto target = lattice_points(scale(p, j + 1), budget);
    for (const auto& z : target.points()) {
      if (!decomposes(z, current, base)) {
        v.holds = false;
        v.witness = z;
        v.checked_range = "failed at step " + std::to_string(j + 1) + "P";
        return v;
      }
    }
    current = std::move(target);
  }
  return v;
}

bool lemmaA_holds(const Polytope& p, const Rational& r, long budget) {
  if (!p.is_lattice_polytope()) throw NotLatticePolytope();
  if (r <= 0) throw GeometryError("r must be positive");
  auto lhs = sumset(g_set(scale(p, r), budget), g_set(p, budget));
  auto rhs = g_set(scale(p, r + 1), budget);
  return lhs.subset_of(rhs);
}

}  // namespace polynorm
