#pragma once

#include <optional>
#include <utility>

#include "polynorm/lattice.hpp"
#include "polynorm/polytope.hpp"

namespace polynorm {

/// Bounded full-dimensional convex region, kept canonical (irredundant
/// halfspaces plus its vertex set).
struct ConvexCell {
  std::vector<Halfspace> halfspaces;
  std::vector<Point> vertices;  // lexicographically sorted
  int dim = 0;

  Rational volume() const;
  bool contains(const Point& x) const;
  /// Average of the vertices; always interior for a full-dimensional cell.
  Point centroid() const;
};

/// Canonical full-dimensional cell of a halfspace intersection, or nullopt
/// when the intersection is empty or lower-dimensional.
std::optional<ConvexCell> intersect_cell(const std::vector<Halfspace>& halfspaces, int dim);

ConvexCell cell_of(const Polytope& p);

/// Closure of cell minus U as cells with pairwise disjoint interiors.
/// Facet-by-facet splitting; lower-dimensional pieces are dropped, and a
/// lower-dimensional overlap returns the cell unchanged.
std::vector<ConvexCell> subtract(const ConvexCell& cell, const Polytope& u);

struct CoverVerdict {
  bool covered = false;
  std::optional<Point> witness;          // interior point missed by every translate
  std::vector<ConvexCell> residual_cells;
  bool small_scale_warning = false;      // set by convex_normal_at for c in (1,2)
};

/// Is T contained in the union of base + shape over all translates?
/// Translates are processed in lexicographic base-point order, so the
/// residual cell list is deterministic.
CoverVerdict is_covered(const Polytope& t,
                        std::vector<std::pair<Point, const Polytope*>> translates);
CoverVerdict is_covered(const Polytope& t, const PointSet& bases, const Polytope& shape);

/// Does G((c-1)P) + P cover cP?
CoverVerdict convex_normal_at(const Polytope& p, const Rational& c,
                              long budget = enumeration_budget());

/// Does G(Q) + P cover Q + P?
CoverVerdict pair_convex_normal(const Polytope& q, const Polytope& p,
                                long budget = enumeration_budget());

enum class KCheckMode { grid, integer_steps };

struct KConvexNormalEntry {
  Rational c;
  bool covered = false;
  bool by_induction = false;  // cited from the c=2,3 checks, not re-verified
  std::optional<Point> witness;
};

struct KConvexNormalReport {
  KCheckMode mode = KCheckMode::grid;
  std::vector<KConvexNormalEntry> entries;
  bool all_covered = true;
  /// Honest statement of what was verified (grid granularity or the
  /// inductive chain).
  std::string checked_range;
};

KConvexNormalReport k_convex_normal(const Polytope& p, const Rational& k, int denom_bound,
                                    KCheckMode mode, long budget = enumeration_budget());

}  // namespace polynorm
