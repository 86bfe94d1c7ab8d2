#include "polynorm/covering.hpp"

#include <algorithm>
#include <set>

namespace polynorm {

namespace {

template <typename F>
void for_each_subset(int n, int k, F&& f) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<ConvexCell> subtract_hs(const ConvexCell& cell,
                                    const std::vector<Halfspace>& u_facets) {
  // lower-dimensional overlap: nothing to remove
  {
    auto overlap = cell.halfspaces;
    overlap.insert(overlap.end(), u_facets.begin(), u_facets.end());
    if (!intersect_cell(overlap, cell.dim)) return {cell};
  }
  std::vector<ConvexCell> pieces;
  for (std::size_t i = 0; i < u_facets.size(); ++i) {
    auto hs = cell.halfspaces;
    hs.push_back(u_facets[i].flipped());
    for (std::size_t j = 0; j < i; ++j) hs.push_back(u_facets[j]);
    if (auto piece = intersect_cell(hs, cell.dim)) pieces.push_back(std::move(*piece));
  }
  return pieces;
}

bool cell_vertices_less(const ConvexCell& a, const ConvexCell& b) {
  PointLess less;
  for (std::size_t i = 0; i < a.vertices.size() && i < b.vertices.size(); ++i) {
    if (a.vertices[i] != b.vertices[i]) return less(a.vertices[i], b.vertices[i]);
  }
  return a.vertices.size() < b.vertices.size();
}

}  // namespace

Rational ConvexCell::volume() const { return Polytope::hull(vertices).volume(); }

bool ConvexCell::contains(const Point& x) const {
  for (const auto& h : halfspaces)
    if (!h.contains(x)) return false;
  return true;
}

Point ConvexCell::centroid() const {
  Point c(dim, Rational(0));
  for (const auto& v : vertices) c = add(c, v);
  return scale_point(c, Rational(1, static_cast<long>(vertices.size())));
}

std::optional<ConvexCell> intersect_cell(const std::vector<Halfspace>& halfspaces, int dim) {
  // feasible basic solutions; the intersection is bounded by construction
  // (every caller starts from a bounded cell)
  std::vector<Point> verts;
  const int m = static_cast<int>(halfspaces.size());
  for_each_subset(m, dim, [&](const std::vector<int>& idx) {
    std::vector<Point> a;
    Point b;
    for (int i : idx) {
      a.push_back(to_point(halfspaces[i].normal));
      b.push_back(halfspaces[i].offset);
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (!x) return;
    for (const auto& h : halfspaces)
      if (!h.contains(*x)) return;
    verts.push_back(std::move(*x));
  });
  if (verts.empty()) return std::nullopt;
  std::sort(verts.begin(), verts.end(), PointLess{});
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<Point> diffs;
  for (std::size_t i = 1; i < verts.size(); ++i) diffs.push_back(sub(verts[i], verts[0]));
  if (rank(diffs) < dim) return std::nullopt;
  auto canonical = Polytope::hull(verts);
  ConvexCell cell;
  cell.halfspaces = canonical.facets();
  cell.vertices = canonical.vertices();
  cell.dim = dim;
  return cell;
}

ConvexCell cell_of(const Polytope& p) {
  return ConvexCell{p.facets(), p.vertices(), p.dim()};
}

std::vector<ConvexCell> subtract(const ConvexCell& cell, const Polytope& u) {
  if (u.dim() != cell.dim) throw DimensionMismatch();
  return subtract_hs(cell, u.facets());
}

CoverVerdict is_covered(const Polytope& t,
                        std::vector<std::pair<Point, const Polytope*>> translates) {
  if (t.faces().back().dim != t.dim())
    throw NotFullDimensional();  // the open-complement argument needs full dimension
  std::sort(translates.begin(), translates.end(),
            [](const auto& a, const auto& b) { return PointLess{}(a.first, b.first); });

  std::vector<ConvexCell> cells = {cell_of(t)};
  std::vector<std::vector<Halfspace>> translated_facets;
  for (const auto& [base, shape] : translates) {
    auto facets = shape->facets();
    for (auto& h : facets) h.offset += dot(h.normal, base);
    translated_facets.push_back(std::move(facets));
  }
  for (const auto& facets : translated_facets) {
    std::vector<ConvexCell> next;
    for (const auto& cell : cells) {
      auto pieces = subtract_hs(cell, facets);
      next.insert(next.end(), std::make_move_iterator(pieces.begin()),
                  std::make_move_iterator(pieces.end()));
    }
    cells = std::move(next);
    if (cells.empty()) break;
  }

  CoverVerdict verdict;
  verdict.covered = cells.empty();
  if (!verdict.covered) {
    std::sort(cells.begin(), cells.end(), cell_vertices_less);
    verdict.witness = cells.front().centroid();
    verdict.residual_cells = std::move(cells);
    // witness soundness is checked on every call: interior to T, missed by
    // every translate
    const Point& w = *verdict.witness;
    if (!t.contains(w)) throw GeometryError("internal error: witness outside target");
    for (const auto& facets : translated_facets) {
      bool inside = true;
      for (const auto& h : facets)
        if (!h.contains(w)) {
          inside = false;
          break;
        }
      if (inside) throw GeometryError("internal error: witness covered by a translate");
    }
  }
  return verdict;
}

CoverVerdict is_covered(const Polytope& t, const PointSet& bases, const Polytope& shape) {
  std::vector<std::pair<Point, const Polytope*>> translates;
  for (const auto& b : bases.points()) translates.emplace_back(b, &shape);
  return is_covered(t, std::move(translates));
}

CoverVerdict convex_normal_at(const Polytope& p, const Rational& c, long budget) {
  if (c <= 1) throw GeometryError("convex-normality is defined for c > 1");
  auto target = scale(p, c);
  auto bases = g_set(scale(p, c - 1), budget);
  auto verdict = is_covered(target, bases, p);
  verdict.small_scale_warning = c < 2;
  return verdict;
}

CoverVerdict pair_convex_normal(const Polytope& q, const Polytope& p, long budget) {
  if (q.dim() != p.dim()) throw DimensionMismatch();
  return is_covered(minkowski_sum(q, p), g_set(q, budget), p);
}

KConvexNormalReport k_convex_normal(const Polytope& p, const Rational& k, int denom_bound,
                                    KCheckMode mode, long budget) {
  if (k < 2) throw GeometryError("k must be at least 2");
  if (denom_bound < 1) throw GeometryError("denominator bound must be at least 1");
  KConvexNormalReport report;
  report.mode = mode;

  if (mode == KCheckMode::grid) {
    std::set<Rational> grid;
    for (int q = 1; q <= denom_bound; ++q) {
      for (Integer pnum = rat_ceil(Rational(2 * q)); Rational(pnum, q) <= k; ++pnum)
        grid.insert(Rational(pnum, q));
    }
    for (const auto& c : grid) {
      auto v = convex_normal_at(p, c, budget);
      report.all_covered = report.all_covered && v.covered;
      report.entries.push_back({c, v.covered, false, v.witness});
    }
    report.checked_range = "grid c = p/q in [2," + format_rational(k) + "] with q <= " +
                           std::to_string(denom_bound) + " (finite verification only)";
    return report;
  }

  if (!p.is_lattice_polytope()) throw NotLatticePolytope();
  bool base_ok = true;
  for (int c = 2; c <= 3 && Rational(c) <= k; ++c) {
    auto v = convex_normal_at(p, Rational(c), budget);
    base_ok = base_ok && v.covered;
    report.entries.push_back({Rational(c), v.covered, false, v.witness});
  }
  for (Integer c = 4; Rational(c) <= k; ++c)
    report.entries.push_back({Rational(c), base_ok, true, std::nullopt});
  report.all_covered = base_ok;
  report.checked_range =
      "checked c = 2,3 directly; integer c > 3 follow by the 2-convex-normal induction step";
  return report;
}

}  // namespace polynorm
