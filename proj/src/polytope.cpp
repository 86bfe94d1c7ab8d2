#include "polynorm/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace polynorm {

namespace {

// Calls f with every k-subset of {0,...,n-1} as a vector of indices.
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

bool int_vec_less(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

void check_same_dim(const std::vector<Point>& points) {
  for (const auto& p : points)
    if (p.size() != points.front().size()) throw DimensionMismatch();
}

// Feasibility of a . x <= b by Fourier-Motzkin elimination.
bool fm_feasible(std::vector<std::pair<Point, Rational>> rows, int d) {
  for (int var = d - 1; var >= 0; --var) {
    std::vector<std::pair<Point, Rational>> next;
    std::vector<std::pair<Point, Rational>> pos, neg;
    for (auto& [a, b] : rows) {
      if (a[var] == 0)
        next.emplace_back(a, b);
      else if (a[var] > 0)
        pos.emplace_back(a, b);
      else
        neg.emplace_back(a, b);
    }
    for (const auto& [ap, bp] : pos) {
      for (const auto& [an, bn] : neg) {
        // ap[var] * (an-row) - an[var] * (ap-row) eliminates var
        Point a(var, Rational(0));
        for (int j = 0; j < var; ++j) a[j] = ap[var] * an[j] - an[var] * ap[j];
        next.emplace_back(std::move(a), ap[var] * bn - an[var] * bp);
      }
    }
    for (auto& [a, b] : next) a.resize(var);
    rows = std::move(next);
  }
  for (const auto& [a, b] : rows)
    if (b < 0) return false;
  return true;
}

// The recession cone { y : a . y <= 0 for every normal a } is nontrivial iff
// the normals have rank < d or some (d-1)-subset's kernel ray is feasible.
bool has_recession_direction(const std::vector<Halfspace>& hs, int d) {
  std::vector<Point> normals;
  for (const auto& h : hs) normals.push_back(to_point(h.normal));
  if (rank(normals) < d) return true;
  bool found = false;
  for_each_subset(static_cast<int>(hs.size()), d - 1, [&](const std::vector<int>& idx) {
    if (found) return;
    std::vector<Point> rows;
    for (int i : idx) rows.push_back(normals[i]);
    auto ker = kernel(rows, d);
    if (ker.size() != 1) return;
    for (const Point& y : {ker[0], scale_point(ker[0], Rational(-1))}) {
      bool ok = true;
      for (const auto& n : normals)
        if (dot(n, y) > 0) {
          ok = false;
          break;
        }
      if (ok) found = true;
    }
  });
  return found;
}

}  // namespace

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return int_vec_less(a.normal, b.normal);
  return a.offset < b.offset;
}

Halfspace Halfspace::flipped() const {
  IntVector n(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) n[i] = -normal[i];
  return Halfspace{std::move(n), -offset};
}

Polytope Polytope::hull(const std::vector<Point>& points) {
  if (points.empty()) throw EmptyInput();
  check_same_dim(points);
  const int d = static_cast<int>(points.front().size());
  if (d == 0) throw NotFullDimensional();

  std::vector<Point> pts = points;
  std::sort(pts.begin(), pts.end(), PointLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());

  if (n == 1) {
    // Single points are allowed as degenerate polytopes (translation
    // summands, trivial pair partners); other lower-dimensional hulls are
    // rejected.
    Polytope pointpoly;
    pointpoly.dim_ = d;
    pointpoly.vertices_ = pts;
    for (int i = 0; i < d; ++i) {
      IntVector e(d, Integer(0));
      e[i] = 1;
      pointpoly.facets_.push_back(Halfspace{e, pts[0][i]});
      e[i] = -1;
      pointpoly.facets_.push_back(Halfspace{e, -pts[0][i]});
    }
    std::sort(pointpoly.facets_.begin(), pointpoly.facets_.end(), halfspace_less);
    pointpoly.incidence_.assign(pointpoly.facets_.size(), {0});
    return pointpoly;
  }

  {
    std::vector<Point> diffs;
    for (int i = 1; i < n; ++i) diffs.push_back(sub(pts[i], pts[0]));
    if (rank(diffs) < d) throw NotFullDimensional();
  }

  // Every facet hyperplane is spanned by d affinely independent vertices, so
  // scanning all d-subsets finds them all.
  std::set<std::pair<IntVector, Rational>> facet_set;
  for_each_subset(n, d, [&](const std::vector<int>& idx) {
    std::vector<Point> diffs;
    for (int i = 1; i < d; ++i) diffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
    auto ker = kernel(diffs, d);
    if (ker.size() != 1) return;  // affinely dependent subset
    IntVector normal = primitive_vector(ker[0]);
    Rational offset = dot(normal, pts[idx[0]]);
    bool any_above = false, any_below = false;
    for (const auto& p : pts) {
      Rational v = dot(normal, p);
      if (v > offset) any_above = true;
      if (v < offset) any_below = true;
    }
    if (any_above && any_below) return;  // not a supporting hyperplane
    if (any_above) {
      for (auto& c : normal) c = -c;
      offset = -offset;
    }
    facet_set.emplace(std::move(normal), offset);
  });

  Polytope poly;
  poly.dim_ = d;
  for (auto& [nrm, off] : facet_set) poly.facets_.push_back(Halfspace{nrm, off});
  std::sort(poly.facets_.begin(), poly.facets_.end(), halfspace_less);

  // A point is a vertex exactly when its active facet normals span R^d.
  for (const auto& p : pts) {
    std::vector<Point> active;
    for (const auto& f : poly.facets_)
      if (f.on_boundary(p)) active.push_back(to_point(f.normal));
    if (static_cast<int>(active.size()) >= d && rank(active) == d)
      poly.vertices_.push_back(p);
  }
  // already lexicographically sorted via pts

  poly.incidence_.resize(poly.facets_.size());
  for (std::size_t fi = 0; fi < poly.facets_.size(); ++fi) {
    for (int vi = 0; vi < static_cast<int>(poly.vertices_.size()); ++vi)
      if (poly.facets_[fi].on_boundary(poly.vertices_[vi]))
        poly.incidence_[fi].push_back(vi);
  }
  return poly;
}

Polytope Polytope::from_halfspaces(const std::vector<Halfspace>& halfspaces) {
  if (halfspaces.empty()) throw Unbounded();
  const int d = static_cast<int>(halfspaces.front().normal.size());
  for (const auto& h : halfspaces)
    if (static_cast<int>(h.normal.size()) != d) throw DimensionMismatch();

  std::vector<std::pair<Point, Rational>> rows;
  for (const auto& h : halfspaces) rows.emplace_back(to_point(h.normal), h.offset);
  if (!fm_feasible(rows, d)) throw EmptyIntersection();
  if (has_recession_direction(halfspaces, d)) throw Unbounded();

  // Bounded: the vertices are the feasible basic solutions.
  std::vector<Point> verts;
  const int m = static_cast<int>(halfspaces.size());
  for_each_subset(m, d, [&](const std::vector<int>& idx) {
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
  if (verts.empty()) throw EmptyIntersection();
  return hull(verts);  // throws NotFullDimensional for degenerate input
}

bool Polytope::contains(const Point& x) const {
  if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch();
  for (const auto& f : facets_)
    if (!f.contains(x)) return false;
  return true;
}

bool Polytope::is_lattice_polytope() const {
  for (const auto& v : vertices_)
    if (!is_integer_point(v)) return false;
  return true;
}

const std::vector<Face>& Polytope::faces() const {
  if (!faces_.empty()) return faces_;

  const int nv = static_cast<int>(vertices_.size());
  // closure(S) = vertices lying on every facet that contains all of S;
  // with no such facet the closure is the whole polytope.
  auto closure = [&](const std::vector<int>& s) {
    std::vector<int> result;
    bool first = true;
    for (const auto& inc : incidence_) {
      if (!std::includes(inc.begin(), inc.end(), s.begin(), s.end())) continue;
      if (first) {
        result = inc;
        first = false;
      } else {
        std::vector<int> tmp;
        std::set_intersection(result.begin(), result.end(), inc.begin(), inc.end(),
                              std::back_inserter(tmp));
        result = std::move(tmp);
      }
    }
    if (first) {
      result.resize(nv);
      for (int i = 0; i < nv; ++i) result[i] = i;
    }
    return result;
  };

  // All faces arise as joins of vertex sets, so saturate under pairwise join.
  std::set<std::vector<int>> closed;
  for (int i = 0; i < nv; ++i) closed.insert({i});
  {
    std::vector<int> all(nv);
    for (int i = 0; i < nv; ++i) all[i] = i;
    closed.insert(all);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> current(closed.begin(), closed.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<int> u;
        std::set_union(current[i].begin(), current[i].end(), current[j].begin(),
                       current[j].end(), std::back_inserter(u));
        auto c = closure(u);
        if (closed.insert(c).second) changed = true;
      }
    }
  }

  for (const auto& s : closed) {
    Face f;
    f.vertex_indices = s;
    std::vector<Point> diffs;
    for (std::size_t i = 1; i < s.size(); ++i)
      diffs.push_back(sub(vertices_[s[i]], vertices_[s[0]]));
    f.dim = rank(diffs);
    faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_indices < b.vertex_indices;
  });
  return faces_;
}

std::vector<Edge> Polytope::edges() const {
  std::vector<Edge> result;
  for (const auto& f : faces()) {
    if (f.dim != 1) continue;
    assert(f.vertex_indices.size() == 2);
    result.push_back(make_edge(vertices_[f.vertex_indices[0]], vertices_[f.vertex_indices[1]]));
  }
  return result;
}

const Face* Polytope::find_face(const std::vector<int>& sorted_vertex_indices) const {
  for (const auto& f : faces())
    if (f.vertex_indices == sorted_vertex_indices) return &f;
  return nullptr;
}

Rational Polytope::volume() const {
  const auto& fs = faces();
  if (fs.back().dim < dim_) return 0;  // single point
  // simplices of each face, built by coning the first vertex over the
  // subfaces avoiding it
  std::map<const Face*, std::vector<std::vector<int>>> memo;
  auto triangulate = [&](auto&& self, const Face& face) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(&face);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> simplices;
    if (face.dim == 0) {
      simplices.push_back(face.vertex_indices);
    } else {
      int apex = face.vertex_indices.front();
      for (const auto& g : fs) {
        if (g.dim != face.dim - 1) continue;
        if (!std::includes(face.vertex_indices.begin(), face.vertex_indices.end(),
                           g.vertex_indices.begin(), g.vertex_indices.end()))
          continue;
        if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(), apex)) continue;
        for (const auto& s : self(self, g)) {
          auto t = s;
          t.push_back(apex);
          simplices.push_back(std::move(t));
        }
      }
    }
    return memo.emplace(&face, std::move(simplices)).first->second;
  };

  Rational vol = 0;
  Integer dfact = 1;
  for (int i = 2; i <= dim_; ++i) dfact *= i;
  for (const auto& s : triangulate(triangulate, fs.back())) {
    std::vector<Point> m;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      m.push_back(sub(vertices_[s[i]], vertices_[s.back()]));
    vol += rat_abs(determinant(std::move(m)));
  }
  return vol / dfact;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch();
  std::vector<Point> sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return Polytope::hull(sums);
}

Polytope scale(const Polytope& p, const Rational& c) {
  if (c <= 0) throw NonPositiveScale();
  std::vector<Point> verts;
  for (const auto& v : p.vertices()) verts.push_back(scale_point(v, c));
  return Polytope::hull(verts);
}

Polytope translate(const Polytope& p, const Point& t) {
  if (static_cast<int>(t.size()) != p.dim()) throw DimensionMismatch();
  std::vector<Point> verts;
  for (const auto& v : p.vertices()) verts.push_back(add(v, t));
  return Polytope::hull(verts);
}

bool polytope_contained(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch();
  for (const auto& v : a.vertices())
    if (!b.contains(v)) return false;
  return true;
}

Edge make_edge(const Point& v, const Point& w) {
  Edge e;
  e.v = v;
  e.w = w;
  Point diff = sub(w, v);
  e.direction = primitive_vector(diff);
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (e.direction[i] != 0) {
      e.length = rat_abs(diff[i] / Rational(e.direction[i]));
      break;
    }
  }
  return e;
}

Rational lattice_length(const Edge& e) { return e.length; }

}  // namespace polynorm
