#pragma once

#include <stdexcept>
#include <vector>

#include "polynorm/linalg.hpp"

namespace polynorm {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInput : public GeometryError {
 public:
  EmptyInput() : GeometryError("empty input") {}
};
class NotFullDimensional : public GeometryError {
 public:
  NotFullDimensional() : GeometryError("polytope is not full-dimensional") {}
};
class Unbounded : public GeometryError {
 public:
  Unbounded() : GeometryError("halfspace intersection is unbounded") {}
};
class EmptyIntersection : public GeometryError {
 public:
  EmptyIntersection() : GeometryError("halfspace intersection is empty") {}
};
class DimensionMismatch : public GeometryError {
 public:
  DimensionMismatch() : GeometryError("ambient dimension mismatch") {}
};
class NonPositiveScale : public GeometryError {
 public:
  NonPositiveScale() : GeometryError("scale factor must be positive") {}
};
class NotAVertex : public GeometryError {
 public:
  NotAVertex() : GeometryError("point is not a vertex of the polytope") {}
};

/// Closed halfspace { x : normal . x <= offset } with a primitive integer
/// normal, so each supporting halfspace has exactly one representation.
struct Halfspace {
  IntVector normal;
  Rational offset;

  bool contains(const Point& x) const { return dot(normal, x) <= offset; }
  bool on_boundary(const Point& x) const { return dot(normal, x) == offset; }
  Halfspace flipped() const;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

bool halfspace_less(const Halfspace& a, const Halfspace& b);

/// A face identified by the sorted indices of the parent's vertices it
/// contains. dim is the affine dimension of those vertices.
struct Face {
  std::vector<int> vertex_indices;
  int dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

struct Edge {
  Point v, w;            // endpoints
  IntVector direction;   // primitive integer vector on the line
  Rational length;       // lattice length: w - v = +-length * direction
};

/// Canonical dual description of a full-dimensional polytope in R^d:
/// lexicographically sorted vertices, irredundant facets with primitive
/// normals, and the facet/vertex incidence. Immutable after construction.
class Polytope {
 public:
  /// Convex hull of rational points. Throws EmptyInput or
  /// NotFullDimensional.
  static Polytope hull(const std::vector<Point>& points);

  /// Vertex description of a bounded full-dimensional halfspace
  /// intersection. Throws Unbounded, EmptyIntersection, NotFullDimensional.
  static Polytope from_halfspaces(const std::vector<Halfspace>& halfspaces);

  int dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  /// Per-facet sorted vertex index sets.
  const std::vector<std::vector<int>>& incidence() const { return incidence_; }

  bool contains(const Point& x) const;
  bool is_lattice_polytope() const;

  /// All nonempty faces ordered by (dimension, vertex index set); the last
  /// face is the polytope itself.
  const std::vector<Face>& faces() const;
  std::vector<Edge> edges() const;

  /// The face whose vertex set is exactly `vertex_indices`, if any.
  const Face* find_face(const std::vector<int>& sorted_vertex_indices) const;

  Rational volume() const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  Polytope() = default;
  static Polytope from_vertex_set(std::vector<Point> verts);

  int dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<int>> incidence_;
  mutable std::vector<Face> faces_;  // computed lazily, then cached
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope scale(const Polytope& p, const Rational& c);
Polytope translate(const Polytope& p, const Point& t);

/// True iff every point of a is in b (vertex check against b's facets).
bool polytope_contained(const Polytope& a, const Polytope& b);

Edge make_edge(const Point& v, const Point& w);
Rational lattice_length(const Edge& e);

}  // namespace polynorm
