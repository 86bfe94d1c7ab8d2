#pragma once

#include <optional>
#include <vector>

#include "polynorm/rational.hpp"

namespace polynorm {

/// A point (or vector) in R^d with exact rational coordinates.
using Point = std::vector<Rational>;
using IntVector = std::vector<Integer>;

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale_point(const Point& p, const Rational& c);
Rational dot(const Point& a, const Point& b);
Rational dot(const IntVector& a, const Point& b);
Integer dot(const IntVector& a, const IntVector& b);

bool is_integer_point(const Point& p);
Point to_point(const IntVector& v);

/// Clears denominators and divides by the gcd; the sign of the first nonzero
/// entry is preserved. Input must be nonzero.
IntVector primitive_vector(const Point& v);

/// Rank of the matrix whose rows are the given vectors (Gaussian elimination
/// over the rationals).
int rank(std::vector<Point> rows);

/// Solves the square system A x = b exactly. Returns nullopt when A is
/// singular.
std::optional<Point> solve_square(std::vector<Point> a, Point b);

/// A basis of the kernel of the matrix with the given rows.
std::vector<Point> kernel(std::vector<Point> rows, int cols);

/// Determinant of a square matrix.
Rational determinant(std::vector<Point> a);

struct PointLess {
  bool operator()(const Point& a, const Point& b) const;
};

}  // namespace polynorm
