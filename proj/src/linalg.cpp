#include "polynorm/linalg.hpp"

#include <cassert>
#include <numeric>

namespace polynorm {

Point add(const Point& a, const Point& b) {
  assert(a.size() == b.size());
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  assert(a.size() == b.size());
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scale_point(const Point& p, const Rational& c) {
  Point r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] * c;
  return r;
}

Rational dot(const Point& a, const Point& b) {
  assert(a.size() == b.size());
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Rational dot(const IntVector& a, const Point& b) {
  assert(a.size() == b.size());
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += Rational(a[i]) * b[i];
  return r;
}

Integer dot(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  Integer r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

bool is_integer_point(const Point& p) {
  for (const auto& c : p)
    if (!is_integer(c)) return false;
  return true;
}

Point to_point(const IntVector& v) {
  Point p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = Rational(v[i]);
  return p;
}

IntVector primitive_vector(const Point& v) {
  Integer lcm = 1;
  for (const auto& c : v) lcm = boost::multiprecision::lcm(lcm, den(c));
  IntVector w(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = num(v[i]) * (lcm / den(v[i]));
    g = boost::multiprecision::gcd(g, w[i]);
  }
  assert(g != 0);
  for (auto& c : w) c /= g;
  return w;
}

namespace {

// Row echelon form in place; returns the pivot columns.
std::vector<int> echelon(std::vector<Point>& rows, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = rows[r][c];
    for (int j = c; j < cols; ++j) rows[r][j] /= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(std::vector<Point> rows) {
  if (rows.empty()) return 0;
  int cols = static_cast<int>(rows[0].size());
  return static_cast<int>(echelon(rows, cols).size());
}

std::optional<Point> solve_square(std::vector<Point> a, Point b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = echelon(a, n + 1);
  if (static_cast<int>(pivots.size()) != n || (!pivots.empty() && pivots.back() == n))
    return std::nullopt;
  Point x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<Point> kernel(std::vector<Point> rows, int cols) {
  auto pivots = echelon(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Point> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Point v(cols, Rational(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(std::vector<Point> a) {
  const int n = static_cast<int>(a.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

bool PointLess::operator()(const Point& a, const Point& b) const {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace polynorm
