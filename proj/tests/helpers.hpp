#pragma once

#include <random>
#include <vector>

#include "polynorm/polytope.hpp"

namespace polynorm::testing {

inline Point pt(std::vector<std::string> coords) {
  Point p;
  for (auto& c : coords) p.push_back(parse_rational(c));
  return p;
}

inline Point ipt(std::vector<long> coords) {
  Point p;
  for (long c : coords) p.push_back(Rational(c));
  return p;
}

inline Polytope unit_simplex(int d) {
  std::vector<Point> pts;
  pts.push_back(Point(d, Rational(0)));
  for (int i = 0; i < d; ++i) {
    Point e(d, Rational(0));
    e[i] = 1;
    pts.push_back(e);
  }
  return Polytope::hull(pts);
}

inline Polytope unit_cube(int d) {
  std::vector<Point> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Point p(d);
    for (int i = 0; i < d; ++i) p[i] = Rational((mask >> i) & 1);
    pts.push_back(p);
  }
  return Polytope::hull(pts);
}

inline Polytope box(std::vector<std::pair<Rational, Rational>> ranges) {
  int d = static_cast<int>(ranges.size());
  std::vector<Point> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Point p(d);
    for (int i = 0; i < d; ++i) p[i] = ((mask >> i) & 1) ? ranges[i].second : ranges[i].first;
    pts.push_back(p);
  }
  return Polytope::hull(pts);
}

/// Random full-dimensional lattice polytope with vertices in [0, span]^d.
inline Polytope random_lattice_polytope(std::mt19937& rng, int d, int span, int npts) {
  std::uniform_int_distribution<int> coord(0, span);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    for (int i = 0; i < npts; ++i) {
      Point p(d);
      for (int j = 0; j < d; ++j) p[j] = Rational(coord(rng));
      pts.push_back(p);
    }
    try {
      return Polytope::hull(pts);
    } catch (const NotFullDimensional&) {
    }
  }
  throw std::runtime_error("could not generate a full-dimensional polytope");
}

/// Random rational polytope with denominators up to denom_bound.
inline Polytope random_rational_polytope(std::mt19937& rng, int d, int span, int npts,
                                         int denom_bound) {
  std::uniform_int_distribution<int> numdist(0, span * denom_bound);
  std::uniform_int_distribution<int> dendist(1, denom_bound);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    for (int i = 0; i < npts; ++i) {
      Point p(d);
      for (int j = 0; j < d; ++j) p[j] = Rational(numdist(rng), dendist(rng));
      pts.push_back(p);
    }
    try {
      return Polytope::hull(pts);
    } catch (const NotFullDimensional&) {
    }
  }
  throw std::runtime_error("could not generate a full-dimensional polytope");
}

/// Random point of P as a convex combination of its vertices.
inline Point random_point_in(std::mt19937& rng, const Polytope& p) {
  std::uniform_int_distribution<int> w(0, 12);
  std::vector<Integer> weights(p.vertices().size());
  Integer total = 0;
  for (auto& wi : weights) {
    wi = w(rng);
    total += wi;
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  Point x(p.dim(), Rational(0));
  for (std::size_t i = 0; i < weights.size(); ++i)
    x = add(x, scale_point(p.vertices()[i], Rational(weights[i], total)));
  return x;
}

}  // namespace polynorm::testing
