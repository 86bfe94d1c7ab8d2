#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace polynorm {

// The only scalar types used in geometric computation. Everything is exact;
// no floating point anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline Integer rat_floor(const Rational& r) {
  Integer q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

inline Integer rat_ceil(const Rational& r) {
  Integer q = num(r) / den(r);
  if (num(r) > 0 && q * den(r) != num(r)) ++q;
  return q;
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", plain integers and decimal strings ("0.7" -> 7/10).
Rational parse_rational(const std::string& s);

/// Canonical form: "p/q" with q > 1, otherwise just "p".
std::string format_rational(const Rational& r);

/// Fixed-point decimal expansion with `digits` places, computed by integer
/// long division so the output is platform independent. Used for SVG only.
std::string decimal_string(const Rational& r, int digits);

}  // namespace polynorm
