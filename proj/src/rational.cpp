#include "polynorm/rational.hpp"

#include <cctype>

namespace polynorm {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto bad = [&] { throw ParseError("bad rational literal: '" + s + "'"); };
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) bad();
  Integer intpart = 0, fracpart = 0, fracden = 1;
  bool saw_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    intpart = intpart * 10 + (s[i] - '0');
    saw_digit = true;
    ++i;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    bool frac_digit = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      fracpart = fracpart * 10 + (s[i] - '0');
      fracden *= 10;
      frac_digit = true;
      ++i;
    }
    if (!saw_digit && !frac_digit) bad();
    if (i != s.size()) bad();
    Rational r = Rational(intpart) + Rational(fracpart, fracden);
    return neg ? Rational(-r) : r;
  }
  if (!saw_digit) bad();
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (i == s.size()) bad();
    Integer d = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      d = d * 10 + (s[i] - '0');
      ++i;
    }
    if (i != s.size() || d == 0) bad();
    Rational r(intpart, d);
    return neg ? Rational(-r) : r;
  }
  if (i != s.size()) bad();
  return neg ? Rational(-intpart) : Rational(intpart);
}

std::string format_rational(const Rational& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

std::string decimal_string(const Rational& r, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = r * scale;
  // round half away from zero
  Integer rounded = rat_floor(rat_abs(scaled) + Rational(1, 2));
  std::string ds = rounded.str();
  while (static_cast<int>(ds.size()) <= digits) ds.insert(ds.begin(), '0');
  std::string out;
  if (r < 0 && rounded != 0) out += '-';
  out += ds.substr(0, ds.size() - digits);
  std::string frac = ds.substr(ds.size() - digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace polynorm
