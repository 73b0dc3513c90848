#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "error.hpp"

namespace gtpa {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Integer square root test. root is only meaningful when the return is true.
inline bool exact_sqrt(const Int& n, Int& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

// A canonical cpp_rational has coprime parts and positive denominator, so p/q
// is a square iff p and q both are.
inline bool exact_sqrt(const Rational& x, Rational& root) {
  Int np, dp;
  if (!exact_sqrt(boost::multiprecision::numerator(x), np)) return false;
  if (!exact_sqrt(boost::multiprecision::denominator(x), dp)) return false;
  root = Rational(np, dp);
  return true;
}

inline bool exact_fourth_root(const Rational& x, Rational& root) {
  Rational half;
  return exact_sqrt(x, half) && exact_sqrt(half, root);
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) fail(errc::domain, "zero to a negative power");
    return rat_pow(Rational(1) / base, -e);
  }
  Rational acc(1), b = base;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc *= b;
    b *= b;
  }
  return acc;
}

// "p" or "p/q" with optional leading minus; anything else is a parse error.
inline Rational parse_rational(const std::string& text) {
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!digits(num) || !digits(den))
    fail(errc::parse, "bad rational literal '" + text + "'");
  Int d{den};
  if (d == 0) fail(errc::parse, "zero denominator in '" + text + "'");
  Rational r{Int(num), d};
  return neg ? -r : r;
}

inline std::string render_rational(const Rational& x) { return x.str(); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace gtpa
