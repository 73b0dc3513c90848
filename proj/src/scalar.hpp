#pragma once

#include <array>
#include <memory>
#include <string>

#include "rational.hpp"

namespace gtpa {

// Exact coefficient field Q(r), r = m^(1/4) for a fixed positive rational m.
// Values are stored as c0 + c1*r + c2*r^2 + c3*r^3. The struct captures how
// much of that basis is actually needed: if m is a perfect fourth power r is
// rational (degree 1), if m is merely a perfect square r^2 is rational
// (degree 2), otherwise x^4 - m is irreducible and the degree is 4.
struct ScalarField {
  Rational m;      // r^4
  int degree;      // 1, 2 or 4
  Rational root2;  // r^2 when degree <= 2, else unused
  Rational root4;  // r when degree == 1, else unused

  static std::shared_ptr<const ScalarField> make(const Rational& m);
};

using FieldPtr = std::shared_ptr<const ScalarField>;

// A field element, kept canonical: coefficients at powers that fold into the
// rationals are always folded down, so equality is plain coefficient
// comparison. A Scalar with no field pointer is a plain rational; it combines
// with scalars of any field.
class Scalar {
 public:
  Scalar() : field_(nullptr), c_{} {}
  Scalar(long v) : field_(nullptr), c_{Rational(v), 0, 0, 0} {}
  Scalar(const Rational& v) : field_(nullptr), c_{v, 0, 0, 0} {}
  Scalar(FieldPtr f, Rational c0, Rational c1 = 0, Rational c2 = 0, Rational c3 = 0)
      : field_(std::move(f)), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    canonicalize();
  }

  // r^e, for any integer e (r is invertible: r^-1 = r^3/m).
  static Scalar r_pow(const FieldPtr& f, long e);

  const FieldPtr& field() const { return field_; }
  const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  const Rational& rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  double to_double() const;

  // Compact human form, e.g. "0", "3/2", "-r + 2*r^3".
  std::string text() const;
  // Always the four canonical coefficients, for machine output.
  std::array<std::string, 4> coeff_strings() const;

 private:
  void canonicalize();
  // Ensure both operands live in the same field; promotes pure rationals.
  static void align(Scalar& a, Scalar& b);

  FieldPtr field_;
  std::array<Rational, 4> c_;
};

}  // namespace gtpa
