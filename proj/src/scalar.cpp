#include "scalar.hpp"

#include <cmath>
#include <sstream>

namespace gtpa {

std::shared_ptr<const ScalarField> ScalarField::make(const Rational& m) {
  if (m <= 0) fail(errc::domain, "field parameter must be positive");
  auto f = std::make_shared<ScalarField>();
  f->m = m;
  if (exact_fourth_root(m, f->root4)) {
    f->degree = 1;
    f->root2 = f->root4 * f->root4;
  } else if (exact_sqrt(m, f->root2)) {
    f->degree = 2;
    f->root4 = 0;
  } else {
    f->degree = 4;
    f->root2 = 0;
    f->root4 = 0;
  }
  return f;
}

void Scalar::canonicalize() {
  if (!field_) return;
  if (field_->degree == 1) {
    c_[0] += c_[1] * field_->root4 + c_[2] * field_->root2 + c_[3] * field_->root2 * field_->root4;
    c_[1] = c_[2] = c_[3] = 0;
  } else if (field_->degree == 2) {
    c_[0] += c_[2] * field_->root2;
    c_[1] += c_[3] * field_->root2;
    c_[2] = c_[3] = 0;
  }
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.field_ && b.field_) {
    if (a.field_ != b.field_ && a.field_->m != b.field_->m)
      fail(errc::internal, "mixing scalars from different fields");
    return;
  }
  if (!a.field_) a.field_ = b.field_;
  if (!b.field_) b.field_ = a.field_;
}

Scalar Scalar::r_pow(const FieldPtr& f, long e) {
  long q = e >= 0 ? e / 4 : -((-e + 3) / 4);
  int rem = static_cast<int>(e - 4 * q);
  Scalar out;
  out.field_ = f;
  out.c_[static_cast<size_t>(rem)] = rat_pow(f->m, q);
  out.canonicalize();
  return out;
}

const Rational& Scalar::rational_value() const {
  if (!is_rational()) fail(errc::internal, "scalar is not rational");
  return c_[0];
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Scalar b = o;
  align(*this, b);
  for (size_t i = 0; i < 4; ++i) c_[i] += b.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar b = o;
  align(*this, b);
  std::array<Rational, 4> out{};
  if (!field_) {
    out[0] = c_[0] * b.c_[0];
  } else {
    for (size_t i = 0; i < 4; ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < 4; ++j) {
        if (b.c_[j] == 0) continue;
        size_t k = i + j;
        if (k < 4)
          out[k] += c_[i] * b.c_[j];
        else
          out[k - 4] += c_[i] * b.c_[j] * field_->m;
      }
    }
  }
  c_ = out;
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::domain, "division by zero");
  if (is_rational()) {
    Scalar out = *this;
    out.c_[0] = Rational(1) / c_[0];
    return out;
  }
  // Non-rational values only occur with a field of degree 2 or 4.
  if (field_->degree == 2) {
    // (c0 + c1 r)(c0 - c1 r) = c0^2 - c1^2 r^2 is rational, and nonzero:
    // otherwise r^2 would be a rational square, i.e. degree 1.
    Rational denom = c_[0] * c_[0] - c_[1] * c_[1] * field_->root2;
    Scalar out = *this;
    out.c_[0] = c_[0] / denom;
    out.c_[1] = -c_[1] / denom;
    return out;
  }
  // Degree 4: solve M y = (1,0,0,0)^T where column j of M holds the
  // coefficients of this * r^j. M is invertible because Q(r) is a field.
  Rational a[4][5] = {};
  for (size_t j = 0; j < 4; ++j) {
    std::array<Rational, 4> col = c_;
    for (size_t t = 0; t < j; ++t) {
      std::array<Rational, 4> next;
      next[0] = col[3] * field_->m;
      next[1] = col[0];
      next[2] = col[1];
      next[3] = col[2];
      col = next;
    }
    for (size_t i = 0; i < 4; ++i) a[i][j] = col[i];
  }
  a[0][4] = 1;
  for (size_t piv = 0; piv < 4; ++piv) {
    size_t row = piv;
    while (row < 4 && a[row][piv] == 0) ++row;
    if (row == 4) fail(errc::internal, "singular inversion matrix");
    for (size_t k = 0; k < 5; ++k) std::swap(a[piv][k], a[row][k]);
    Rational d = a[piv][piv];
    for (size_t k = piv; k < 5; ++k) a[piv][k] /= d;
    for (size_t i = 0; i < 4; ++i) {
      if (i == piv || a[i][piv] == 0) continue;
      Rational f = a[i][piv];
      for (size_t k = piv; k < 5; ++k) a[i][k] -= f * a[piv][k];
    }
  }
  return Scalar(field_, a[0][4], a[1][4], a[2][4], a[3][4]);
}

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar x = a, y = b;
  Scalar::align(x, y);
  return x.c_ == y.c_;
}

double Scalar::to_double() const {
  double r = field_ ? std::pow(gtpa::to_double(field_->m), 0.25) : 1.0;
  double acc = 0, p = 1;
  for (size_t i = 0; i < 4; ++i) {
    acc += gtpa::to_double(c_[i]) * p;
    p *= r;
  }
  return acc;
}

std::string Scalar::text() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    Rational mag = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
    if (first) {
      if (c_[i] < 0) out << "-";
      first = false;
    } else {
      out << (c_[i] < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << render_rational(mag);
    } else {
      if (mag != 1) out << render_rational(mag) << "*";
      out << (i == 1 ? "r" : i == 2 ? "r^2" : "r^3");
    }
  }
  return out.str();
}

std::array<std::string, 4> Scalar::coeff_strings() const {
  return {render_rational(c_[0]), render_rational(c_[1]), render_rational(c_[2]),
          render_rational(c_[3])};
}

}  // namespace gtpa
