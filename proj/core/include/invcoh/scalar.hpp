#pragma once

// Exact arithmetic over the Gaussian rationals Q(i).
//
// Every verdict downstream is a rank computation, so the ground field must be
// exact: components are GMP rationals, kept in lowest terms with positive
// denominator (mpq_class canonical form).

#include <gmpxx.h>

#include <string>

namespace invcoh {

using Rational = mpq_class;

/// a + b*i with rational a, b. Immutable value type; equality is exact.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(long r) : re(r), im(0) {}  // NOLINT: implicit by design, mirrors int -> field
  Scalar(Rational r) : re(std::move(r)), im(0) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar unit_i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  /// re^2 + im^2, i.e. this * conj(this) as a rational.
  Rational norm() const { return re * re + im * im; }

  Scalar operator-() const { return Scalar(-re, -im); }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

Scalar conj(const Scalar& s);
bool is_real(const Scalar& s);

/// Total order (lexicographic on (re, im)); used for deterministic containers.
bool scalar_less(const Scalar& a, const Scalar& b);

/// Canonical text form: "0", "3/4", "i", "-2*i", "1/2+1/3*i", "1-i", ...
/// Round-trips through parse_scalar().
std::string to_string(const Scalar& s);
std::string to_string(const Rational& r);

}  // namespace invcoh
