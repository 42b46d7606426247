#include "invcoh/scalar.hpp"

#include "invcoh/errors.hpp"

namespace invcoh {

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  Rational n = o.norm();
  Rational r = (re * o.re + im * o.im) / n;
  im = (im * o.re - re * o.im) / n;
  re = std::move(r);
  return *this;
}

Scalar conj(const Scalar& s) { return s.conj(); }
bool is_real(const Scalar& s) { return s.is_real(); }

bool scalar_less(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c < 0;
  return cmp(a.im, b.im) < 0;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  auto imag_part = [](const Rational& v) -> std::string {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.get_str() + "*i";
  };
  if (s.is_real()) return s.re.get_str();
  if (sgn(s.re) == 0) return imag_part(s.im);
  std::string out = s.re.get_str();
  if (sgn(s.im) > 0) out += "+";
  out += imag_part(s.im);
  return out;
}

}  // namespace invcoh
