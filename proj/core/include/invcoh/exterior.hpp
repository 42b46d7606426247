#pragma once

// Bigraded complexified exterior algebra on n holomorphic generators and their
// conjugates. Canonical factor order is: all holomorphic factors first, then
// all antiholomorphic ones, each strictly ascending. Every sign in the library
// is fixed by that single convention.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invcoh/expr.hpp"
#include "invcoh/scalar.hpp"

namespace invcoh {

/// A canonical wedge monomial: holo ⊂ {1..n} and anti ⊂ {1..n}, both strictly
/// increasing. Degree (p,q) = (|holo|, |anti|).
struct BasisForm {
  std::vector<int> holo;
  std::vector<int> anti;

  int p() const { return static_cast<int>(holo.size()); }
  int q() const { return static_cast<int>(anti.size()); }
  int degree() const { return p() + q(); }

  /// Ranks the indexed generators in canonical order: eta^j -> j,
  /// conj(eta^j) -> n + j.
  std::vector<int> word(int n) const;

  /// "e(1,2,-1)": positive entries are eta^j, negative are conj(eta^j).
  std::string to_string() const;

  friend bool operator==(const BasisForm& a, const BasisForm& b) = default;
};

/// Lexicographic on (p, q, holo, anti); the global basis-form order.
bool operator<(const BasisForm& a, const BasisForm& b);

/// All basis forms of bidegree (p,q) in n variables, lexicographically
/// ordered. Size C(n,p)*C(n,q). Throws on out-of-range bidegree.
std::vector<BasisForm> basis(int p, int q, int n);

/// wedge of two canonical monomials: (sign, merged form), or nullopt when a
/// generator repeats. The sign is the parity of the merge permutation.
std::optional<std::pair<int, BasisForm>> wedge_basis(const BasisForm& a,
                                                     const BasisForm& b);

/// conjugate of a monomial: swaps holo and anti; reordering the factors back
/// into canonical order contributes (-1)^{p q}.
std::pair<int, BasisForm> conjugate_basis(const BasisForm& b);

namespace detail {
inline bool coef_is_zero(const Scalar& s) { return s.is_zero(); }
inline bool coef_is_zero(const CoefExpr& e) { return e.is_literal_zero(); }
inline Scalar coef_conj(const Scalar& s) { return s.conj(); }
inline CoefExpr coef_conj(const CoefExpr& e) { return e.conjugated(); }
inline Scalar coef_from_int(const Scalar&, int k) { return Scalar(k); }
inline CoefExpr coef_from_int(const CoefExpr&, int k) {
  return CoefExpr::literal(Scalar(k));
}
}  // namespace detail

/// Finitely supported coefficient map BasisForm -> Coef. Zero coefficients are
/// never stored. Sums of mixed bidegree are representable (d of a form is
/// one); bidegree() reports the common bidegree of a homogeneous form.
template <class Coef>
class FormT {
 public:
  using Terms = std::map<BasisForm, Coef>;

  FormT() = default;

  static FormT monomial(Coef c, BasisForm b) {
    FormT f;
    f.add_term(std::move(b), std::move(c));
    return f;
  }

  void add_term(BasisForm b, Coef c) {
    if (detail::coef_is_zero(c)) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(std::move(b), std::move(c));
    } else {
      it->second = it->second + c;
      if (detail::coef_is_zero(it->second)) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  bool is_homogeneous() const {
    auto bd = bidegree();
    return terms_.empty() || bd.has_value();
  }

  /// The common bidegree of all terms, if any terms exist and they agree.
  std::optional<std::pair<int, int>> bidegree() const {
    std::optional<std::pair<int, int>> bd;
    for (const auto& [b, c] : terms_) {
      std::pair<int, int> here{b.p(), b.q()};
      if (!bd)
        bd = here;
      else if (*bd != here)
        return std::nullopt;
    }
    return bd;
  }

  FormT component(int p, int q) const {
    FormT out;
    for (const auto& [b, c] : terms_)
      if (b.p() == p && b.q() == q) out.terms_.emplace(b, c);
    return out;
  }

  FormT operator-() const {
    FormT out;
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, detail::coef_from_int(c, -1) * c);
    return out;
  }

  friend FormT operator+(const FormT& x, const FormT& y) {
    FormT out = x;
    for (const auto& [b, c] : y.terms_) out.add_term(b, c);
    return out;
  }

  friend FormT operator-(const FormT& x, const FormT& y) { return x + (-y); }

  friend FormT operator*(const Coef& s, const FormT& f) {
    FormT out;
    if (detail::coef_is_zero(s)) return out;
    for (const auto& [b, c] : f.terms_) out.add_term(b, s * c);
    return out;
  }

  friend bool operator==(const FormT& x, const FormT& y) {
    return x.terms_ == y.terms_;
  }

 private:
  Terms terms_;
};

using Form = FormT<Scalar>;
using ExprForm = FormT<CoefExpr>;

template <class Coef>
FormT<Coef> wedge(const FormT<Coef>& x, const FormT<Coef>& y) {
  FormT<Coef> out;
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      auto merged = wedge_basis(bx, by);
      if (!merged) continue;
      Coef c = cx * cy;
      if (merged->first < 0) c = detail::coef_from_int(c, -1) * c;
      out.add_term(merged->second, std::move(c));
    }
  }
  return out;
}

template <class Coef>
FormT<Coef> conjugate(const FormT<Coef>& x) {
  FormT<Coef> out;
  for (const auto& [b, c] : x.terms()) {
    auto [sign, cb] = conjugate_basis(b);
    Coef cc = detail::coef_conj(c);
    if (sign < 0) cc = detail::coef_from_int(cc, -1) * cc;
    out.add_term(std::move(cb), std::move(cc));
  }
  return out;
}

/// Evaluate the coefficients of an expression-valued form.
Form eval(const ExprForm& f, const Assignment& sigma);

std::set<std::string> params_of(const ExprForm& f);

std::string to_string(const Form& f);
std::string to_string(const ExprForm& f);

}  // namespace invcoh
