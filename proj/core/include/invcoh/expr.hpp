#pragma once

// Coefficient expressions: literals, named parameters, field operations and
// conj(.), evaluated exactly at Gaussian-rational parameter assignments.
// Squared moduli are spelled t*conj(t); there is no dedicated |.|^2 syntax.

#include <map>
#include <memory>
#include <set>
#include <string>

#include "invcoh/scalar.hpp"

namespace invcoh {

using Assignment = std::map<std::string, Scalar>;

class CoefExpr {
 public:
  /// The zero literal.
  CoefExpr();

  static CoefExpr literal(Scalar v);
  static CoefExpr param(std::string name);
  static CoefExpr zero() { return CoefExpr(); }
  static CoefExpr one() { return literal(Scalar(1)); }
  static CoefExpr imaginary_unit() { return literal(Scalar::unit_i()); }

  /// Exact value at a full assignment of the parameters occurring here.
  /// Throws UnboundParameter / DivisionByZero.
  Scalar eval(const Assignment& assignment) const;

  /// Partial evaluation: replaces assigned parameters by literals and folds;
  /// parameters missing from `assignment` stay symbolic.
  CoefExpr substitute(const Assignment& assignment) const;

  CoefExpr conjugated() const;

  void collect_params(std::set<std::string>& out) const;
  std::set<std::string> params() const;

  /// True iff this is the literal 0 (syntactically, after constant folding).
  bool is_literal_zero() const;
  /// Non-null iff the expression is a plain literal.
  const Scalar* literal_value() const;

  std::string to_string() const;

  friend CoefExpr operator+(const CoefExpr& a, const CoefExpr& b);
  friend CoefExpr operator-(const CoefExpr& a, const CoefExpr& b);
  friend CoefExpr operator*(const CoefExpr& a, const CoefExpr& b);
  friend CoefExpr operator/(const CoefExpr& a, const CoefExpr& b);
  friend CoefExpr operator-(const CoefExpr& a);

  struct Node;  // definition is internal to expr.cpp

 private:
  using NodePtr = std::shared_ptr<const Node>;
  explicit CoefExpr(NodePtr n) : node_(std::move(n)) {}
  NodePtr node_;
};

}  // namespace invcoh
