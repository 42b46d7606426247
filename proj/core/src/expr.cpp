#include "invcoh/expr.hpp"

#include "invcoh/errors.hpp"

namespace invcoh {

enum class Kind { Literal, Param, Add, Sub, Mul, Div, Neg, Conj };

struct CoefExpr::Node {
  Kind kind;
  Scalar lit;        // Literal
  std::string name;  // Param
  NodePtr a, b;
};

namespace {

using Node = CoefExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_literal(Scalar v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Literal;
  n->lit = std::move(v);
  return n;
}

NodePtr make_unary(Kind k, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  return n;
}

NodePtr make_binary(Kind k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

bool is_lit(const NodePtr& n) { return n->kind == Kind::Literal; }
bool is_lit_zero(const NodePtr& n) { return is_lit(n) && n->lit.is_zero(); }
bool is_lit_one(const NodePtr& n) { return is_lit(n) && n->lit == Scalar(1); }

// Constant folding keeps propagated coframe-change coefficients small.
NodePtr fold_add(NodePtr a, NodePtr b) {
  if (is_lit(a) && is_lit(b)) return make_literal(a->lit + b->lit);
  if (is_lit_zero(a)) return b;
  if (is_lit_zero(b)) return a;
  return make_binary(Kind::Add, std::move(a), std::move(b));
}

NodePtr fold_neg(NodePtr a) {
  if (is_lit(a)) return make_literal(-a->lit);
  if (a->kind == Kind::Neg) return a->a;
  return make_unary(Kind::Neg, std::move(a));
}

NodePtr fold_sub(NodePtr a, NodePtr b) {
  if (is_lit(a) && is_lit(b)) return make_literal(a->lit - b->lit);
  if (is_lit_zero(b)) return a;
  if (is_lit_zero(a)) return fold_neg(std::move(b));
  return make_binary(Kind::Sub, std::move(a), std::move(b));
}

NodePtr fold_mul(NodePtr a, NodePtr b) {
  if (is_lit(a) && is_lit(b)) return make_literal(a->lit * b->lit);
  if (is_lit_zero(a) || is_lit_zero(b)) return make_literal(Scalar(0));
  if (is_lit_one(a)) return b;
  if (is_lit_one(b)) return a;
  return make_binary(Kind::Mul, std::move(a), std::move(b));
}

NodePtr fold_div(NodePtr a, NodePtr b) {
  if (is_lit(a) && is_lit(b)) return make_literal(a->lit / b->lit);
  if (is_lit_one(b)) return a;
  return make_binary(Kind::Div, std::move(a), std::move(b));
}

NodePtr fold_conj(NodePtr a) {
  if (is_lit(a)) return make_literal(a->lit.conj());
  if (a->kind == Kind::Conj) return a->a;
  return make_unary(Kind::Conj, std::move(a));
}

Scalar eval_node(const Node& n, const Assignment& sigma) {
  switch (n.kind) {
    case Kind::Literal:
      return n.lit;
    case Kind::Param: {
      auto it = sigma.find(n.name);
      if (it == sigma.end()) throw UnboundParameter(n.name);
      return it->second;
    }
    case Kind::Add:
      return eval_node(*n.a, sigma) + eval_node(*n.b, sigma);
    case Kind::Sub:
      return eval_node(*n.a, sigma) - eval_node(*n.b, sigma);
    case Kind::Mul:
      return eval_node(*n.a, sigma) * eval_node(*n.b, sigma);
    case Kind::Div:
      return eval_node(*n.a, sigma) / eval_node(*n.b, sigma);
    case Kind::Neg:
      return -eval_node(*n.a, sigma);
    case Kind::Conj:
      return eval_node(*n.a, sigma).conj();
  }
  throw Error("corrupt expression node");
}

void collect_node(const Node& n, std::set<std::string>& out) {
  if (n.kind == Kind::Param) out.insert(n.name);
  if (n.a) collect_node(*n.a, out);
  if (n.b) collect_node(*n.b, out);
}

NodePtr substitute_node(const NodePtr& n, const Assignment& sigma) {
  switch (n->kind) {
    case Kind::Literal:
      return n;
    case Kind::Param: {
      auto it = sigma.find(n->name);
      return it == sigma.end() ? n : make_literal(it->second);
    }
    case Kind::Add:
      return fold_add(substitute_node(n->a, sigma), substitute_node(n->b, sigma));
    case Kind::Sub:
      return fold_sub(substitute_node(n->a, sigma), substitute_node(n->b, sigma));
    case Kind::Mul:
      return fold_mul(substitute_node(n->a, sigma), substitute_node(n->b, sigma));
    case Kind::Div:
      return fold_div(substitute_node(n->a, sigma), substitute_node(n->b, sigma));
    case Kind::Neg:
      return fold_neg(substitute_node(n->a, sigma));
    case Kind::Conj:
      return fold_conj(substitute_node(n->a, sigma));
  }
  throw Error("corrupt expression node");
}

// Precedence: additive 1, multiplicative 2, atoms 3.
int precedence(const Node& n) {
  switch (n.kind) {
    case Kind::Add:
    case Kind::Sub:
    case Kind::Neg:
      return 1;
    case Kind::Mul:
    case Kind::Div:
      return 2;
    default:
      return 3;
  }
}

std::string print_node(const Node& n, int min_prec) {
  std::string s;
  switch (n.kind) {
    case Kind::Literal:
      s = to_string(n.lit);
      // A literal with both parts prints as a sum; treat it as additive.
      if (!n.lit.is_real() && sgn(n.lit.re) != 0) return min_prec > 1 ? "(" + s + ")" : s;
      if (s[0] == '-') return min_prec > 1 ? "(" + s + ")" : s;
      return s;
    case Kind::Param:
      return n.name;
    case Kind::Conj:
      return "conj(" + print_node(*n.a, 0) + ")";
    case Kind::Neg:
      s = "-" + print_node(*n.a, 2);
      break;
    case Kind::Add:
      s = print_node(*n.a, 1) + " + " + print_node(*n.b, 2);
      break;
    case Kind::Sub:
      s = print_node(*n.a, 1) + " - " + print_node(*n.b, 2);
      break;
    case Kind::Mul:
      s = print_node(*n.a, 2) + "*" + print_node(*n.b, 3);
      break;
    case Kind::Div:
      s = print_node(*n.a, 2) + "/" + print_node(*n.b, 3);
      break;
  }
  return precedence(n) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

CoefExpr::CoefExpr() : node_(make_literal(Scalar(0))) {}

CoefExpr CoefExpr::literal(Scalar v) { return CoefExpr(make_literal(std::move(v))); }

CoefExpr CoefExpr::param(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Param;
  n->name = std::move(name);
  return CoefExpr(NodePtr(n));
}

Scalar CoefExpr::eval(const Assignment& assignment) const {
  return eval_node(*node_, assignment);
}

CoefExpr CoefExpr::conjugated() const { return CoefExpr(fold_conj(node_)); }

void CoefExpr::collect_params(std::set<std::string>& out) const {
  collect_node(*node_, out);
}

std::set<std::string> CoefExpr::params() const {
  std::set<std::string> out;
  collect_params(out);
  return out;
}

bool CoefExpr::is_literal_zero() const { return is_lit_zero(node_); }

const Scalar* CoefExpr::literal_value() const {
  return is_lit(node_) ? &node_->lit : nullptr;
}

std::string CoefExpr::to_string() const { return print_node(*node_, 0); }

CoefExpr operator+(const CoefExpr& a, const CoefExpr& b) {
  return CoefExpr(fold_add(a.node_, b.node_));
}
CoefExpr operator-(const CoefExpr& a, const CoefExpr& b) {
  return CoefExpr(fold_sub(a.node_, b.node_));
}
CoefExpr operator*(const CoefExpr& a, const CoefExpr& b) {
  return CoefExpr(fold_mul(a.node_, b.node_));
}
CoefExpr operator/(const CoefExpr& a, const CoefExpr& b) {
  return CoefExpr(fold_div(a.node_, b.node_));
}
CoefExpr operator-(const CoefExpr& a) { return CoefExpr(fold_neg(a.node_)); }

}  // namespace invcoh
