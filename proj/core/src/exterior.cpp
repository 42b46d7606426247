#include "invcoh/exterior.hpp"

#include <algorithm>

#include "invcoh/errors.hpp"

namespace invcoh {

std::vector<int> BasisForm::word(int n) const {
  std::vector<int> w;
  w.reserve(holo.size() + anti.size());
  for (int j : holo) w.push_back(j);
  for (int j : anti) w.push_back(n + j);
  return w;
}

std::string BasisForm::to_string() const {
  std::string s = "e(";
  bool first = true;
  for (int j : holo) {
    if (!first) s += ",";
    s += std::to_string(j);
    first = false;
  }
  for (int j : anti) {
    if (!first) s += ",";
    s += std::to_string(-j);
    first = false;
  }
  return s + ")";
}

bool operator<(const BasisForm& a, const BasisForm& b) {
  if (a.p() != b.p()) return a.p() < b.p();
  if (a.q() != b.q()) return a.q() < b.q();
  if (a.holo != b.holo) return a.holo < b.holo;
  return a.anti < b.anti;
}

namespace {

// k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

}  // namespace

std::vector<BasisForm> basis(int p, int q, int n) {
  if (p < 0 || q < 0 || p > n || q > n)
    throw Error("bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                ") out of range for n=" + std::to_string(n));
  std::vector<BasisForm> out;
  for (const auto& h : subsets(n, p))
    for (const auto& a : subsets(n, q)) out.push_back(BasisForm{h, a});
  return out;
}

std::optional<std::pair<int, BasisForm>> wedge_basis(const BasisForm& a,
                                                     const BasisForm& b) {
  // Both factor words are ascending in the canonical generator rank, so the
  // Koszul sign of the product is the parity of the cross inversions.
  auto merge = [](const std::vector<int>& u, const std::vector<int>& v,
                  std::vector<int>& out, long& inversions) -> bool {
    for (int y : v) {
      std::size_t above = 0;
      for (int x : u) {
        if (x == y) return false;
        if (x > y) ++above;
      }
      inversions += static_cast<long>(above);
    }
    out.resize(u.size() + v.size());
    std::merge(u.begin(), u.end(), v.begin(), v.end(), out.begin());
    return true;
  };

  // Cross inversions split into four blocks; only b.holo moving past a.anti
  // crosses the holo/anti boundary.
  long inv = 0;
  BasisForm m;
  if (!merge(a.holo, b.holo, m.holo, inv)) return std::nullopt;
  if (!merge(a.anti, b.anti, m.anti, inv)) return std::nullopt;
  inv += static_cast<long>(a.anti.size()) * static_cast<long>(b.holo.size());
  return std::make_pair(inv % 2 == 0 ? 1 : -1, std::move(m));
}

std::pair<int, BasisForm> conjugate_basis(const BasisForm& b) {
  int sign = (b.p() * b.q()) % 2 == 0 ? 1 : -1;
  return {sign, BasisForm{b.anti, b.holo}};
}

Form eval(const ExprForm& f, const Assignment& sigma) {
  Form out;
  for (const auto& [b, c] : f.terms()) out.add_term(b, c.eval(sigma));
  return out;
}

std::set<std::string> params_of(const ExprForm& f) {
  std::set<std::string> out;
  for (const auto& [b, c] : f.terms()) c.collect_params(out);
  return out;
}

namespace {

// A coefficient needs wrapping when it prints with a top-level + or - that is
// not a leading unary minus.
bool needs_parens(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

template <class Coef>
std::string form_to_string(const FormT<Coef>& f,
                           std::string (*coef_str)(const Coef&)) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : f.terms()) {
    std::string cs = coef_str(c);
    if (!out.empty()) out += " + ";
    if (b.degree() == 0) {
      out += needs_parens(cs) ? "(" + cs + ")" : cs;
      continue;
    }
    if (cs == "1") {
      out += b.to_string();
    } else if (cs == "-1") {
      out += "-" + b.to_string();
    } else {
      out += (needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + b.to_string();
    }
  }
  return out;
}

std::string scalar_str(const Scalar& s) { return to_string(s); }
std::string expr_str(const CoefExpr& e) { return e.to_string(); }

}  // namespace

std::string to_string(const Form& f) { return form_to_string<Scalar>(f, &scalar_str); }
std::string to_string(const ExprForm& f) { return form_to_string<CoefExpr>(f, &expr_str); }

}  // namespace invcoh
