#pragma once

// Small dense exact linear algebra over a field (used with Q(i) and Q).
// Everything downstream is rank arithmetic: kernels, images, sums of
// subspaces. Pivoting is fixed to the first nonzero entry so kernel bases are
// reproducible.

#include <cstddef>
#include <optional>
#include <vector>

#include "invcoh/errors.hpp"
#include "invcoh/scalar.hpp"

namespace invcoh {

template <class K>
bool k_is_zero(const K& x) {
  return x == K(0);
}
inline bool k_is_zero(const Scalar& x) { return x.is_zero(); }

template <class K>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::vector<K> col(std::size_t j) const {
    std::vector<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void set_col(std::size_t j, const std::vector<K>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> a_;
};

template <class K>
Mat<K> hcat(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() && a.cols() != 0 && b.cols() != 0)
    throw Error("hcat: row mismatch");
  std::size_t rows = a.cols() == 0 ? b.rows() : a.rows();
  Mat<K> m(rows, a.cols() + b.cols());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

template <class K>
Mat<K> vcat(const Mat<K>& a, const Mat<K>& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw Error("vcat: column mismatch");
  std::size_t cols = a.rows() == 0 ? b.cols() : a.cols();
  Mat<K> m(a.rows() + b.rows(), cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

template <class K>
Mat<K> mul(const Mat<K>& a, const Mat<K>& b) {
  if (a.cols() != b.rows()) throw Error("mul: dimension mismatch");
  Mat<K> m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (k_is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        m(i, j) = m(i, j) + a(i, k) * b(k, j);
    }
  return m;
}

template <class K>
std::vector<K> apply(const Mat<K>& a, const std::vector<K>& x) {
  if (a.cols() != x.size()) throw Error("apply: dimension mismatch");
  std::vector<K> y(a.rows(), K(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!k_is_zero(a(i, j))) y[i] = y[i] + a(i, j) * x[j];
  return y;
}

template <class K>
bool is_zero_mat(const Mat<K>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!k_is_zero(a(i, j))) return false;
  return true;
}

template <class K>
struct Echelon {
  Mat<K> mat;                          // reduced row echelon form
  std::vector<std::size_t> pivot_cols; // one per nonzero row
};

template <class K>
Echelon<K> rref(Mat<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // First nonzero entry in this column at or below `row`.
    std::size_t sel = row;
    while (sel < m.rows() && k_is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    K inv = K(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || k_is_zero(m(i, col))) continue;
      K f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Mat<K>& m) {
  return rref(m).pivot_cols.size();
}

/// Basis of the right kernel, one vector per column.
template <class K>
Mat<K> kernel(const Mat<K>& m) {
  Echelon<K> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::size_t nullity = m.cols() - e.pivot_cols.size();
  Mat<K> ker(m.cols(), nullity);
  std::size_t out = 0;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    ker(free_col, out) = K(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      ker(e.pivot_cols[i], out) = K(0) - e.mat(i, free_col);
    ++out;
  }
  return ker;
}

/// One solution of A x = b, or nullopt when inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& a, const std::vector<K>& b) {
  if (a.rows() != b.size()) throw Error("solve: dimension mismatch");
  Mat<K> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon<K> e = rref(std::move(aug));
  for (std::size_t c : e.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  std::vector<K> x(a.cols(), K(0));
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    x[e.pivot_cols[i]] = e.mat(i, a.cols());
  return x;
}

/// dim span(columns of a).
template <class K>
std::size_t dim_span(const Mat<K>& a) {
  return rank(a);
}

/// dim (span a + span b).
template <class K>
std::size_t dim_sum(const Mat<K>& a, const Mat<K>& b) {
  return rank(hcat(a, b));
}

/// True iff span(sub) is contained in span(big).
template <class K>
bool span_contains(const Mat<K>& big, const Mat<K>& sub) {
  return dim_sum(big, sub) == dim_span(big);
}

/// Basis of span(a) ∩ span(b) by the kernel-of-concatenation method: kernel
/// vectors of [a | -b] have their first block mapped through a.
template <class K>
Mat<K> intersection(const Mat<K>& a, const Mat<K>& b) {
  Mat<K> neg_b(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) neg_b(i, j) = K(0) - b(i, j);
  Mat<K> ker = kernel(hcat(a, neg_b));
  Mat<K> coeffs(a.cols(), ker.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) coeffs(i, j) = ker(i, j);
  Mat<K> inter = mul(a, coeffs);
  // Prune to an independent set for a clean basis.
  Echelon<K> e = rref(inter);
  Mat<K> out(a.rows(), e.pivot_cols.size());
  for (std::size_t j = 0; j < e.pivot_cols.size(); ++j)
    out.set_col(j, inter.col(e.pivot_cols[j]));
  return out;
}

using QMat = Mat<Rational>;
using CMat = Mat<Scalar>;

/// Realification: entry a+bi becomes the 2x2 block [[a,-b],[b,a]]; row i maps
/// to rows (2i, 2i+1) and column j to (2j, 2j+1). Ranks double exactly.
inline QMat realify(const CMat& m) {
  QMat r(2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& z = m(i, j);
      r(2 * i, 2 * j) = z.re;
      r(2 * i, 2 * j + 1) = -z.im;
      r(2 * i + 1, 2 * j) = z.im;
      r(2 * i + 1, 2 * j + 1) = z.re;
    }
  return r;
}

inline std::vector<Rational> realify(const std::vector<Scalar>& v) {
  std::vector<Rational> r(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[2 * i] = v[i].re;
    r[2 * i + 1] = v[i].im;
  }
  return r;
}

inline std::vector<Scalar> complexify(const std::vector<Rational>& v) {
  std::vector<Scalar> c(v.size() / 2);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Scalar(v[2 * i], v[2 * i + 1]);
  return c;
}

}  // namespace invcoh
