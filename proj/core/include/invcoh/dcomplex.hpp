#pragma once

// A bounded double complex of finite-dimensional spaces with anticommuting
// differentials del: (p,q)->(p+1,q) and delbar: (p,q)->(p,q+1), stored as
// exact matrices. Built from structure equations (then bases are canonical
// wedge monomials and conjugation is available) or loaded raw from text.

#include <optional>
#include <string>
#include <vector>

#include "invcoh/exterior.hpp"
#include "invcoh/linalg.hpp"

namespace invcoh {

class DoubleComplex {
 public:
  DoubleComplex() : n_(0) {}
  explicit DoubleComplex(int n);

  int n() const { return n_; }

  int dim(int p, int q) const;
  const std::vector<std::string>& labels(int p, int q) const;

  /// Matrix of del at (p,q): dim(p+1,q) x dim(p,q). Zero-row matrix when the
  /// target bidegree does not exist.
  const CMat& del(int p, int q) const;
  const CMat& delbar(int p, int q) const;

  /// Composite del∘delbar: (p,q) -> (p+1,q+1).
  CMat del_delbar(int p, int q) const;

  void set_dim(int p, int q, int d, std::vector<std::string> labels = {});
  void set_del(int p, int q, CMat m);
  void set_delbar(int p, int q, CMat m);

  /// Checks del^2 = 0, delbar^2 = 0 and del∘delbar + delbar∘del = 0 at every
  /// bidegree; returns human-readable violations (empty when consistent).
  std::vector<std::string> verify() const;

  // --- exterior backing (complexes built from structure equations) ---

  bool has_exterior_basis() const { return exterior_; }
  void mark_exterior();

  /// Coordinates of a homogeneous (p,q) form in the canonical basis.
  std::vector<Scalar> coords(const Form& f, int p, int q) const;
  Form form_at(int p, int q, const std::vector<Scalar>& v) const;

  /// d = del + delbar applied through the stored matrices; accepts mixed
  /// bidegrees. Exterior complexes only.
  Form d_of(const Form& f) const;
  Form del_of(const Form& f) const;
  Form delbar_of(const Form& f) const;

  /// Anti-linear conjugation transported to coordinates: the returned matrix
  /// C satisfies coords(conj(f), q, p) = C * conj(coords(f, p, q)).
  CMat conjugation_matrix(int p, int q) const;

  // --- provenance flags (set by the structure frontend) ---

  std::optional<bool> unimodular;
  std::optional<bool> abelian;
  std::string name;

 private:
  void check_range(int p, int q) const;
  Form apply_graded(const Form& f, bool use_del) const;

  int n_;
  bool exterior_ = false;
  std::vector<std::vector<int>> dims_;
  std::vector<std::vector<CMat>> del_, delbar_;
  std::vector<std::vector<std::vector<std::string>>> labels_;
};

/// Serialize to the raw complex text format; load_raw_complex() reads it back
/// verbatim.
std::string save_raw_complex(const DoubleComplex& dc);

}  // namespace invcoh
