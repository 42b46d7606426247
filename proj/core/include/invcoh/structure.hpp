#pragma once

// Structure equations of a Lie algebra with complex structure: the
// differentials of a (1,0) coframe eta^1..eta^n, with coefficients that may
// involve named parameters. d of the conjugate coframe is derived by
// conjugation, never input.

#include <optional>
#include <string>
#include <vector>

#include "invcoh/dcomplex.hpp"
#include "invcoh/exterior.hpp"

namespace invcoh {

/// A new (1,0) coframe written in the old one: row k holds the coefficients
/// of new eta^k on eta^1..eta^n (holo) and conj(eta^1)..conj(eta^n) (anti).
struct CoframeChange {
  int n = 0;
  std::vector<std::vector<CoefExpr>> holo;
  std::vector<std::vector<CoefExpr>> anti;

  static CoframeChange identity(int n);
  std::set<std::string> params() const;
};

struct StructureEquations {
  int n = 0;
  std::string name;
  std::vector<std::string> params;
  std::vector<ExprForm> d_eta;  // d of eta^k, k = 1..n, at index k-1

  /// Optional deformation family shipped with the manifold file.
  std::optional<CoframeChange> deformation;
};

struct ValidationReport {
  bool d_squared_zero = false;
  bool integrable = false;
  bool abelian = false;
  bool unimodular = false;
  /// The (0,2) components of d eta^k when non-integrable, per generator.
  std::vector<std::pair<int, Form>> obstructions;
  std::vector<std::string> failures;

  bool ok() const { return d_squared_zero && integrable; }
};

/// Structure equations evaluated at a full parameter assignment, with d
/// extended to the whole exterior algebra as a graded derivation.
class EvaluatedStructure {
 public:
  EvaluatedStructure(const StructureEquations& se, const Assignment& sigma);

  int n() const { return n_; }
  /// d of a single generator; index k in 1..n for eta^k, -k for conj(eta^k).
  const Form& d_generator(int k) const;
  /// Graded derivation extension (Leibniz with Koszul signs).
  Form d(const Form& f) const;
  Form d(const BasisForm& b) const;

 private:
  int n_;
  std::vector<Form> d_holo_, d_anti_;
};

ValidationReport validate(const StructureEquations& se, const Assignment& sigma);

/// Splits the derivation by bidegree into del/delbar matrices at every (p,q).
/// Throws NonIntegrable when some d eta^k has a (0,2) part, StructureError
/// when d^2 != 0.
DoubleComplex build_complex(const StructureEquations& se, const Assignment& sigma);

/// Rewrites the structure equations in the new coframe. `sigma` must assign
/// every parameter occurring in the change; parameters of `se` untouched by
/// `sigma` stay symbolic in the result. Throws SingularChange when the induced
/// map on the 2n generators is not invertible at `sigma`.
StructureEquations change_coframe(const StructureEquations& se,
                                  const CoframeChange& change,
                                  const Assignment& sigma);

}  // namespace invcoh
