#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdom/numkernel/polymatrix.hpp"
#include "qdom/numkernel/ratfun.hpp"
#include "qdom/tolerances.hpp"

namespace qdom {

enum class Tri { False, True, Unknown };
std::string_view to_string(Tri t);

/// Rational m x m matrix function stored entrywise (row-major).
class MatrixSymbol {
 public:
  MatrixSymbol() = default;
  MatrixSymbol(int m, std::vector<CRatFun> entries);
  /// Exact entries; the float entries are derived from them.
  MatrixSymbol(int m, std::vector<QRatFun> entries);

  static MatrixSymbol scalar(CRatFun f) { return MatrixSymbol(1, std::vector<CRatFun>{std::move(f)}); }
  /// t * I
  static MatrixSymbol shift(int m);

  int m() const { return m_; }
  const CRatFun& entry(int i, int j) const { return entries_[static_cast<size_t>(i * m_ + j)]; }
  const std::vector<CRatFun>& entries() const { return entries_; }
  const std::optional<std::vector<QRatFun>>& exact_entries() const { return exact_; }

  CMat eval(cplx t) const;

  /// F_*(t) = F(1/conj(t))^*, the boundary function of the adjoint.
  MatrixSymbol boundary_adjoint() const;
  /// t -> F(xi t).
  MatrixSymbol rotated(cplx xi) const;

  /// Distinct poles over all entries with the largest multiplicity seen.
  std::vector<Root> poles(const Tolerances& tol = {}) const;

  /// Common denominator d and numerator matrix N with F = N / d.
  std::pair<Matrix<CPoly>, CPoly> common_denominator(const Tolerances& tol = {}) const;

  Tri normal = Tri::Unknown;
  Tri analytic_closed_disc = Tri::Unknown;
  Tri nondegenerate = Tri::Unknown;

 private:
  int m_ = 0;
  std::vector<CRatFun> entries_;
  std::optional<std::vector<QRatFun>> exact_;
};

MatrixSymbol operator+(const MatrixSymbol& a, const MatrixSymbol& b);
MatrixSymbol operator*(const MatrixSymbol& a, const MatrixSymbol& b);

struct SymbolFlags {
  Tri normal = Tri::Unknown;
  Tri analytic_closed_disc = Tri::Unknown;
  Tri nondegenerate = Tri::Unknown;
  Tri ndarn_member = Tri::Unknown;
  double normal_margin = 0.0;  // worst scaled defect over the test points
  double pole_margin = 0.0;    // min | |pole| - 1 |
  std::vector<cplx> constant_eigenvalues;  // witnesses of degeneracy
};

/// Classification with deterministic test points (seeded); stores the
/// flags on F as well.
SymbolFlags classify_symbol(MatrixSymbol& F, const Tolerances& tol = {}, unsigned seed = 42);
SymbolFlags classify_symbol(const MatrixSymbol& F, const Tolerances& tol = {}, unsigned seed = 42);

/// max over boundary samples of ||F F^* - F^* F|| / (1 + ||F||^2).
double normality_defect(const MatrixSymbol& F, int samples);

/// Eigenvalues of F(t).
std::vector<cplx> eigenvalues(const CMat& a);

}  // namespace qdom
