#pragma once

#include "qdom/numkernel/bivar.hpp"
#include "qdom/symbols/blaschke.hpp"
#include "qdom/symbols/matrix_symbol.hpp"

namespace qdom {

/// psi(t, eta) = num / den, coefficient grids indexed [t-degree][eta-degree].
struct ScalarBivarRational {
  QBivar num;
  QBivar den;

  ScalarBivarRational() = default;
  ScalarBivarRational(QBivar n, QBivar d);

  cplx eval(cplx t, cplx eta) const;
  /// psi^#(t, eta) = conj(psi(1/conj t, 1/conj eta)), same denominators cleared.
  ScalarBivarRational reflected() const;
  /// psi(t, eta) = eta
  static ScalarBivarRational identity();
};

/// num(t, M) = sum a_jk t^j M^k for a square matrix M.
CMat eval_matrix(const QBivar& q, cplx t, const CMat& M);

/// Direct evaluation psi(t, B(t)) = num(t, B) den(t, B)^{-1}.
CMat eval_composition(const ScalarBivarRational& psi, const BlaschkePotapov& B, cplx t);

/// F(t) = psi(t, B(t)) as an entrywise rational symbol. Throws
/// IllPosedComposition when den(t, B(t)) is singular for every t.
MatrixSymbol compose_psi(const ScalarBivarRational& psi, const BlaschkePotapov& B);

}  // namespace qdom
