#pragma once

#include <vector>

#include "qdom/symbols/matrix_symbol.hpp"

namespace qdom {

/// Fourier coefficients c_n of F on the unit circle for n in [n_min, n_max].
struct FourierCoeffs {
  int n_min = 0;
  int n_max = -1;
  std::vector<CMat> residue;  // partial fractions
  std::vector<CMat> fft;      // 2^k point boundary grid
  int fft_points = 0;
  double cross_check = 0.0;   // max entrywise |residue - fft|

  const CMat& operator[](int n) const { return residue[static_cast<size_t>(n - n_min)]; }
  CMat at(int n) const;  // zero outside the computed range
};

/// Throws BoundaryPole if a pole lies within tol.boundary_pole of the circle.
FourierCoeffs fourier_coeffs(const MatrixSymbol& F, int n_min, int n_max, const Tolerances& tol = {});

/// Scalar residue-path coefficients of a reduced rational function.
std::vector<cplx> fourier_coeffs_residue(const CRatFun& f, int n_min, int n_max, const Tolerances& tol = {});

/// Partial fractions: f = P(t) + sum_i sum_j A_ij / (t - p_i)^j.
struct PartialFractions {
  CPoly poly;
  std::vector<cplx> poles;
  std::vector<std::vector<cplx>> coeffs;  // coeffs[i][j-1] = A_ij
};
PartialFractions partial_fractions(const CRatFun& f, const Tolerances& tol = {});

}  // namespace qdom
