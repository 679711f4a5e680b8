#pragma once

#include <json.hpp>
#include <string_view>
#include <vector>

#include "qdom/symbols/fourier.hpp"

namespace qdom {

enum class SectionKind { Toeplitz, Hankel, Commutator };
std::string_view to_string(SectionKind k);

/// Finite section acting on the first N powers of t in H^2_m.
struct OperatorSection {
  int N = 0;
  int m = 0;
  CMat mat;  // (N m) x (N m), block (j, k) at rows j m .. j m + m - 1
  SectionKind kind = SectionKind::Toeplitz;

  CMat block(int j, int k) const { return mat.block(j * m, k * m, m, m); }
};

/// Block (j, k) = c_{j-k}(F).
OperatorSection toeplitz_section(const MatrixSymbol& F, int N, const Tolerances& tol = {});
/// Block (j, k) = c_{-(j+k+1)}(F).
OperatorSection hankel_section(const MatrixSymbol& F, int N, const Tolerances& tol = {});

/// Tall variants with `rows` block rows and N block columns.
CMat toeplitz_tall(const FourierCoeffs& c, int m, int rows, int N);
CMat hankel_tall(const FourierCoeffs& c, int m, int rows, int N);

struct CommutatorReport {
  int N = 0;
  int m = 0;
  int rank = 0;
  std::vector<double> singular_values;  // descending
  double identity_residual = 0.0;       // interior block of [T*,T] - G*G, relative to sigma_1; NaN if F is not normal
  int bandwidth = 0;                    // d used for the interior block
  int tail = 0;                         // extra block rows of the tall sections
  OperatorSection commutator;
};

/// [T_F^*, T_F] on the first N powers. Products that reach past the section use
/// tall sections long enough for the Fourier tail to fall below 1e-17.
/// Throws PreconditionViolation unless F is analytic on the closed disc.
CommutatorReport self_commutator_rank(const MatrixSymbol& F, int N, double rank_tol = 1e-8, const Tolerances& tol = {});

/// Singular values of a matrix, descending.
std::vector<double> singular_values(const CMat& a);
int numerical_rank(const std::vector<double>& sv, double rel_tol);

nlohmann::json to_json(const CommutatorReport& r);

}  // namespace qdom
