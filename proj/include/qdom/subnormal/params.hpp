#pragma once

#include <functional>
#include <json.hpp>
#include <vector>

#include "qdom/numkernel/bivar.hpp"
#include "qdom/symbols/blaschke.hpp"
#include "qdom/symbols/matrix_symbol.hpp"

namespace qdom {

/// G = h alpha^{-1} on the circle, G the boundary function of F^*.
struct CoprimeFactorization {
  BlaschkePotapov alpha;
  MatrixSymbol h;                   // G * alpha, analytic in the disc
  double negative_coeff_norm = 0;   // largest negative Fourier coefficient of G alpha (relative)
  std::vector<std::vector<double>> laurent_singular_values;  // one list per extracted factor
};

/// Peels Blaschke-Potapov factors off the poles of G in the disc: at a pole p
/// with leading Laurent coefficient A, the factor b_p P + (I - P) with P the
/// projection onto the row space of A lowers the pole. Throws
/// FactorizationAmbiguous when a Laurent coefficient has singular values
/// between 1e-10 and 1e-6 of the local scale.
CoprimeFactorization coprime_factorize(const MatrixSymbol& F, const Tolerances& tol = {});

/// Orthonormal basis of H^2_m minus alpha H^2_m (Malmquist-Walsh): for factor n
/// and u in the range of P_n, e = v B_1 ... B_{n-1} u sqrt(1-|a_n|^2) / (1 - conj(a_n) t).
class ModelBasis {
 public:
  ModelBasis() = default;
  explicit ModelBasis(BlaschkePotapov alpha);

  int size() const { return static_cast<int>(elems_.size()); }
  int m() const { return alpha_.m(); }
  const BlaschkePotapov& alpha() const { return alpha_; }
  /// m x size matrix whose columns are the basis functions at t.
  CMat eval(cplx t) const;
  /// Basis function k as m rational entries.
  std::vector<CRatFun> rational(int k) const;

 private:
  struct Elem {
    size_t factor;
    CVec u;
  };
  BlaschkePotapov alpha_;
  std::vector<Elem> elems_;
};

/// Throws EmptyModelSpace for a constant alpha.
ModelBasis model_basis(const BlaschkePotapov& alpha);

/// Gram matrix of m x d basis columns in the boundary L^2 inner product.
CMat gram_matrix(const std::function<CMat(cplx)>& basis, int samples = 4096);

struct SubnormalParams {
  int dimM = 0;
  CMat Lambda;      // Lambda^* = compression of multiplication by G to M
  CMat R;           // Hankel operator of G on M in an orthonormal basis of its image
  CMat C;           // R^* R
  std::vector<cplx> nodes;  // eigenvalues of Lambda
  int samples = 0;
  std::vector<CMat> hankel_images;  // columns Gamma e_j sampled at the boundary points (m x dimM each)

  CMat Lambda_star() const { return Lambda.adjoint(); }
};

/// (C, Lambda) of T_F via coprime factorization and the model-space basis.
SubnormalParams matrix_parameters(const MatrixSymbol& F, const Tolerances& tol = {});
/// Same, in a caller-supplied orthonormal basis of M (m x d columns at t).
SubnormalParams matrix_parameters(const MatrixSymbol& F, const std::function<CMat(cplx)>& basis, int samples = 4096);

/// <Gamma e_j, h_i> for given H^2_- functions h_i (m-vectors at boundary points).
CMat hankel_matrix_against(const SubnormalParams& p, const std::vector<std::function<CVec(cplx)>>& h);

/// Q(z, w) = det(C - (w I - Lambda^*)(z I - Lambda)).
struct DiscriminantCurve {
  CBivar Q;
  std::optional<QBivar> Q_exact;
  double symmetry_defect = 0.0;
};

/// exact = true expands over Gaussian rationals (C symmetrised, inputs read
/// as dyadic rationals); otherwise the coefficients come from bivar_fit.
/// Throws SymmetryViolation if the real-type defect exceeds tol.symmetry.
DiscriminantCurve discriminant_poly(const SubnormalParams& p, bool exact = false, const Tolerances& tol = {});

/// pi * trace(C). Throws PreconditionViolation if C is not Hermitian.
double area_from_C(const CMat& C);

nlohmann::json to_json(const SubnormalParams& p);

}  // namespace qdom
