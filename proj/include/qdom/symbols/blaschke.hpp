#pragma once

#include <vector>

#include "qdom/numkernel/polymatrix.hpp"

namespace qdom {

/// One factor b(t) P + (I - P) with b(t) = xi (t - a) / (1 - conj(a) t).
/// Values are held exactly; irrational inputs enter as the dyadic rational
/// of their double.
struct BlaschkeFactorSpec {
  GaussRational a;
  GaussRational xi{1};
  Matrix<GaussRational> P;

  cplx a_f() const { return a.to_complex(); }
  cplx xi_f() const { return xi.to_complex(); }
  CMat P_f() const { return to_eigen(P); }
};

/// Scalar Blaschke factor value.
cplx blaschke(cplx a, cplx xi, cplx t);

/// Orthogonal projection onto span{l} (l need not be normalized).
CMat rank_one_projection(const CVec& l);
/// Exact projection l l^* / (l^* l).
Matrix<GaussRational> rank_one_projection(const std::vector<GaussRational>& l);

/// B(t) = v * prod_n (b_n(t) P_n + (I - P_n)).
class BlaschkePotapov {
 public:
  BlaschkePotapov() = default;
  BlaschkePotapov(Matrix<GaussRational> v, std::vector<BlaschkeFactorSpec> factors);

  int m() const { return m_; }
  const Matrix<GaussRational>& v() const { return v_; }
  const std::vector<BlaschkeFactorSpec>& factors() const { return factors_; }
  CMat v_f() const { return to_eigen(v_); }

  CMat eval(cplx t) const;
  /// Total zero count of det B in the disc (sum of ranks of the P_n).
  int degree() const;

  /// B(t) = numerator(t) / beta(t), beta(t) = prod_n (1 - conj(a_n) t).
  Matrix<QPoly> numerator_exact() const;
  QPoly beta_exact() const;
  Matrix<CPoly> numerator() const { return to_float(numerator_exact()); }
  CPoly beta() const { return to_float(beta_exact()); }

 private:
  int m_ = 0;
  Matrix<GaussRational> v_;
  std::vector<BlaschkeFactorSpec> factors_;
};

/// Validates and assembles. Throws InvalidFactor on a bad projection,
/// |a| >= 1, non-unimodular xi, or non-unitary v.
BlaschkePotapov bp_build(Matrix<GaussRational> v, std::vector<BlaschkeFactorSpec> factors);
BlaschkePotapov bp_build(const CMat& v, const std::vector<cplx>& a, const std::vector<cplx>& xi,
                         const std::vector<CMat>& P);

}  // namespace qdom
