#include "qdom/symbols/blaschke.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace qdom {

cplx blaschke(cplx a, cplx xi, cplx t) { return xi * (t - a) / (1.0 - std::conj(a) * t); }

CMat rank_one_projection(const CVec& l) {
  double n2 = l.squaredNorm();
  if (n2 == 0.0) fail(ErrorKind::InvalidFactor, "projection onto the zero vector");
  return l * l.adjoint() / n2;
}

Matrix<GaussRational> rank_one_projection(const std::vector<GaussRational>& l) {
  GaussRational n2(0);
  for (const auto& x : l) n2 += x * x.conj();
  if (n2.is_zero()) fail(ErrorKind::InvalidFactor, "projection onto the zero vector");
  Matrix<GaussRational> p(l.size(), std::vector<GaussRational>(l.size()));
  for (size_t i = 0; i < l.size(); ++i)
    for (size_t j = 0; j < l.size(); ++j) p[i][j] = l[i] * l[j].conj() / n2;
  return p;
}

BlaschkePotapov::BlaschkePotapov(Matrix<GaussRational> v, std::vector<BlaschkeFactorSpec> factors)
    : m_(static_cast<int>(v.size())), v_(std::move(v)), factors_(std::move(factors)) {}

CMat BlaschkePotapov::eval(cplx t) const {
  CMat b = v_f();
  const CMat id = CMat::Identity(m_, m_);
  for (const auto& f : factors_) {
    CMat P = f.P_f();
    b = b * (blaschke(f.a_f(), f.xi_f(), t) * P + (id - P));
  }
  return b;
}

int BlaschkePotapov::degree() const {
  int d = 0;
  for (const auto& f : factors_) {
    Eigen::JacobiSVD<CMat> svd(f.P_f());
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 0.5) ++d;
  }
  return d;
}

Matrix<QPoly> BlaschkePotapov::numerator_exact() const {
  Matrix<QPoly> acc = mat_const(v_);
  const size_t m = static_cast<size_t>(m_);
  for (const auto& f : factors_) {
    // xi (t - a) P + (1 - conj(a) t)(I - P)
    QPoly lin = QPoly::linear(-f.a, GaussRational(1)) * f.xi;
    QPoly beta = QPoly::linear(GaussRational(1), -f.a.conj());
    Matrix<QPoly> fac(m, std::vector<QPoly>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        GaussRational id = i == j ? GaussRational(1) : GaussRational(0);
        fac[i][j] = lin * f.P[i][j] + beta * (id - f.P[i][j]);
      }
    acc = mat_mul(acc, fac);
  }
  return acc;
}

QPoly BlaschkePotapov::beta_exact() const {
  QPoly acc(GaussRational(1));
  for (const auto& f : factors_) acc *= QPoly::linear(GaussRational(1), -f.a.conj());
  return acc;
}

BlaschkePotapov bp_build(Matrix<GaussRational> v, std::vector<BlaschkeFactorSpec> factors) {
  const size_t m = v.size();
  if (m == 0) fail(ErrorKind::InvalidFactor, "empty unitary constant");
  for (const auto& row : v)
    if (row.size() != m) fail(ErrorKind::InvalidFactor, "unitary constant is not square");
  CMat vf = to_eigen(v);
  if ((vf.adjoint() * vf - CMat::Identity(vf.rows(), vf.cols())).norm() > 1e-12)
    fail(ErrorKind::InvalidFactor, "v is not unitary");
  for (size_t n = 0; n < factors.size(); ++n) {
    const auto& f = factors[n];
    const std::string tag = "factor " + std::to_string(n) + ": ";
    if (f.P.size() != m) fail(ErrorKind::InvalidFactor, tag + "projection has the wrong size");
    for (const auto& row : f.P)
      if (row.size() != m) fail(ErrorKind::InvalidFactor, tag + "projection is not square");
    if (std::abs(f.a_f()) >= 1.0) fail(ErrorKind::InvalidFactor, tag + "zero must lie in the open unit disc");
    if (std::abs(std::abs(f.xi_f()) - 1.0) > 1e-12) fail(ErrorKind::InvalidFactor, tag + "xi must be unimodular");
    CMat P = f.P_f();
    if ((P - P.adjoint()).norm() > 1e-12 || (P * P - P).norm() > 1e-12)
      fail(ErrorKind::InvalidFactor, tag + "P is not an orthogonal projection");
  }
  return BlaschkePotapov(std::move(v), std::move(factors));
}

BlaschkePotapov bp_build(const CMat& v, const std::vector<cplx>& a, const std::vector<cplx>& xi,
                         const std::vector<CMat>& P) {
  if (a.size() != xi.size() || a.size() != P.size()) fail(ErrorKind::InvalidFactor, "factor lists differ in length");
  std::vector<BlaschkeFactorSpec> f;
  for (size_t n = 0; n < a.size(); ++n)
    f.push_back({GaussRational::from_complex(a[n]), GaussRational::from_complex(xi[n]), to_exact(P[n])});
  return bp_build(to_exact(v), std::move(f));
}

}  // namespace qdom
