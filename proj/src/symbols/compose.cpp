#include "qdom/symbols/compose.hpp"

#include <Eigen/LU>
#include <cmath>

namespace qdom {

ScalarBivarRational::ScalarBivarRational(QBivar n, QBivar d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) fail(ErrorKind::DegenerateInput, "psi has a zero denominator");
}

cplx ScalarBivarRational::eval(cplx t, cplx eta) const { return qdom::eval(num, t, eta) / qdom::eval(den, t, eta); }

ScalarBivarRational ScalarBivarRational::reflected() const {
  const int dt = std::max(num.deg_z(), den.deg_z());
  const int de = std::max(num.deg_w(), den.deg_w());
  auto refl = [&](const QBivar& q) {
    std::vector<std::vector<GaussRational>> a(static_cast<size_t>(dt + 1),
                                              std::vector<GaussRational>(static_cast<size_t>(de + 1)));
    for (int j = 0; j <= q.deg_z(); ++j)
      for (int k = 0; k <= q.deg_w(); ++k)
        a[static_cast<size_t>(dt - j)][static_cast<size_t>(de - k)] = q.coeff(j, k).conj();
    return QBivar(std::move(a));
  };
  return {refl(num), refl(den)};
}

ScalarBivarRational ScalarBivarRational::identity() {
  return {QBivar({{GaussRational(0), GaussRational(1)}}), QBivar({{GaussRational(1)}})};
}

CMat eval_matrix(const QBivar& q, cplx t, const CMat& M) {
  const Eigen::Index m = M.rows();
  CMat acc = CMat::Zero(m, m);
  // Horner in M with t-polynomial coefficients.
  for (int k = q.deg_w(); k >= 0; --k) {
    cplx c = 0.0;
    for (int j = q.deg_z(); j >= 0; --j) c = c * t + q.coeff(j, k).to_complex();
    acc = acc * M;
    acc.diagonal().array() += c;
  }
  return acc;
}

CMat eval_composition(const ScalarBivarRational& psi, const BlaschkePotapov& B, cplx t) {
  CMat b = B.eval(t);
  CMat n = eval_matrix(psi.num, t, b);
  CMat d = eval_matrix(psi.den, t, b);
  return n * d.inverse();
}

namespace {

/// sum_jk a_jk t^j Bn^k beta^{K-k} as a polynomial matrix.
Matrix<QPoly> homogenized(const QBivar& q, const Matrix<QPoly>& Bn, const QPoly& beta, int K) {
  const size_t m = Bn.size();
  Matrix<QPoly> acc(m, std::vector<QPoly>(m));
  Matrix<QPoly> power = mat_identity<QPoly>(m);
  std::vector<QPoly> beta_pow{QPoly(1)};
  for (int k = 1; k <= K; ++k) beta_pow.push_back(beta_pow.back() * beta);
  for (int k = 0; k <= K; ++k) {
    QPoly tk;
    for (int j = 0; j <= q.deg_z(); ++j) tk += QPoly::monomial(q.coeff(j, k), j);
    if (!tk.is_zero()) acc = mat_add(acc, mat_scale(power, tk * beta_pow[static_cast<size_t>(K - k)]));
    if (k < K) power = mat_mul(power, Bn);
  }
  return acc;
}

Matrix<QPoly> adjugate(const Matrix<QPoly>& d) {
  const size_t m = d.size();
  Matrix<QPoly> adj(m, std::vector<QPoly>(m));
  if (m == 1) {
    adj[0][0] = QPoly(1);
    return adj;
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      Matrix<QPoly> minor;
      for (size_t r = 0; r < m; ++r) {
        if (r == j) continue;
        minor.emplace_back();
        for (size_t c = 0; c < m; ++c)
          if (c != i) minor.back().push_back(d[r][c]);
      }
      QPoly c = bareiss_det(minor);
      adj[i][j] = (i + j) % 2 ? -c : c;
    }
  return adj;
}

}  // namespace

MatrixSymbol compose_psi(const ScalarBivarRational& psi, const BlaschkePotapov& B) {
  const int m = B.m();
  const int K = std::max(psi.num.deg_w(), psi.den.deg_w());
  const Matrix<QPoly> Bn = B.numerator_exact();
  const QPoly beta = B.beta_exact();
  // num(t, B) den(t, B)^{-1} = Nt Dt^{-1}; the beta^K factors cancel.
  Matrix<QPoly> Nt = homogenized(psi.num, Bn, beta, K);
  Matrix<QPoly> Dt = homogenized(psi.den, Bn, beta, K);
  QPoly det = bareiss_det(Dt);
  if (det.is_zero()) fail(ErrorKind::IllPosedComposition, "den(t, B(t)) is singular for every t");
  Matrix<QPoly> prod = mat_mul(Nt, adjugate(Dt));

  std::vector<CRatFun> entries;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      QRatFun e = reduce(QRatFun(prod[static_cast<size_t>(i)][static_cast<size_t>(j)], det));
      entries.push_back(to_float(e));
    }
  // The float constructor cancels near-common roots left by rounded inputs.
  MatrixSymbol F(m, std::move(entries));

  // Validate the symbolic form against direct evaluation.
  for (int k = 0; k < 8; ++k) {
    cplx t = std::polar(0.3 + 0.09 * k, 0.7 + 0.8 * k);
    CMat direct;
    try {
      direct = eval_composition(psi, B, t);
    } catch (const Error&) {
      continue;
    }
    if (!direct.allFinite()) continue;
    double err = (F.eval(t) - direct).norm() / (1.0 + direct.norm());
    if (err > 1e-8)
      fail(ErrorKind::IllPosedComposition, "symbolic composition disagrees with direct evaluation (relative error " + std::to_string(err * 1e8) + "e-8 at k=" + std::to_string(k) + ")");
  }
  return F;
}

}  // namespace qdom
