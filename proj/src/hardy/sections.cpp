#include "qdom/hardy/sections.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qdom {

std::string_view to_string(SectionKind k) {
  switch (k) {
    case SectionKind::Toeplitz: return "toeplitz";
    case SectionKind::Hankel: return "hankel";
    case SectionKind::Commutator: return "commutator";
  }
  return "?";
}

CMat toeplitz_tall(const FourierCoeffs& c, int m, int rows, int N) {
  CMat t = CMat::Zero(rows * m, N * m);
  for (int j = 0; j < rows; ++j)
    for (int k = 0; k < N; ++k) t.block(j * m, k * m, m, m) = c.at(j - k);
  return t;
}

CMat hankel_tall(const FourierCoeffs& c, int m, int rows, int N) {
  CMat h = CMat::Zero(rows * m, N * m);
  for (int j = 0; j < rows; ++j)
    for (int k = 0; k < N; ++k) h.block(j * m, k * m, m, m) = c.at(-(j + k + 1));
  return h;
}

OperatorSection toeplitz_section(const MatrixSymbol& F, int N, const Tolerances& tol) {
  if (N < 1) fail(ErrorKind::DegenerateInput, "section order must be positive");
  auto c = fourier_coeffs(F, -(N - 1), N - 1, tol);
  return {N, F.m(), toeplitz_tall(c, F.m(), N, N), SectionKind::Toeplitz};
}

OperatorSection hankel_section(const MatrixSymbol& F, int N, const Tolerances& tol) {
  if (N < 1) fail(ErrorKind::DegenerateInput, "section order must be positive");
  auto c = fourier_coeffs(F, -(2 * N - 1), -1, tol);
  return {N, F.m(), hankel_tall(c, F.m(), N, N), SectionKind::Hankel};
}

std::vector<double> singular_values(const CMat& a) {
  Eigen::BDCSVD<CMat> svd(a);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

int numerical_rank(const std::vector<double>& sv, double rel_tol) {
  if (sv.empty() || sv.front() == 0.0) return 0;
  int r = 0;
  for (double s : sv)
    if (s > rel_tol * sv.front()) ++r;
  return r;
}

namespace {

/// Singular values of a Hermitian matrix (absolute eigenvalues), descending.
std::vector<double> hermitian_singular_values(const CMat& a) {
  Eigen::SelfAdjointEigenSolver<CMat> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> sv;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) sv.push_back(std::abs(es.eigenvalues()[k]));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

/// Number of extra block rows after which the Fourier tail of F is below 1e-17.
int tail_length(const MatrixSymbol& F, const Tolerances& tol) {
  double rho = 0.0;
  int poly_deg = 0;
  for (const auto& e : F.entries()) poly_deg = std::max(poly_deg, e.num.degree() - e.den.degree());
  for (const auto& p : F.poles(tol)) rho = std::max(rho, 1.0 / std::abs(p.value));
  int k = poly_deg;
  if (rho > 0.0) k = std::max(k, static_cast<int>(std::ceil(std::log(1e-17) / std::log(rho))) + 4);
  return std::min(k, 4096);
}

/// Smallest d such that the Fourier coefficients of F^*F - FF^* on the circle
/// vanish (below 1e-12 relative) for |n| >= d.
int residual_bandwidth(const MatrixSymbol& F) {
  const int S = 256, m = F.m();
  std::vector<CMat> vals(S);
  double scale = 1.0;
  for (int s = 0; s < S; ++s) {
    CMat f = F.eval(std::polar(1.0, 2.0 * std::numbers::pi * s / S));
    vals[static_cast<size_t>(s)] = f.adjoint() * f - f * f.adjoint();
    scale = std::max(scale, f.squaredNorm());
  }
  int d = 0;
  for (int n = -S / 2 + 1; n < S / 2; ++n) {
    CMat c = CMat::Zero(m, m);
    for (int s = 0; s < S; ++s) c += vals[static_cast<size_t>(s)] * std::polar(1.0, -2.0 * std::numbers::pi * n * s / S);
    c /= static_cast<double>(S);
    if (c.norm() >= 1e-12 * scale) d = std::max(d, std::abs(n) + 1);
  }
  return d;
}

}  // namespace

CommutatorReport self_commutator_rank(const MatrixSymbol& F, int N, double rank_tol, const Tolerances& tol) {
  if (N < 1) fail(ErrorKind::DegenerateInput, "section order must be positive");
  for (const auto& p : F.poles(tol))
    if (std::abs(p.value) <= 1.0 + tol.boundary_pole)
      fail(ErrorKind::PreconditionViolation, "self-commutator requires F analytic on the closed disc");

  const int m = F.m();
  CommutatorReport r;
  r.N = N;
  r.m = m;
  r.tail = tail_length(F, tol);
  const int rows = N + r.tail;
  auto c = fourier_coeffs(F, -(rows + N), rows, tol);

  // T^*T needs every row of T below the section; T T^* only the section rows.
  CMat t_tall = toeplitz_tall(c, m, rows, N);
  CMat t_sq = toeplitz_tall(c, m, N, N);
  CMat comm = t_tall.adjoint() * t_tall - t_sq * t_sq.adjoint();
  comm = 0.5 * (comm + comm.adjoint());
  r.commutator = {N, m, comm, SectionKind::Commutator};
  r.singular_values = hermitian_singular_values(comm);
  r.rank = numerical_rank(r.singular_values, rank_tol);

  r.identity_residual = std::numeric_limits<double>::quiet_NaN();
  if (normality_defect(F, 64) <= tol.normal) {
    // Hankel of F^* on the circle: block (j, k) = c_{j+k+1}(F)^*.
    CMat g = CMat::Zero(rows * m, N * m);
    for (int j = 0; j < rows; ++j)
      for (int k = 0; k < N; ++k) g.block(j * m, k * m, m, m) = c.at(j + k + 1).adjoint();
    CMat diff = comm - g.adjoint() * g;
    r.bandwidth = residual_bandwidth(F);
    const int inner = N - r.bandwidth;
    if (inner > 0) {
      double s1 = r.singular_values.empty() ? 0.0 : r.singular_values.front();
      r.identity_residual = hermitian_singular_values(CMat(diff.topLeftCorner(inner * m, inner * m))).front() / std::max(s1, 1.0);
    }
  }
  return r;
}

nlohmann::json to_json(const CommutatorReport& r) {
  nlohmann::json j{{"N", r.N}, {"m", r.m}, {"rank", r.rank}, {"singular_values", r.singular_values},
                   {"bandwidth", r.bandwidth}, {"tail", r.tail}};
  if (std::isnan(r.identity_residual)) j["identity_residual"] = nullptr;
  else j["identity_residual"] = r.identity_residual;
  return j;
}

}  // namespace qdom
