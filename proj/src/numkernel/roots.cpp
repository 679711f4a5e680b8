#include "qdom/numkernel/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

namespace qdom {

namespace {

cplx newton_step(const CPoly& p, const CPoly& dp, cplx r) {
  cplx d = dp.eval(r);
  if (std::abs(d) == 0.0) return r;
  cplx next = r - p.eval(r) / d;
  return std::abs(p.eval(next)) <= std::abs(p.eval(r)) ? next : r;
}

std::vector<cplx> companion_eigenvalues(const CPoly& p) {
  const int n = p.degree();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  const cplx lead = p.lead();
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.coeff(i) / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return out;
}

}  // namespace

double relative_residual(const CPoly& p, cplx r) {
  double m = max_abs_coeff(p);
  return m == 0.0 ? 0.0 : std::abs(p.eval(r)) / m;
}

std::vector<Root> poly_roots(const CPoly& p_in, const Tolerances& tol) {
  if (p_in.degree() < 1) fail(ErrorKind::DegenerateInput, "root finding needs degree >= 1");
  std::vector<Root> out;
  // Exact zero roots come from trailing zero coefficients.
  int zeros = 0;
  while (p_in.coeff(zeros) == cplx(0.0)) ++zeros;
  std::vector<cplx> rest(p_in.coeffs().begin() + zeros, p_in.coeffs().end());
  CPoly p(std::move(rest));
  if (zeros > 0) out.push_back({0.0, zeros});
  if (p.degree() < 1) return out;

  const CPoly dp = p.derivative();
  std::vector<cplx> raw = companion_eigenvalues(p);
  for (auto& r : raw) r = newton_step(p, dp, r);

  // Cluster nearby eigenvalues into multiple roots.
  std::sort(raw.begin(), raw.end(), [](cplx a, cplx b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  std::vector<bool> used(raw.size(), false);
  for (size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    std::vector<cplx> group{raw[i]};
    used[i] = true;
    for (size_t j = i + 1; j < raw.size(); ++j) {
      if (used[j]) continue;
      double rad = tol.root_cluster * (1.0 + std::abs(raw[i]));
      if (std::abs(raw[j] - raw[i]) <= rad) {
        group.push_back(raw[j]);
        used[j] = true;
      }
    }
    cplx mean = 0.0;
    for (auto g : group) mean += g;
    mean /= static_cast<double>(group.size());
    const int m = static_cast<int>(group.size());
    if (m > 1) {
      CPoly q = p;
      for (int k = 0; k < m - 1; ++k) q = q.derivative();
      mean = newton_step(q, q.derivative(), mean);
    }
    out.push_back({mean, m});
  }
  // Extra polish for roots that miss the residual bound (large moduli).
  for (auto& r : out) {
    if (r.multiplicity != 1) continue;
    for (int it = 0; it < 4 && relative_residual(p_in, r.value) > tol.root; ++it) {
      r.value = newton_step(p, dp, r.value);
    }
  }
  return out;
}

std::vector<Root> poly_roots(const QPoly& p, const Tolerances& tol) {
  if (p.degree() < 1) fail(ErrorKind::DegenerateInput, "root finding needs degree >= 1");
  return poly_roots(to_float(p), tol);
}

std::vector<cplx> flat_roots(const std::vector<Root>& roots) {
  std::vector<cplx> out;
  for (const auto& r : roots)
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  return out;
}

CPoly from_roots(const std::vector<cplx>& roots, cplx lead) {
  CPoly acc(lead);
  for (auto r : roots) acc *= CPoly::linear(-r, 1.0);
  return acc;
}

}  // namespace qdom
