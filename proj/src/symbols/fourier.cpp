#include "qdom/symbols/fourier.hpp"

#include <unsupported/Eigen/FFT>
#include <cmath>
#include <numbers>

namespace qdom {

CMat FourierCoeffs::at(int n) const {
  if (n < n_min || n > n_max) {
    const Eigen::Index m = residue.empty() ? 0 : residue.front().rows();
    return CMat::Zero(m, m);
  }
  return (*this)[n];
}

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Taylor coefficients of a/b at 0 up to order n (b(0) != 0).
std::vector<cplx> series_div(const CPoly& a, const CPoly& b, int n) {
  std::vector<cplx> out(static_cast<size_t>(n) + 1);
  const cplx b0 = b.coeff(0);
  for (int k = 0; k <= n; ++k) {
    cplx acc = a.coeff(k);
    for (int j = 1; j <= k; ++j) acc -= b.coeff(j) * out[static_cast<size_t>(k - j)];
    out[static_cast<size_t>(k)] = acc / b0;
  }
  return out;
}

}  // namespace

PartialFractions partial_fractions(const CRatFun& f, const Tolerances& tol) {
  PartialFractions out;
  auto [q, r] = divmod(f.num, f.den);
  out.poly = q;
  if (f.den.degree() < 1 || r.is_zero()) return out;
  auto roots = poly_roots(f.den, tol);
  const cplx lead = f.den.lead();
  for (size_t i = 0; i < roots.size(); ++i) {
    const cplx p = roots[i].value;
    const int mult = roots[i].multiplicity;
    // g(s) = r(p + s) / (lead * prod_{k != i} (p + s - p_k)^{m_k})
    CPoly rest(lead);
    for (size_t k = 0; k < roots.size(); ++k) {
      if (k == i) continue;
      for (int e = 0; e < roots[k].multiplicity; ++e) rest *= CPoly{p - roots[k].value, 1.0};
    }
    auto g = series_div(taylor_shift(r, p), rest, mult - 1);
    std::vector<cplx> a(static_cast<size_t>(mult));
    for (int j = 1; j <= mult; ++j) a[static_cast<size_t>(j - 1)] = g[static_cast<size_t>(mult - j)];
    out.poles.push_back(p);
    out.coeffs.push_back(std::move(a));
  }
  return out;
}

std::vector<cplx> fourier_coeffs_residue(const CRatFun& f, int n_min, int n_max, const Tolerances& tol) {
  std::vector<cplx> c(static_cast<size_t>(n_max - n_min + 1), 0.0);
  auto pf = partial_fractions(f, tol);
  for (int n = std::max(0, n_min); n <= std::min(n_max, pf.poly.degree()); ++n) c[static_cast<size_t>(n - n_min)] += pf.poly.coeff(n);
  for (size_t i = 0; i < pf.poles.size(); ++i) {
    const cplx p = pf.poles[i];
    const double r = std::abs(p);
    if (std::abs(r - 1.0) <= tol.boundary_pole) fail(ErrorKind::BoundaryPole, "pole on the unit circle");
    for (size_t jj = 0; jj < pf.coeffs[i].size(); ++jj) {
      const int j = static_cast<int>(jj) + 1;
      const cplx A = pf.coeffs[i][jj];
      for (int n = n_min; n <= n_max; ++n) {
        cplx term = 0.0;
        if (r > 1.0 && n >= 0) {
          term = A * (j % 2 ? -1.0 : 1.0) * std::pow(p, -j) * binom(n + j - 1, j - 1) * std::pow(p, -n);
        } else if (r < 1.0 && n <= -j) {
          term = A * binom(-n - 1, j - 1) * std::pow(p, -n - j);
        }
        c[static_cast<size_t>(n - n_min)] += term;
      }
    }
  }
  return c;
}

FourierCoeffs fourier_coeffs(const MatrixSymbol& F, int n_min, int n_max, const Tolerances& tol) {
  if (n_max < n_min) fail(ErrorKind::DegenerateInput, "empty coefficient range");
  const int m = F.m();
  FourierCoeffs out;
  out.n_min = n_min;
  out.n_max = n_max;
  const size_t count = static_cast<size_t>(n_max - n_min + 1);
  out.residue.assign(count, CMat::Zero(m, m));
  out.fft.assign(count, CMat::Zero(m, m));

  // Grid size from the slowest decaying pole and the polynomial parts.
  double rho = 0.0;
  int poly_deg = 0;
  for (const auto& p : F.poles(tol)) {
    double r = std::abs(p.value);
    if (std::abs(r - 1.0) <= tol.boundary_pole) fail(ErrorKind::BoundaryPole, "pole on the unit circle");
    rho = std::max(rho, std::min(r, 1.0 / r));
  }
  for (const auto& e : F.entries()) poly_deg = std::max(poly_deg, e.num.degree() - e.den.degree());
  int need = 2 * std::max(std::abs(n_min), std::abs(n_max)) + 2 * poly_deg + 2;
  if (rho > 0.0) need += static_cast<int>(std::ceil(std::log(1e-18) / std::log(rho))) + 8;
  int N = 64;
  while (N < need && N < (1 << 22)) N *= 2;
  out.fft_points = N;

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto c = fourier_coeffs_residue(F.entry(i, j), n_min, n_max, tol);
      for (size_t k = 0; k < count; ++k) out.residue[k](i, j) = c[k];
    }

  Eigen::FFT<double> fft;
  std::vector<cplx> samples(static_cast<size_t>(N)), spec;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < N; ++k) samples[static_cast<size_t>(k)] = eval(F.entry(i, j), std::polar(1.0, 2.0 * std::numbers::pi * k / N));
      fft.fwd(spec, samples);
      for (int n = n_min; n <= n_max; ++n) {
        int idx = ((n % N) + N) % N;
        out.fft[static_cast<size_t>(n - n_min)](i, j) = spec[static_cast<size_t>(idx)] / static_cast<double>(N);
      }
    }
  for (size_t k = 0; k < count; ++k)
    out.cross_check = std::max(out.cross_check, (out.residue[k] - out.fft[k]).cwiseAbs().maxCoeff());
  return out;
}

}  // namespace qdom
