#include "qdom/quaddom/example2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdom/numkernel/roots.hpp"

namespace qdom {

namespace {

bool is_real(const GaussRational& x) { return sgn(x.im()) == 0; }

}  // namespace

QBivar Example2Scenario::curve() const {
  std::vector<std::vector<GaussRational>> g(3, std::vector<GaussRational>(3));
  for (int j = 0; j <= 2; ++j) {
    g[static_cast<size_t>(j)][2] = p.coeff(j);
    g[static_cast<size_t>(j)][1] = -q.coeff(j);
    g[static_cast<size_t>(j)][0] = r.coeff(j);
  }
  return QBivar(std::move(g));
}

Example2Scenario example2_build(const GaussRational& lambda, const GaussRational& a, const GaussRational& c,
                                const GaussRational& L, int branch_pick) {
  if (lambda.norm() >= 1) fail(ErrorKind::PreconditionViolation, "lambda must lie in the unit disc");
  if (lambda.is_zero()) fail(ErrorKind::PreconditionViolation, "lambda must be nonzero");
  if (!is_real(a) || !is_real(c) || sgn(a.re()) <= 0 || sgn(c.re()) < 0)
    fail(ErrorKind::PreconditionViolation, "a must be a positive real and c a nonnegative real");
  if (std::abs((a * a + c * c - GaussRational(1)).to_complex()) > 1e-12)
    fail(ErrorKind::PreconditionViolation, "a^2 + c^2 must equal 1");
  if (L.is_zero()) fail(ErrorKind::PreconditionViolation, "L must be nonzero");

  Example2Scenario s;
  s.lambda = lambda;
  s.a = a;
  s.c = c;
  s.L = L;
  s.branch_pick = branch_pick;
  const GaussRational lb = lambda.conj();
  const GaussRational one(1), zero(0);
  s.p = QPoly{one, zero, -(lb * lb)};
  s.r = QPoly{-(lambda * lambda), zero, one};
  const GaussRational mod2(lambda.norm(), 0);
  s.q = QPoly{c * c * (one - lambda * lambda), GaussRational(2) * a * a * (one - mod2), c * c * (one - lb * lb)};
  s.D = s.q * s.q - GaussRational(4) * s.p * s.r;
  if (s.D.degree() != 4) fail(ErrorKind::DegenerateCurve, "D has a root at infinity");

  s.D_self_reciprocal = true;
  for (int k = 0; k <= 4; ++k)
    if (s.D.coeff(k) != s.D.coeff(4 - k).conj()) s.D_self_reciprocal = false;

  s.roots = flat_roots(poly_roots(s.D));
  for (size_t i = 0; i < s.roots.size(); ++i) {
    if (std::abs(std::abs(s.roots[i]) - 1.0) < 1e-8) fail(ErrorKind::DegenerateCurve, "D vanishes on the unit circle");
    for (size_t j = 0; j < i; ++j)
      if (std::abs(s.roots[i] - s.roots[j]) < 1e-8) fail(ErrorKind::DegenerateCurve, "D has a repeated root");
  }
  for (cplx g : s.roots)
    if (std::abs(g) < 1.0) s.disc_roots.push_back(g);
  std::sort(s.disc_roots.begin(), s.disc_roots.end(), [](cplx x, cplx y) { return std::arg(x) < std::arg(y); });
  for (cplx g : s.disc_roots) {
    cplx refl = 1.0 / std::conj(g);
    double best = 1e300;
    for (cplx h : s.roots) best = std::min(best, std::abs(h - refl));
    s.pairing_defect = std::max(s.pairing_defect, best);
  }
  if (branch_pick < 0 || branch_pick >= static_cast<int>(s.disc_roots.size()))
    fail(ErrorKind::PreconditionViolation, "branch_pick does not index a root of D in the disc");
  s.gamma1 = s.disc_roots[static_cast<size_t>(branch_pick)];
  s.gamma1_exact = GaussRational::from_complex(s.gamma1);

  // psi numerator and denominator: 2 p eta - q +- L (t - gamma1)
  std::vector<std::vector<GaussRational>> num(3, std::vector<GaussRational>(2)), den = num;
  for (int j = 0; j <= 2; ++j) {
    num[static_cast<size_t>(j)][1] = GaussRational(2) * s.p.coeff(j);
    den[static_cast<size_t>(j)][1] = num[static_cast<size_t>(j)][1];
    num[static_cast<size_t>(j)][0] = -s.q.coeff(j);
    den[static_cast<size_t>(j)][0] = -s.q.coeff(j);
  }
  num[0][0] -= L * s.gamma1_exact;
  num[1][0] += L;
  den[0][0] += L * s.gamma1_exact;
  den[1][0] -= L;
  s.psi = ScalarBivarRational(QBivar(std::move(num)), QBivar(std::move(den)));

  auto P1 = rank_one_projection(std::vector<GaussRational>{one, zero});
  auto P2 = rank_one_projection(std::vector<GaussRational>{c, a});
  s.B = bp_build(mat_identity<GaussRational>(2), {{lambda, one, P1}, {-lambda, one, P2}});
  s.F = compose_psi(s.psi, s.B);
  return s;
}

Example2Scenario example2_build(cplx lambda, double a, double c, cplx L, int branch_pick) {
  return example2_build(GaussRational::from_complex(lambda), GaussRational::from_double(a),
                        GaussRational::from_double(c), GaussRational::from_complex(L), branch_pick);
}

Example2Scenario example2_reference() {
  return example2_build(GaussRational(0, mpq_class(4, 5)), GaussRational(mpq_class(5, 13), 0),
                        GaussRational(mpq_class(12, 13), 0), GaussRational(0, 1));
}

ZBranches trace_z_branches(const Example2Scenario& s, int n) {
  if (n < 8) fail(ErrorKind::DegenerateInput, "too few samples");
  const CPoly D = to_float(s.D);
  const cplx L = s.L_f();
  const double scale = max_abs_coeff(D);
  ZBranches b;
  cplx prev;
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * std::numbers::pi * k / n;
    const cplx t = std::polar(1.0, th);
    const cplx d = D.eval(t);
    if (std::abs(d) < 1e-12 * scale) fail(ErrorKind::DegenerateCurve, "D vanishes on the unit circle");
    cplx sg = std::sqrt(d);
    if (k > 0) {
      const double keep = std::abs(sg - prev), flip = std::abs(sg + prev);
      if (std::abs(keep - flip) < 1e-3 * std::abs(sg)) fail(ErrorKind::DegenerateCurve, "square root continuation is ambiguous");
      if (flip < keep) sg = -sg;
    }
    prev = sg;
    b.thetas.push_back(th);
    b.sigma.push_back(sg);
  }
  // closing the loop must return to the starting branch
  if (std::abs(b.sigma.back() - b.sigma.front()) > std::abs(b.sigma.back() + b.sigma.front()))
    fail(ErrorKind::DegenerateCurve, "square root of D is not single valued on the circle");

  for (int k = 0; k < n; ++k) {
    const cplx t = std::polar(1.0, b.thetas[static_cast<size_t>(k)]);
    const cplx lu = L * (t - s.gamma1);
    const cplx sg = b.sigma[static_cast<size_t>(k)];
    if (std::abs(sg - lu) < 1e-12 * std::abs(lu) || std::abs(sg + lu) < 1e-12 * std::abs(lu))
      fail(ErrorKind::BoundaryPole, "z has a pole on the unit circle");
    b.z_plus.push_back((sg + lu) / (sg - lu));
    b.z_minus.push_back((-sg + lu) / (-sg - lu));
  }
  auto mean_mod = [n](const std::vector<cplx>& z) {
    double m = 0.0;
    for (cplx v : z) m += std::abs(v);
    return m / n;
  };
  if (mean_mod(b.z_minus) > mean_mod(b.z_plus)) {
    std::swap(b.z_plus, b.z_minus);
    for (cplx& v : b.sigma) v = -v;
    b.swapped = true;
  }
  b.mean_modulus_plus = mean_mod(b.z_plus);
  b.mean_modulus_minus = mean_mod(b.z_minus);
  for (int k = 0; k < n; ++k)
    b.product_defect = std::max(b.product_defect, std::abs(b.z_plus[static_cast<size_t>(k)] * b.z_minus[static_cast<size_t>(k)] - 1.0));
  return b;
}

UnivalenceReport univalence_check(const Example2Scenario& s, int n) {
  UnivalenceReport u;
  auto br = trace_z_branches(s, n);
  u.min_arg_step = 1e300;
  for (int k = 0; k < n; ++k) {
    const cplx z0 = br.z_plus[static_cast<size_t>(k)];
    const cplx z1 = br.z_plus[static_cast<size_t>((k + 1) % n)];
    const double step = std::arg(z1 / z0);
    u.min_arg_step = std::min(u.min_arg_step, step);
    u.total_arg += step;
  }
  u.arg_increasing = u.min_arg_step > 0.0 && std::abs(u.total_arg - 2.0 * std::numbers::pi) < 1e-6;

  const cplx L = s.L_f();
  const CPoly lin{-L * s.gamma1, L};
  const CPoly cubic = divmod(to_float(s.D) - lin * lin, CPoly{-s.gamma1, 1.0}).first;
  u.pole_candidates = flat_roots(poly_roots(cubic));
  for (cplx t : u.pole_candidates)
    if (std::abs(t) <= 1.0 + 1e-9) u.disc_poles.push_back(t);
  u.pole_free = u.disc_poles.empty();
  u.pass = u.arg_increasing && u.pole_free;
  return u;
}

}  // namespace qdom
