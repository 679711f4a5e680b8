#include "qdom/numkernel/ratfun.hpp"

#include <cmath>

namespace qdom {

CPoly deflate(const CPoly& p, cplx r) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<cplx> q(static_cast<size_t>(n));
  if (std::abs(r) > 1.0) {
    // Backward recurrence from the constant term.
    q[0] = -p.coeff(0) / r;
    for (int k = 1; k < n; ++k) q[static_cast<size_t>(k)] = (q[static_cast<size_t>(k - 1)] - p.coeff(k)) / r;
    return CPoly(std::move(q));
  }
  cplx acc = p.coeff(n);
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<size_t>(k)] = acc;
    acc = p.coeff(k) + acc * r;
  }
  return CPoly(std::move(q));
}

namespace {

double abs_scale(const CPoly& p, cplx r) {
  double s = 0.0, pw = 1.0;
  for (const auto& c : p.coeffs()) {
    s += std::abs(c) * pw;
    pw *= std::abs(r);
  }
  return s;
}

// Clustered roots can pass the residual test for the wrong partner; a genuine
// cancellation leaves the values unchanged away from the root.
bool same_function(const CPoly& n1, const CPoly& d1, const CPoly& n2, const CPoly& d2, cplx r) {
  const double rad = 1.0 + std::abs(r);
  for (int k = 0; k < 8; ++k) {
    cplx t = std::polar(rad * (0.45 + 0.1 * k), 0.37 + 0.79 * k);
    if (std::abs(t - r) < 1e-3 * rad) continue;
    cplx a = n1.eval(t) / d1.eval(t), b = n2.eval(t) / d2.eval(t);
    if (!std::isfinite(std::abs(a))) continue;
    if (std::abs(a - b) > 1e-10 * (1.0 + std::abs(a))) return false;
  }
  return true;
}

}  // namespace

CRatFun reduce(const CRatFun& f, double cancel_tol) {
  CPoly num = trim_relative(f.num, 1e-14);
  CPoly den = trim_relative(f.den, 1e-14);
  if (den.is_zero()) fail(ErrorKind::DegenerateInput, "rational function with zero denominator");
  if (num.is_zero()) return {CPoly(), CPoly(1)};
  bool changed = true;
  while (changed && den.degree() >= 1 && num.degree() >= 1) {
    changed = false;
    for (const auto& r : poly_roots(den)) {
      double scale = abs_scale(num, r.value);
      if (std::abs(num.eval(r.value)) <= cancel_tol * scale) {
        // deflate num at its own nearby root so no remainder is dropped
        cplx rn = r.value;
        const CPoly dnum = num.derivative();
        for (int it = 0; it < 30; ++it) {
          cplx d = dnum.eval(rn);
          if (d == cplx(0.0)) break;
          cplx step = num.eval(rn) / d;
          if (std::abs(step) > 1e-3 * (1.0 + std::abs(r.value))) break;
          rn -= step;
          if (std::abs(step) <= 1e-16 * (1.0 + std::abs(rn))) break;
        }
        if (std::abs(num.eval(rn)) > std::abs(num.eval(r.value))) rn = r.value;
        CPoly n2 = deflate(num, rn), d2 = deflate(den, r.value);
        if (!same_function(num, den, n2, d2, r.value)) continue;
        num = std::move(n2);
        den = std::move(d2);
        changed = true;
        break;
      }
    }
  }
  cplx lead = den.lead();
  return {num * (1.0 / lead), den * (1.0 / lead)};
}

QRatFun reduce(const QRatFun& f) {
  if (f.den.is_zero()) fail(ErrorKind::DegenerateInput, "rational function with zero denominator");
  if (f.num.is_zero()) return {QPoly(), QPoly(1)};
  QPoly g = poly_gcd(f.num, f.den);
  QPoly num = exact_div(f.num, g);
  QPoly den = exact_div(f.den, g);
  GaussRational inv = GaussRational(1) / den.lead();
  return {num * inv, den * inv};
}

std::vector<Root> poles(const CRatFun& f, const Tolerances& tol) {
  if (f.den.degree() < 1) return {};
  return poly_roots(f.den, tol);
}

CRatFun reflect(const CRatFun& f) {
  // f(1/conj t)^* = t^{dd} N^#(t) / (t^{dn} D^#(t)); balance the powers of t.
  const int dn = f.num.degree();
  const int dd = f.den.degree();
  if (f.num.is_zero()) return {CPoly(), CPoly(1)};
  CPoly n = reflect(f.num, dn);
  CPoly d = reflect(f.den, dd);
  if (dd >= dn) n = n.shifted(dd - dn);
  else d = d.shifted(dn - dd);
  return reduce(CRatFun{n, d});
}

QRatFun reflect(const QRatFun& f) {
  const int dn = f.num.degree();
  const int dd = f.den.degree();
  if (f.num.is_zero()) return {QPoly(), QPoly(1)};
  QPoly n = reflect(f.num, dn);
  QPoly d = reflect(f.den, dd);
  if (dd >= dn) n = n.shifted(dd - dn);
  else d = d.shifted(dn - dd);
  return reduce(QRatFun{n, d});
}

CRatFun derivative(const CRatFun& f) {
  return {f.num.derivative() * f.den - f.num * f.den.derivative(), f.den * f.den};
}

}  // namespace qdom
