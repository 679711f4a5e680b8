#pragma once

#include <vector>

#include "qdom/numkernel/poly.hpp"
#include "qdom/numkernel/roots.hpp"

namespace qdom {

/// num(t) / den(t). Construction does not reduce; call reduce().
template <class S>
struct RatFun {
  Poly<S> num;
  Poly<S> den{S(1)};

  RatFun() = default;
  RatFun(Poly<S> n, Poly<S> d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) fail(ErrorKind::DegenerateInput, "rational function with zero denominator");
  }
  RatFun(Poly<S> n) : num(std::move(n)) {}  // NOLINT: polynomials embed

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den == b.den) return {a.num - b.num, a.den};
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) { return {a.num * b.num, a.den * b.den}; }
  friend RatFun operator-(const RatFun& a) { return {-a.num, a.den}; }
};

using CRatFun = RatFun<cplx>;
using QRatFun = RatFun<GaussRational>;

inline cplx eval(const CRatFun& f, cplx t) { return f.num.eval(t) / f.den.eval(t); }
inline cplx eval(const QRatFun& f, cplx t) { return to_float(f.num).eval(t) / to_float(f.den).eval(t); }

/// Cancels common roots of num and den (tested at den roots with relative
/// tolerance cancel_tol) and makes den monic.
CRatFun reduce(const CRatFun& f, double cancel_tol = 1e-8);
/// Exact reduction by Euclid gcd; den monic.
QRatFun reduce(const QRatFun& f);

/// Poles with multiplicity of a reduced function.
std::vector<Root> poles(const CRatFun& f, const Tolerances& tol = {});

/// f(1/conj(t))^*: conjugate-reflected rational function.
CRatFun reflect(const CRatFun& f);
QRatFun reflect(const QRatFun& f);

CRatFun derivative(const CRatFun& f);

inline CRatFun to_float(const QRatFun& f) { return {to_float(f.num), to_float(f.den)}; }

/// Synthetic division by (t - r); the remainder is dropped.
CPoly deflate(const CPoly& p, cplx r);

}  // namespace qdom
