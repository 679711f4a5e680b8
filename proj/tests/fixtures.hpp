#pragma once

#include <algorithm>
#include <numbers>
#include <random>

#include "qdom/numkernel/roots.hpp"
#include "qdom/symbols/compose.hpp"

namespace fx {

using namespace qdom;

inline GaussRational gq(long p, long q = 1) { return GaussRational(mpq_class(p, q), mpq_class(0)); }
inline GaussRational gi(long p, long q = 1) { return GaussRational(mpq_class(0), mpq_class(p, q)); }

inline cplx rand_c(std::mt19937& rng, double r = 1.0) {
  std::uniform_real_distribution<double> u(-r, r);
  return {u(rng), u(rng)};
}

inline cplx rand_disc(std::mt19937& rng, double rmax) {
  std::uniform_real_distribution<double> rad(0.0, rmax), ang(0.0, 6.283185307179586);
  return std::polar(rad(rng), ang(rng));
}

inline cplx rand_circle(std::mt19937& rng) {
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  return std::polar(1.0, ang(rng));
}

/// Random rational in [-1, 1] with denominator 16.
inline GaussRational rand_q(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-16, 16);
  return GaussRational(mpq_class(d(rng), 16), mpq_class(d(rng), 16));
}

/// Rational point on the unit circle ((1 - s^2) + 2 s i) / (1 + s^2).
inline GaussRational rand_unimodular(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-12, 12);
  mpq_class s(d(rng), 7);
  mpq_class den = 1 + s * s;
  GaussRational z((1 - s * s) / den, 2 * s / den);
  return std::uniform_int_distribution<int>(0, 1)(rng) ? z : -z;
}

/// Random m x m Blaschke-Potapov product with `count` rank-one factors and
/// small rational data, so exact arithmetic stays cheap.
inline BlaschkePotapov random_bp(std::mt19937& rng, int m, int count) {
  std::vector<BlaschkeFactorSpec> f;
  for (int k = 0; k < count; ++k) {
    GaussRational a = rand_q(rng);
    while (std::abs(a.to_complex()) > 0.85) a = rand_q(rng);
    std::vector<GaussRational> l;
    for (int i = 0; i < m; ++i) l.push_back(rand_q(rng));
    if (std::all_of(l.begin(), l.end(), [](const GaussRational& x) { return x.is_zero(); })) l[0] = GaussRational(1);
    f.push_back({a, rand_unimodular(rng), rank_one_projection(l)});
  }
  // v: a diagonal unitary followed by a cyclic permutation
  Matrix<GaussRational> v(static_cast<size_t>(m), std::vector<GaussRational>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i) v[static_cast<size_t>((i + 1) % m)][static_cast<size_t>(i)] = rand_unimodular(rng);
  return bp_build(std::move(v), std::move(f));
}

/// Example 2 Blaschke-Potapov product with lambda = 4i/5, a = 5/13, c = 12/13.
inline BlaschkePotapov ex2_bp() {
  GaussRational lam = gi(4, 5);
  auto P1 = rank_one_projection(std::vector<GaussRational>{gq(1), gq(0)});
  auto P2 = rank_one_projection(std::vector<GaussRational>{gq(12, 13), gq(5, 13)});
  return bp_build(mat_identity<GaussRational>(2), {{lam, gq(1), P1}, {-lam, gq(1), P2}});
}

struct Ex2Polys {
  QPoly p, q, r, D;
};

inline Ex2Polys ex2_polys() {
  GaussRational lam = gi(4, 5), a = gq(5, 13), c = gq(12, 13);
  GaussRational lb = lam.conj();
  Ex2Polys e;
  e.p = QPoly{gq(1), gq(0), -(lb * lb)};
  e.r = QPoly{-(lam * lam), gq(0), gq(1)};
  GaussRational mod2 = lam * lb;
  e.q = QPoly{c * c * (gq(1) - lam * lam), gq(2) * a * a * (gq(1) - mod2), c * c * (gq(1) - lb * lb)};
  e.D = e.q * e.q - gq(4) * e.p * e.r;
  return e;
}

/// Disc root of D with the smallest argument (gamma_1).
inline cplx ex2_gamma1() {
  auto roots = poly_roots(ex2_polys().D);
  std::vector<cplx> in;
  for (auto& r : roots)
    if (std::abs(r.value) < 1.0) in.push_back(r.value);
  std::sort(in.begin(), in.end(), [](cplx x, cplx y) { return std::arg(x) < std::arg(y); });
  return in.at(0);
}

/// psi = (2 p eta - q + L (t - g)) / (2 p eta - q - L (t - g)), L = i.
inline ScalarBivarRational ex2_psi(cplx g) {
  auto e = ex2_polys();
  GaussRational L = gi(1), G = GaussRational::from_complex(g);
  std::vector<std::vector<GaussRational>> num(3, std::vector<GaussRational>(2)), den = num;
  for (int j = 0; j <= 2; ++j) {
    num[j][1] = gq(2) * e.p.coeff(j);
    den[j][1] = gq(2) * e.p.coeff(j);
    num[j][0] = -e.q.coeff(j);
    den[j][0] = -e.q.coeff(j);
  }
  num[0][0] += -(L * G);
  num[1][0] += L;
  den[0][0] += L * G;
  den[1][0] += -L;
  return {QBivar(num), QBivar(den)};
}

/// Example 1: t + beta / (t - a) = (t^2 - a t + beta) / (t - a).
inline MatrixSymbol ex1(cplx a, cplx beta) {
  return MatrixSymbol::scalar(CRatFun(CPoly{beta, -a, 1.0}, CPoly{-a, 1.0}));
}

inline bool same_multiset(std::vector<cplx> x, std::vector<cplx> y, double tol) {
  if (x.size() != y.size()) return false;
  for (auto v : x) {
    auto it = std::min_element(y.begin(), y.end(), [&](cplx p, cplx q) { return std::abs(p - v) < std::abs(q - v); });
    if (std::abs(*it - v) > tol) return false;
    y.erase(it);
  }
  return true;
}

/// Example 3: B(t) + t with three rank-one factors at 1/10, -1/10, 0.
inline MatrixSymbol ex3_symbol(cplx eps2 = std::polar(1.0, 2.0 * std::numbers::pi / 3)) {
  auto l1 = std::vector<GaussRational>{gq(12, 13), gq(-5, 13), gq(0)};
  auto l2 = std::vector<GaussRational>{gq(0), gq(12, 13), gq(-5, 13)};
  auto l3 = std::vector<GaussRational>{gq(-5, 13), gq(0), gq(12, 13)};
  auto B = bp_build(mat_identity<GaussRational>(3), {{gq(1, 10), gi(1), rank_one_projection(l1)},
                                                     {gq(-1, 10), GaussRational::from_complex(eps2), rank_one_projection(l2)},
                                                     {gq(0), gq(1), rank_one_projection(l3)}});
  ScalarBivarRational psi(QBivar({{gq(0), gq(1)}, {gq(1), gq(0)}}), QBivar({{gq(1)}}));
  return compose_psi(psi, B);
}

/// Example 2 symbol with gamma_1.
inline MatrixSymbol ex2_symbol() { return compose_psi(ex2_psi(ex2_gamma1()), ex2_bp()); }

}  // namespace fx
