#include <doctest.h>

#include <random>

#include "qdom/numkernel/bivar_fit.hpp"
#include "qdom/numkernel/ratfun.hpp"
#include "qdom/numkernel/resultant.hpp"
#include "qdom/numkernel/roots.hpp"

using namespace qdom;

namespace {

cplx rand_c(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

CPoly rand_poly(std::mt19937& rng, int deg) {
  std::vector<cplx> c;
  for (int k = 0; k <= deg; ++k) c.push_back(rand_c(rng));
  return CPoly(c);
}

QPoly q(std::initializer_list<int> c) {
  std::vector<GaussRational> v;
  for (int x : c) v.emplace_back(x);
  return QPoly(v);
}

}  // namespace

TEST_CASE("gaussian rationals parse exactly") {
  auto x = GaussRational::parse("3/10", "-0.25");
  CHECK(x.re() == mpq_class(3, 10));
  CHECK(x.im() == mpq_class(-1, 4));
  CHECK(GaussRational::parse("1e-2").re() == mpq_class(1, 100));
  CHECK_THROWS_AS(GaussRational::parse("abc"), Error);
  CHECK(GaussRational::from_double(0.1).re().get_d() == 0.1);
}

TEST_CASE("poly arithmetic and division") {
  CPoly a{1.0, 2.0, 1.0};
  CPoly b{1.0, 1.0};
  CHECK(a == b * b);
  auto [qq, r] = divmod(a, b);
  CHECK(qq == b);
  CHECK(r.is_zero());
  CHECK(a.derivative() == CPoly{2.0, 2.0});
  QPoly x = q({-1, 0, 1});
  QPoly y = q({1, 1});
  CHECK(poly_gcd(x, y) == y);
  CHECK_THROWS_AS(exact_div(x, q({2, 1})), Error);
}

TEST_CASE("roots of t^2+1") {
  auto roots = poly_roots(CPoly{1.0, 0.0, 1.0});
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(r.multiplicity == 1);
    CHECK(std::abs(std::abs(r.value.imag()) - 1.0) < 1e-14);
    CHECK(std::abs(r.value.real()) < 1e-14);
  }
  CHECK_THROWS_AS(poly_roots(CPoly{3.0}), Error);
  CHECK_THROWS_AS(poly_roots(CPoly{}), Error);
}

TEST_CASE("multiple roots are clustered") {
  CPoly p = from_roots({0.5, 0.5, cplx(0, 2)});
  auto roots = poly_roots(p);
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  CHECK(total == 3);
  bool found = false;
  for (const auto& r : roots)
    if (r.multiplicity == 2) found = found || std::abs(r.value - 0.5) < 1e-9;
  CHECK(found);
}

TEST_CASE("random monic quintics: residual property") {
  std::mt19937 rng(42);
  for (int it = 0; it < 50; ++it) {
    CPoly p = rand_poly(rng, 4) + CPoly::monomial(1.0, 5);
    auto roots = poly_roots(p);
    int total = 0;
    for (const auto& r : roots) {
      total += r.multiplicity;
      CHECK(std::abs(p.eval(r.value)) < 1e-8);
      CHECK(relative_residual(p, r.value) <= Tolerances{}.root);
    }
    CHECK(total == 5);
  }
}

TEST_CASE("resultant small cases") {
  cplx a(0.3, -1.0), b(2.0, 0.5);
  CHECK(std::abs(resultant(CPoly{-a, 1.0}, CPoly{-b, 1.0}) - (a - b)) < 1e-14);
  // Res_t(t^2 - s, t - 1) = 1 - s
  Poly<CPoly> f{CPoly{0.0, -1.0}, CPoly{}, CPoly{1.0}};
  Poly<CPoly> g{CPoly{-1.0}, CPoly{1.0}};
  auto r = resultant(f, g);
  CHECK(r.value.degree() == 1);
  CHECK(std::abs(r.value.coeff(0) - 1.0) < 1e-14);
  CHECK(std::abs(r.value.coeff(1) + 1.0) < 1e-14);
  CHECK_FALSE(r.leading_drop);

  Poly<QPoly> fq{q({0, -1}), QPoly(), q({1})};
  Poly<QPoly> gq{q({-1}), q({1})};
  auto rq = resultant(fq, gq);
  CHECK(rq.value == q({1, -1}));
}

TEST_CASE("leading coefficient degeneration is reported") {
  // (s - 2) t - 1 loses its t-term at s = 2.
  Poly<CPoly> f{CPoly{-1.0}, CPoly{-2.0, 1.0}};
  Poly<CPoly> g{CPoly{1.0}, CPoly{}, CPoly{1.0}};
  auto r = resultant(f, g);
  CHECK(r.leading_drop);
  REQUIRE(r.degenerate_params.size() == 1);
  CHECK(std::abs(r.degenerate_params[0] - 2.0) < 1e-12);
}

TEST_CASE("planted common root: parametric resultant vanishes") {
  std::mt19937 rng(42);
  for (int it = 0; it < 50; ++it) {
    // f(t, s) = (t - s) * u(t) and g(t, s) = (t - s0) * v(t) + (s - s0) * w(t)
    cplx s0 = rand_c(rng);
    CPoly u = rand_poly(rng, 2), v = rand_poly(rng, 2), w = rand_poly(rng, 3);
    Poly<CPoly> f;
    {
      std::vector<CPoly> c(4);
      for (int k = 0; k <= 2; ++k) {
        c[static_cast<size_t>(k) + 1] += CPoly{u.coeff(k)};
        c[static_cast<size_t>(k)] -= CPoly{0.0, u.coeff(k)};
      }
      f = Poly<CPoly>(c);
    }
    Poly<CPoly> g;
    {
      CPoly tv = v * CPoly{-s0, 1.0};
      std::vector<CPoly> c(4);
      for (int k = 0; k <= 3; ++k) c[static_cast<size_t>(k)] = CPoly{tv.coeff(k) - s0 * w.coeff(k), w.coeff(k)};
      g = Poly<CPoly>(c);
    }
    auto r = resultant(f, g);
    double scale = max_abs_coeff(r.value);
    CHECK(std::abs(r.value.eval(s0)) < 1e-8 * std::max(1.0, scale));
  }
}

TEST_CASE("resultant multiplicativity on random instances") {
  std::mt19937 rng(42);
  for (int it = 0; it < 50; ++it) {
    CPoly f = rand_poly(rng, 3), g = rand_poly(rng, 2), h = rand_poly(rng, 3);
    cplx lhs = resultant(f, g * h);
    cplx rhs = resultant(f, g) * resultant(f, h);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("exact resultant is reproducible") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int it = 0; it < 50; ++it) {
    QPoly f = q({d(rng), d(rng), d(rng), 1});
    QPoly g = q({d(rng), d(rng), 1});
    GaussRational r1 = resultant(f, g);
    GaussRational r2 = resultant(f, g);
    CHECK(r1 == r2);
    CHECK(std::abs(r1.to_complex() - resultant(to_float(f), to_float(g))) < 1e-8 * (1.0 + std::abs(r1.to_complex())));
  }
}

TEST_CASE("Bareiss and Laplace agree over a polynomial ring") {
  Matrix<QPoly> m{{q({1, 1}), q({2}), q({0, 0, 1})}, {q({3}), q({0, 1}), q({1})}, {q({1, 2}), q({5}), q({-1, 1})}};
  CHECK(bareiss_det(m) == laplace_det(m));
}

TEST_CASE("rational reduction is idempotent") {
  std::mt19937 rng(42);
  for (int it = 0; it < 50; ++it) {
    cplx common = rand_c(rng);
    CPoly n = rand_poly(rng, 2) * CPoly{-common, 1.0};
    CPoly d = rand_poly(rng, 3) * CPoly{-common, 1.0};
    CRatFun once = reduce(CRatFun{n, d});
    CRatFun twice = reduce(once);
    CHECK(once.den.degree() == 3);
    CHECK(twice.num.degree() == once.num.degree());
    CHECK(twice.den.degree() == once.den.degree());
    for (int k = 0; k <= once.den.degree(); ++k) CHECK(std::abs(once.den.coeff(k) - twice.den.coeff(k)) < 1e-9);
    cplx t(0.3, 0.2);
    CHECK(std::abs(eval(once, t) - n.eval(t) / d.eval(t)) < 1e-8 * (1.0 + std::abs(eval(once, t))));
  }
  QRatFun e{q({-1, 0, 1}), q({2, 2})};
  QRatFun er = reduce(e);
  CHECK(er.num == q({-1, 1}) * GaussRational(mpq_class(1, 2), 0));
  CHECK(reduce(er).num == er.num);
}

TEST_CASE("bivar_fit of 1 - zw and of zero") {
  auto fit = bivar_fit([](cplx z, cplx w) { return 1.0 - z * w; }, 1, 1);
  CHECK(fit.poly.deg_z() == 1);
  CHECK(std::abs(fit.poly.coeff(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(fit.poly.coeff(1, 1) + 1.0) < 1e-14);
  CHECK(std::abs(fit.poly.coeff(1, 0)) == 0.0);
  CHECK(fit.validation_residual < 1e-14);
  CHECK(real_type_defect(fit.poly) < 1e-15);

  auto zero = bivar_fit([](cplx, cplx) { return cplx(0.0); }, 2, 2);
  CHECK(zero.poly.is_zero());
  CHECK_THROWS_AS(bivar_fit([](cplx z, cplx) { return z; }, 40, 0, 3.0, 1.0), Error);
}

TEST_CASE("bivar_fit reports an underestimated degree") {
  auto fit = bivar_fit([](cplx z, cplx w) { return z * z * w; }, 1, 1);
  CHECK(fit.validation_residual > 0.1);
}

TEST_CASE("real-type normalization") {
  // i * (1 - zw) is not real type, the normalized version is.
  CBivar q(std::vector<std::vector<cplx>>{{cplx(0, 1), 0.0}, {0.0, cplx(0, -1)}});
  CHECK(real_type_defect(q) > 1.0);
  CHECK(real_type_defect(real_type_normalize(q)) < 1e-15);
  QBivar e(std::vector<std::vector<GaussRational>>{{GaussRational(0, 1), 0}, {0, GaussRational(0, -1)}});
  CHECK_FALSE(is_real_type(e));
  CHECK(is_real_type(real_type_normalize(e)));
}
