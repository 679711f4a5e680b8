#include <doctest.h>

#include "fixtures.hpp"
#include "qdom/hardy/sections.hpp"
#include "qdom/subnormal/params.hpp"
#include "qdom/winding/domain.hpp"

using namespace qdom;
using fx::ex1;

namespace {

MatrixSymbol shift1() { return MatrixSymbol::shift(1); }

CMat random_unitary(std::mt19937& rng, int n) {
  CMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = fx::rand_c(rng);
  Eigen::HouseholderQR<CMat> qr(a);
  return qr.householderQ() * CMat::Identity(n, n);
}

}  // namespace

TEST_CASE("coprime factorization of t") {
  auto f = coprime_factorize(shift1());
  REQUIRE(f.alpha.factors().size() == 1);
  CHECK(std::abs(f.alpha.factors()[0].a_f()) < 1e-14);
  CHECK(std::abs(f.h.eval(0.3)(0, 0) - 1.0) < 1e-12);
  CHECK(f.negative_coeff_norm < 1e-12);
}

TEST_CASE("coprime factorization of Example 1") {
  const cplx a = 2.0, beta = 0.3;
  auto f = coprime_factorize(ex1(a, beta));
  REQUIRE(f.alpha.factors().size() == 2);
  CHECK(std::abs(f.alpha.factors()[0].a_f()) < 1e-12);
  CHECK(std::abs(f.alpha.factors()[1].a_f() - 1.0 / std::conj(a)) < 1e-12);
  for (double th : {0.1, 1.3, 2.9}) {
    cplx t = std::polar(0.7, th);
    cplx expect = blaschke(0.0, 1.0, t) * blaschke(1.0 / std::conj(a), 1.0, t);
    CHECK(std::abs(f.alpha.eval(t)(0, 0) - expect) < 1e-12);
  }
  CHECK(f.negative_coeff_norm < 1e-9);
  // h = G alpha has no poles in the closed disc
  for (const auto& p : f.h.poles()) CHECK(std::abs(p.value) > 1.0);
}

TEST_CASE("property: alpha spans the Hankel kernel") {
  std::mt19937 rng(42);
  int checked = 0;
  for (int it = 0; it < 50; ++it) {
    auto B = fx::random_bp(rng, 2, 2);
    GaussRational c = fx::rand_q(rng);
    auto F = compose_psi(ScalarBivarRational(QBivar({{fx::gq(0), fx::gq(1)}, {c, fx::gq(0)}}), QBivar({{fx::gq(1)}})), B);
    CoprimeFactorization f;
    try {
      f = coprime_factorize(F);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::FactorizationAmbiguous);
      continue;
    }
    ++checked;
    CHECK(f.negative_coeff_norm < 1e-9);
    // dim M equals the Hankel rank of the boundary function of F*
    auto H = hankel_section(F.boundary_adjoint(), 24);
    CHECK(numerical_rank(singular_values(H.mat), 1e-8) == f.alpha.degree());
    // Gamma (alpha p) = 0 for a random polynomial vector p
    const int N = 64, m = 2;
    CVec pv(2 * m);
    for (int k = 0; k < 2 * m; ++k) pv(k) = fx::rand_c(rng);
    std::vector<cplx> samples;
    CVec x = CVec::Zero(N * m);
    const int S = 512;
    for (int k = 0; k < S; ++k) {
      cplx t = std::polar(1.0, 2.0 * std::numbers::pi * k / S);
      CVec pt = pv.head(m) + t * pv.tail(m);
      CVec y = f.alpha.eval(t) * pt;
      for (int n = 0; n < N; ++n) x.segment(n * m, m) += y * std::pow(std::conj(t), n) / static_cast<double>(S);
    }
    auto big = hankel_section(F.boundary_adjoint(), N);
    CHECK((big.mat * x).norm() < 1e-8 * std::max(1.0, big.mat.norm() * x.norm()));
  }
  MESSAGE("factorized ", checked, " of 50");
  CHECK(checked >= 45);
}

TEST_CASE("model basis") {
  auto bt = bp_build(CMat::Identity(1, 1), {0.0}, {1.0}, {CMat::Identity(1, 1)});
  auto b = model_basis(bt);
  CHECK(b.size() == 1);
  CHECK(std::abs(b.eval(0.4)(0, 0) - 1.0) < 1e-15);
  CHECK_THROWS_AS(model_basis(bp_build(CMat::Identity(2, 2), {}, {}, {})), Error);

  // Example 1: {1, k t / (1 - t/a)}
  const cplx a = 2.0;
  auto f = coprime_factorize(ex1(a, 0.3));
  auto e = model_basis(f.alpha);
  REQUIRE(e.size() == 2);
  const double k = std::sqrt(1.0 - 1.0 / std::norm(a));
  cplx t(0.2, -0.5);
  CHECK(std::abs(e.eval(t)(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(e.eval(t)(0, 1) - k * t / (1.0 - t / a)) < 1e-12);
  CHECK(std::abs(eval(e.rational(1)[0], t) - k * t / (1.0 - t / a)) < 1e-12);

  std::mt19937 rng(42);
  for (int it = 0; it < 10; ++it) {
    auto B = fx::random_bp(rng, 2, 3);
    auto mb = model_basis(B);
    CHECK(mb.size() == 3);
    CMat g = gram_matrix([&](cplx s) { return mb.eval(s); });
    CHECK((g - CMat::Identity(3, 3)).norm() < 1e-9);
  }
}

TEST_CASE("matrix parameters of t") {
  auto p = matrix_parameters(shift1());
  CHECK(p.dimM == 1);
  CHECK(std::abs(p.Lambda(0, 0)) < 1e-12);
  CHECK(std::abs(p.C(0, 0) - 1.0) < 1e-12);
  auto q = discriminant_poly(p);
  // 1 - z w
  CHECK(std::abs(q.Q.coeff(0, 0) - 1.0) < 1e-10);
  CHECK(std::abs(q.Q.coeff(1, 1) + 1.0) < 1e-10);
  CHECK(std::abs(q.Q.coeff(1, 0)) < 1e-10);
  auto qe = discriminant_poly(p, true);
  CHECK(std::abs(eval(qe.Q, std::polar(1.0, 0.4), std::polar(1.0, -0.4))) < 1e-10);
  CHECK(std::abs(eval(qe.Q, 0.5, 0.5)) > 0.5);
}

TEST_CASE("Example 1 matrix parameters match the closed forms") {
  const cplx a = 2.0, b = 0.3;
  const cplx ab = std::conj(a), bb = std::conj(b);
  const double k = std::sqrt(1.0 - 1.0 / std::norm(a));
  auto F = ex1(a, b);
  auto p = matrix_parameters(F);
  REQUIRE(p.dimM == 2);
  CMat Ls_closed(2, 2);
  Ls_closed << -bb / ab, k - bb / (ab * ab * k), 0.0, 1.0 / a - bb / (ab * k * k);
  CHECK((p.Lambda_star() - Ls_closed).cwiseAbs().maxCoeff() < 1e-8);

  // R against h1 = 1/t, h2 = k / (t (t - 1/conj(a)))
  std::vector<std::function<CVec(cplx)>> h{
      [](cplx t) { return CVec::Constant(1, 1.0 / t); },
      [&](cplx t) { return CVec::Constant(1, k / (t * (t - 1.0 / ab))); }};
  CMat R = hankel_matrix_against(p, h);
  CMat R_closed(2, 2);
  R_closed << 1.0 - bb / (ab * ab), -bb / (k * ab * ab * ab), -bb / (k * ab * ab * ab), -bb / (k * k * std::pow(ab, 4));
  CHECK((R - R_closed).cwiseAbs().maxCoeff() < 1e-8);
  CHECK((p.C - R_closed.adjoint() * R_closed).cwiseAbs().maxCoeff() < 1e-8);
  CHECK((p.C - p.R.adjoint() * p.R).norm() < 1e-10);

  // nodes are F(0) and F(1/conj a)
  std::vector<cplx> nodes{F.eval(0.0)(0, 0), F.eval(1.0 / ab)(0, 0)};
  CHECK(fx::same_multiset(p.nodes, nodes, 1e-8));
}

TEST_CASE("Example 1 discriminant vanishes on the boundary curve") {
  auto F = ex1(2.0, 0.3);
  auto p = matrix_parameters(F);
  auto q = discriminant_poly(p);
  auto qe = discriminant_poly(p, true);
  CHECK(is_real_type(*qe.Q_exact));
  CHECK(q.symmetry_defect < 1e-8);
  auto tr = trace_branches(F);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (cplx z : tr.branches[0]) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  }
  double qmax = 0.0;
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      cplx z(xmin + (xmax - xmin) * i / 40, ymin + (ymax - ymin) * j / 40);
      qmax = std::max(qmax, std::abs(eval(q.Q, z, std::conj(z))));
    }
  double worst = 0.0, worst_exact = 0.0;
  const size_t n = tr.size();
  for (size_t k = 0; k < 256; ++k) {
    cplx z = tr.branches[0][k * (n - 1) / 256];
    worst = std::max(worst, std::abs(eval(q.Q, z, std::conj(z))));
    worst_exact = std::max(worst_exact, std::abs(eval(qe.Q, z, std::conj(z))));
  }
  CHECK(worst / qmax < 1e-6);
  CHECK(worst_exact / qmax < 1e-6);
}

TEST_CASE("basis rotation transforms (C, Lambda) by conjugation") {
  std::mt19937 rng(42);
  auto F = ex1(cplx(1.5, 0.7), cplx(0.2, -0.4));
  auto f = coprime_factorize(F);
  auto e = model_basis(f.alpha);
  auto p = matrix_parameters(F, [&](cplx t) { return e.eval(t); });
  CMat U = random_unitary(rng, 2);
  auto q = matrix_parameters(F, [&](cplx t) { return CMat(e.eval(t) * U); });
  CHECK((q.Lambda - U.adjoint() * p.Lambda * U).norm() < 1e-10);
  CHECK((q.C - U.adjoint() * p.C * U).norm() < 1e-10);
  CHECK(std::abs(q.C.trace() - p.C.trace()) < 1e-10);
  CHECK(fx::same_multiset(p.nodes, q.nodes, 1e-8));
}

TEST_CASE("area from C") {
  CHECK(area_from_C(CMat::Identity(1, 1)) == doctest::Approx(std::numbers::pi));
  CMat bad(2, 2);
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(area_from_C(bad), Error);
  std::mt19937 rng(42);
  auto F = ex1(2.0, 0.3);
  auto p = matrix_parameters(F);
  CMat U = random_unitary(rng, 2);
  CHECK(area_from_C(U.adjoint() * p.C * U) == doctest::Approx(area_from_C(p.C)).epsilon(1e-12));
  // grid area of F(D)
  auto r = verify_generates_domain(F, GridSpec{2048, 2048});
  double grid_area = static_cast<double>(std::count(r.winding.begin(), r.winding.end(), 1)) * r.dx * r.dy;
  CHECK(std::abs(grid_area - area_from_C(p.C)) / area_from_C(p.C) < 1e-3);
}

TEST_CASE("property: C = R^* R is positive and dim M matches the Hankel rank") {
  std::mt19937 rng(42);
  for (int it = 0; it < 50; ++it) {
    auto B = fx::random_bp(rng, 2, 1 + it % 3);
    auto F = compose_psi(ScalarBivarRational::identity(), B);
    SubnormalParams p;
    try {
      p = matrix_parameters(F);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::FactorizationAmbiguous);
      continue;
    }
    CHECK((p.C - p.R.adjoint() * p.R).norm() < 1e-10 * std::max(1.0, p.C.norm()));
    Eigen::SelfAdjointEigenSolver<CMat> es(p.C);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10 * p.C.norm());
    auto H = hankel_section(F.boundary_adjoint(), 16);
    CHECK(p.dimM == numerical_rank(singular_values(H.mat), 1e-8));
  }
}

TEST_CASE("subnormal params JSON") {
  auto j = to_json(matrix_parameters(ex1(2.0, 0.3)));
  CHECK(j["dimM"] == 2);
  CHECK(j["Lambda"].size() == 2);
  CHECK(j["nodes"].size() == 2);
  CHECK(j["area"].get<double>() > 0.0);
}
