#include <doctest.h>

#include <functional>
#include <numbers>

#include "fixtures.hpp"
#include "qdom/quaddom/defining.hpp"
#include "qdom/quaddom/example1.hpp"
#include "qdom/quaddom/example2.hpp"
#include "qdom/quaddom/example3.hpp"
#include "qdom/subnormal/params.hpp"

using namespace qdom;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NoData;
}

}  // namespace

TEST_CASE("example1_build preconditions") {
  CHECK(kind_of([] { example1_build(0.9, 0.3); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([] { example1_build(1.0, 0.3); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([] { example1_build(2.0, 0.0); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("polyline self-intersection") {
  std::vector<cplx> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::vector<cplx> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  CHECK_FALSE(polyline_self_intersects(square));
  CHECK(polyline_self_intersects(bowtie));
}

TEST_CASE("Example 1 univalence") {
  auto s = example1_build(2.0, 0.3);
  CHECK(s.univalent);
  CHECK(s.boundary_winding == 1);
  CHECK(s.min_arg_step > 0.0);
  // F(t1) = F(t2) with t1 != t2 iff (t1 - a)(t2 - a) = beta. For a = 1.05 the
  // product ranges over moduli up to 2.05^2 = 4.2025, so beta = 5 stays
  // univalent while beta = 1 identifies t = 0.55 and t = -0.95.
  auto big = example1_build(1.05, 5.0);
  CHECK(big.univalent);
  auto bad = example1_build(1.05, 1.0);
  CHECK_FALSE(bad.univalent);
  CHECK_FALSE(bad.simple_boundary);
  CHECK(kind_of([&] { schwartz_nodes_weights(bad); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("Example 1 nodes and weights") {
  const cplx a = 2.0, beta = 0.3;
  auto s = example1_build(a, beta);
  auto nw = schwartz_nodes_weights(s);
  REQUIRE(nw.nodes.size() == 2);
  auto F = [&](cplx t) { return t + beta / (t - a); };
  CHECK(fx::same_multiset(nw.nodes, {F(0.0), F(1.0 / std::conj(a))}, 1e-12));
  CHECK(std::abs(F(0.0) - cplx(-0.15)) < 1e-15);
  for (int o : nw.orders) CHECK(o == 1);

  // oracle: 1024-point circle integrals of F_*(t) F'(t) around each t-node
  auto Fs = [&](cplx t) { return 1.0 / t + std::conj(beta) * t / (1.0 - std::conj(a) * t); };
  auto dF = [&](cplx t) { return 1.0 - beta / ((t - a) * (t - a)); };
  for (size_t k = 0; k < nw.nodes.size(); ++k) {
    const cplx t0 = nw.t_nodes[k];
    const double rho = 0.1;
    cplx acc = 0.0;
    for (int j = 0; j < 1024; ++j) {
      cplx e = std::polar(1.0, 2.0 * std::numbers::pi * j / 1024);
      cplx t = t0 + rho * e;
      acc += Fs(t) * dF(t) * rho * e;
    }
    cplx res = acc / 1024.0;
    CHECK(std::abs(nw.weights[k] - std::numbers::pi * res) < 1e-12);
  }

  cplx sum = 0.0;
  for (cplx c : nw.weights) sum += c;
  double area = area_from_C(matrix_parameters(s.F).C);
  CHECK(std::abs(sum - area) < 1e-6 * area);

  auto j = to_json(nw);
  CHECK(j["nodes"].size() == 2);
  CHECK(j["weights"][0].size() == 2);
  CHECK(j["orders"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("Example 1 quadrature identity") {
  auto s = example1_build(2.0, 0.3);
  auto res = verify_quadrature_identity(s, standard_test_functions(), GridSpec{2048, 2048});
  REQUIRE(res.size() == 4);
  for (const auto& r : res) {
    INFO(r.name);
    CHECK(r.residual < 1e-3);
    REQUIRE(r.level_residuals.size() == 3);
    CHECK(r.level_residuals[1] < r.level_residuals[0]);
    CHECK(r.level_residuals[2] < r.level_residuals[1]);
  }
}

TEST_CASE("quadrature test function with an interior pole") {
  auto s = example1_build(2.0, 0.3);
  TestFunction f{"1/(z+0.15)", [](cplx z) { return 1.0 / (z + 0.15); }, {cplx(-0.15)}};
  CHECK(kind_of([&] { verify_quadrature_identity(s, {f}, GridSpec{256, 256}); }) ==
        ErrorKind::InvalidTestFunction);
}

TEST_CASE("property: quadrature identity for random univalent Example 1 data") {
  std::mt19937 rng(42);
  int checked = 0;
  for (int c = 0; c < 50; ++c) {
    // |beta| < (|a| - 1)^2 keeps (t1 - a)(t2 - a) away from beta
    std::uniform_real_distribution<double> ra(1.5, 3.0);
    cplx a = std::polar(ra(rng), std::uniform_real_distribution<double>(0, 6.28)(rng));
    double bmax = std::pow(std::abs(a) - 1.0, 2);
    cplx beta = std::polar(std::uniform_real_distribution<double>(0.05, 0.9)(rng) * bmax,
                           std::uniform_real_distribution<double>(0, 6.28)(rng));
    auto s = example1_build(a, beta);
    REQUIRE(s.univalent);
    auto res = verify_quadrature_identity(s, standard_test_functions(), GridSpec{512, 512});
    for (const auto& r : res) CHECK(r.residual < 1e-3);
    ++checked;
  }
  CHECK(checked == 50);
}

// ---------------------------------------------------------------- Example 2

TEST_CASE("Example 2 reference parameters: roots of D") {
  auto s = example2_reference();
  REQUIRE(s.disc_roots.size() == 2);
  CHECK(std::abs(s.gamma1 - cplx(0.0729, -0.6467)) < 1e-3);
  CHECK(s.pairing_defect < 1e-8);
  CHECK(s.D_self_reciprocal);
  CHECK(fx::same_multiset(s.roots, flat_roots(poly_roots(fx::ex2_polys().D)), 1e-12));
}

TEST_CASE("Example 2 preconditions and degeneracy") {
  const GaussRational lam(0, mpq_class(4, 5)), a(mpq_class(5, 13), 0), c(mpq_class(12, 13), 0), L(0, 1);
  CHECK(kind_of([&] { example2_build(lam, a, GaussRational(mpq_class(11, 13), 0), L); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([&] { example2_build(GaussRational(0), a, c, L); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([&] { example2_build(GaussRational(1), a, c, L); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([&] { example2_build(lam, a, c, GaussRational(0)); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([&] { example2_build(lam, a, c, L, 2); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([&] { example2_build(lam, -a, c, L); }) == ErrorKind::PreconditionViolation);
  // c = 0, a = 1, real lambda: D = 4 lambda^2 (t^2 - 1)^2, double roots on the circle
  CHECK(kind_of([&] { example2_build(GaussRational(mpq_class(1, 2), 0), GaussRational(1), GaussRational(0), L); }) ==
        ErrorKind::DegenerateCurve);
}

TEST_CASE("Example 2 symbol agrees with the scalar branch formula") {
  auto s = example2_reference();
  auto b = trace_z_branches(s, 4096);
  REQUIRE(b.z_plus.size() == 4096);
  CHECK(b.product_defect < 1e-8);
  CHECK(b.mean_modulus_plus > b.mean_modulus_minus);
  double worst = 0.0;
  for (size_t k = 0; k < b.thetas.size(); ++k) {
    CMat A = s.F.eval(std::polar(1.0, b.thetas[k]));
    auto ev = Eigen::ComplexEigenSolver<CMat>(A).eigenvalues();
    double d1 = std::max(std::abs(ev(0) - b.z_plus[k]), std::abs(ev(1) - b.z_minus[k]));
    double d2 = std::max(std::abs(ev(1) - b.z_plus[k]), std::abs(ev(0) - b.z_minus[k]));
    worst = std::max(worst, std::min(d1, d2));
  }
  CHECK(worst < 1e-8);
  // the library symbol matches the independently assembled one
  auto G = fx::ex2_symbol();
  for (double th : {0.3, 1.9, 4.4}) CHECK((G.eval(std::polar(1.0, th)) - s.F.eval(std::polar(1.0, th))).norm() < 1e-10);
}

TEST_CASE("Example 2 univalence and domain") {
  auto s = example2_reference();
  auto u = univalence_check(s);
  CHECK(u.pass);
  CHECK(u.arg_increasing);
  CHECK(u.pole_free);
  CHECK(u.min_arg_step > 0.0);
  CHECK(u.pole_candidates.size() == 3);
  auto rep = verify_generates_domain(s.F, GridSpec{512, 512});
  CHECK(rep.passed());
  CHECK(rep.connectivity_estimate == 1);

  // L scaled by 10^3: diagnostic only, the report must be self-consistent
  auto big = example2_build(s.lambda, s.a, s.c, GaussRational(0, 1000));
  auto ub = univalence_check(big);
  CHECK(ub.pass == (ub.arg_increasing && ub.pole_free));
  CHECK(ub.pole_free == ub.disc_poles.empty());
}

TEST_CASE("property: z_plus z_minus = 1 for random Example 2 data") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> rad(0.2, 0.9), ang(0.0, 2.0 * std::numbers::pi), half(0.05, 1.5);
  int checked = 0, attempts = 0;
  while (checked < 50 && attempts < 200) {
    ++attempts;
    cplx lam = std::polar(rad(rng), ang(rng));
    double th = half(rng);
    cplx L = std::polar(0.2 + rad(rng), ang(rng));
    Example2Scenario s;
    try {
      s = example2_build(lam, std::cos(th), std::sin(th), L);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateCurve);
      continue;
    }
    auto b = trace_z_branches(s, 1024);
    CHECK(b.product_defect < 1e-8);
    CHECK(s.pairing_defect < 1e-8);
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("property: D is exactly self-reciprocal for rational data") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> num(1, 15);
  for (int c = 0; c < 50; ++c) {
    // a = (1 - s^2)/(1 + s^2), c = 2 s/(1 + s^2), s in (0, 1)
    mpq_class sq(num(rng), 16);
    mpq_class den = 1 + sq * sq;
    GaussRational a((1 - sq * sq) / den, 0), cc(2 * sq / den, 0);
    GaussRational lam = fx::rand_q(rng);
    while (lam.is_zero() || std::abs(lam.to_complex()) > 0.9) lam = fx::rand_q(rng);
    GaussRational L = fx::rand_q(rng);
    if (L.is_zero()) L = GaussRational(1);
    try {
      auto s = example2_build(lam, a, cc, L);
      CHECK(s.D_self_reciprocal);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateCurve);
    }
  }
}

// ---------------------------------------------------------------- Example 3

TEST_CASE("Example 3 builder") {
  auto F = example3_build();
  auto G = fx::ex3_symbol();
  for (double th : {0.2, 2.2, 5.0}) CHECK((F.eval(std::polar(1.0, th)) - G.eval(std::polar(1.0, th))).norm() < 1e-12);
  CHECK(classify_symbol(F).ndarn_member == Tri::True);
  CHECK(trace_branches(F).component_count == 3);
  auto V = example3_variant();
  CHECK(V.m() == 3);
  CHECK(classify_symbol(V).ndarn_member == Tri::True);
}

// ------------------------------------------------------ defining equations

TEST_CASE("Example 1 defining equation") {
  auto s = example1_build(2.0, 0.3);
  for (Backend b : {Backend::Float, Backend::Exact}) {
    auto d = defining_equation(s, -1, -1, b);
    CHECK(d.deg_z == 2);
    CHECK(d.deg_w == 2);
    double worst = 0.0, scale = 0.0;
    for (int k = 0; k < 256; ++k) {
      cplx t = std::polar(1.0, 2.0 * std::numbers::pi * k / 256);
      cplx z = t + 0.3 / (t - 2.0);
      worst = std::max(worst, std::abs(eval(d.Q, z, std::conj(z))));
      scale = std::max(scale, std::abs(eval(d.Q, z, 0.0)));
    }
    CHECK(worst < 1e-12 * scale);
    CHECK(d.symmetry_defect < 1e-12);
    CHECK(d.validation_residual < 1e-6);
    if (b == Backend::Exact) {
      REQUIRE(d.Q_exact.has_value());
      CHECK(is_real_type(*d.Q_exact));
    }
    CHECK(kind_of([&] { defining_equation(s, 1, 1, b); }) == ErrorKind::DegreeBoundError);
  }
}

TEST_CASE("Example 2 relation between t and z") {
  // eliminating eta gives (z - 1)^2 D(t) - (z + 1)^2 L^2 (t - gamma1)^2 up to a constant
  auto s = example2_reference();
  auto rel = example2_relations(s);
  CHECK(rel.X.deg_z() == 4);
  CHECK(rel.X.deg_w() == 2);
  const CPoly D = to_float(s.D);
  std::mt19937 rng(42);
  cplx ratio0 = 0.0;
  for (int k = 0; k < 20; ++k) {
    cplx t = fx::rand_c(rng, 1.5), z = fx::rand_c(rng, 2.0);
    cplx oracle = (z - 1.0) * (z - 1.0) * D.eval(t) +
                  (z + 1.0) * (z + 1.0) * (t - s.gamma1_exact.to_complex()) * (t - s.gamma1_exact.to_complex());
    cplx ratio = eval(rel.X, t, z) / oracle;
    if (k == 0) ratio0 = ratio;
    CHECK(std::abs(ratio - ratio0) < 1e-10 * std::abs(ratio0));
  }
}

TEST_CASE("Example 2 defining equation") {
  auto s = example2_reference();
  auto e1 = defining_equation(s, -1, -1, Backend::Exact);
  auto e2 = defining_equation(example2_reference(), -1, -1, Backend::Exact);
  CHECK(e1.hash == e2.hash);
  CHECK(e1.hash.size() == 16);
  REQUIRE(e1.Q_exact.has_value());
  CHECK(*e1.Q_exact == *e2.Q_exact);
  CHECK(is_real_type(*e1.Q_exact));
  CHECK(e1.validation_residual < 1e-6);
  // the linear factors z + 1 and w + 1 are reported, not removed
  REQUIRE(e1.z_factors.size() == 1);
  CHECK(std::abs(e1.z_factors[0] + 1.0) < 1e-8);
  REQUIRE(e1.w_factors.size() == 1);
  CHECK(std::abs(e1.w_factors[0] + 1.0) < 1e-8);

  auto f = defining_equation(s, -1, -1, Backend::Float);
  CHECK(f.deg_z == e1.deg_z);
  CHECK(f.deg_w == e1.deg_w);
  double diff = 0.0;
  for (int j = 0; j <= f.deg_z; ++j)
    for (int k = 0; k <= f.deg_w; ++k) diff = std::max(diff, std::abs(f.Q.coeff(j, k) - e1.Q.coeff(j, k)));
  CHECK(diff < 1e-8);

  // independent samples
  auto pts = example2_curve_samples(s, 256, 1234);
  CHECK(normalized_residual(e1.Q, pts) < 1e-6);
  auto j = to_json(e1);
  CHECK(j["hash"] == e1.hash);
  CHECK(j["deg_z"] == e1.deg_z);
}

TEST_CASE("property: defining equation on independent samples for random Example 1 data") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> ra(1.2, 3.0), ang(0.0, 2.0 * std::numbers::pi), rb(0.05, 1.0);
  for (int c = 0; c < 50; ++c) {
    auto s = example1_build(std::polar(ra(rng), ang(rng)), std::polar(rb(rng), ang(rng)));
    auto d = defining_equation(s);
    auto pts = example1_curve_samples(s, 256, 1000u + static_cast<unsigned>(c));
    CHECK(normalized_residual(d.Q, pts) < 1e-6);
    CHECK(d.symmetry_defect < 1e-10);
  }
}

// ------------------------------------------------------- Ahlfors samples

TEST_CASE("Ahlfors sample of the shift") {
  std::vector<cplx> ts{{0.5, 0.2}, {1.3, -0.4}, std::polar(1.0, 0.7)};
  auto pts = ahlfors_curve_sample(MatrixSymbol::shift(1), ts);
  REQUIRE(pts.size() == 3);
  for (const auto& p : pts) {
    CHECK(std::abs(p.z - p.t) < 1e-14);
    CHECK(std::abs(p.w - 1.0 / p.t) < 1e-14);
    CHECK(p.mult == 1);
  }
}

TEST_CASE("Ahlfors sample of Example 1 lies over the domain") {
  auto s = example1_build(2.0, 0.3);
  std::mt19937 rng(42);
  std::vector<cplx> ts;
  for (int k = 0; k < 40; ++k) ts.push_back(fx::rand_disc(rng, 0.98));
  auto trace = trace_branches(s.F);
  for (const auto& p : ahlfors_curve_sample(s.F, ts)) CHECK(membership(s.F, p.z, 1e-9, trace) != Membership::Exterior);
}

TEST_CASE("property: Ahlfors samples are invariant under the involution") {
  std::mt19937 rng(42);
  int cases = 0;
  for (int c = 0; c < 50; ++c) {
    const int m = 2 + c % 2;
    auto B = fx::random_bp(rng, m, m);
    MatrixSymbol F = c % 3 == 0 ? compose_psi(ScalarBivarRational::identity(), B)
                                : compose_psi(ScalarBivarRational(QBivar({{GaussRational(0), GaussRational(1)},
                                                                          {GaussRational(1), GaussRational(0)}}),
                                                                  QBivar({{GaussRational(1)}})),
                                              B);
    std::vector<cplx> grid;
    for (int k = 0; k < 4; ++k) {
      cplx t = std::polar(std::uniform_real_distribution<double>(0.3, 0.9)(rng), std::uniform_real_distribution<double>(0, 6.28)(rng));
      grid.push_back(t);
      grid.push_back(1.0 / std::conj(t));
    }
    auto pts = ahlfors_curve_sample(F, grid);
    CHECK(pts.size() >= 8);
    for (const auto& p : pts) {
      bool found = false;
      for (const auto& q : pts)
        if (std::abs(q.t - 1.0 / std::conj(p.t)) < 1e-12 && std::abs(q.z - std::conj(p.w)) < 1e-8 &&
            std::abs(q.w - std::conj(p.z)) < 1e-8)
          found = true;
      CHECK(found);
    }
    // boundary points are fixed by the involution
    std::vector<cplx> circle;
    for (int k = 0; k < 4; ++k) circle.push_back(fx::rand_circle(rng));
    for (const auto& p : ahlfors_curve_sample(F, circle)) CHECK(std::abs(p.w - std::conj(p.z)) < 1e-8);
    ++cases;
  }
  CHECK(cases == 50);
}
