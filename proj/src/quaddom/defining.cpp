#include "qdom/quaddom/defining.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>

#include "qdom/numkernel/bivar_fit.hpp"
#include "qdom/numkernel/resultant.hpp"
#include "qdom/numkernel/roots.hpp"

namespace qdom {

namespace {

using SPoly = Poly<QPoly>;  // outer s, inner t (or outer w, inner z)

QPoly column(const QBivar& g, int k) {
  std::vector<GaussRational> c;
  for (int j = 0; j <= g.deg_z(); ++j) c.push_back(g.coeff(j, k));
  return QPoly(std::move(c));
}

// X(t; s) as a polynomial in t with float coefficients at fixed s.
CPoly at_s(const QBivar& X, cplx s) {
  std::vector<cplx> c;
  for (int j = 0; j <= X.deg_z(); ++j) {
    cplx acc = 0.0;
    for (int k = X.deg_w(); k >= 0; --k) acc = acc * s + X.coeff(j, k).to_complex();
    c.push_back(acc);
  }
  return CPoly(std::move(c));
}

int max_s_degree(const QBivar& X) { return X.deg_w(); }

// Resultant with the nominal t-degrees m and n, so a vanishing leading
// coefficient at a particular z or w does not change the Sylvester matrix.
cplx resultant_nominal(const CPoly& f, int m, const CPoly& g, int n) {
  const int sz = m + n;
  CMat S = CMat::Zero(sz, sz);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) S(i, i + k) = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) S(n + i, i + k) = g.coeff(n - k);
  return S.partialPivLu().determinant();
}

QBivar resultant_exact(const QBivar& X, const QBivar& Y) {
  // Res_t over the ring of polynomials in (w outer, z inner).
  std::vector<SPoly> xc, yc;
  for (int j = 0; j <= X.deg_z(); ++j) {
    std::vector<GaussRational> zc;
    for (int k = 0; k <= X.deg_w(); ++k) zc.push_back(X.coeff(j, k));
    xc.push_back(SPoly(QPoly(std::move(zc))));
  }
  for (int j = 0; j <= Y.deg_z(); ++j) {
    std::vector<QPoly> wc;
    for (int k = 0; k <= Y.deg_w(); ++k) wc.push_back(QPoly(Y.coeff(j, k)));
    yc.push_back(SPoly(std::move(wc)));
  }
  return QBivar::from_nested(bareiss_det(sylvester(Poly<SPoly>(std::move(xc)), Poly<SPoly>(std::move(yc)))));
}

std::vector<cplx> linear_content(const std::vector<CPoly>& coeffs) {
  const CPoly* lowest = nullptr;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    if (c.degree() == 0) return {};
    if (!lowest || c.degree() < lowest->degree()) lowest = &c;
  }
  if (!lowest) return {};
  std::vector<cplx> out;
  for (const auto& r : poly_roots(*lowest)) {
    bool common = true;
    for (const auto& c : coeffs) {
      double scale = 0.0, pw = 1.0;
      for (const auto& a : c.coeffs()) {
        scale += std::abs(a) * pw;
        pw *= std::abs(r.value);
      }
      if (std::abs(c.eval(r.value)) > 1e-8 * scale) common = false;
    }
    if (common) out.push_back(r.value);
  }
  return out;
}

nlohmann::json cjson(cplx z) { return {z.real(), z.imag()}; }

}  // namespace

std::string_view to_string(Backend b) noexcept { return b == Backend::Exact ? "exact" : "float"; }

Backend parse_backend(std::string_view s) {
  if (s == "float") return Backend::Float;
  if (s == "exact") return Backend::Exact;
  fail(ErrorKind::PreconditionViolation, "unknown backend '" + std::string(s) + "'");
}

QBivar rational_relation(const QPoly& num, const QPoly& den) {
  const int d = std::max(num.degree(), den.degree());
  std::vector<std::vector<GaussRational>> g(static_cast<size_t>(d + 1), std::vector<GaussRational>(2));
  for (int j = 0; j <= d; ++j) {
    g[static_cast<size_t>(j)][0] = num.coeff(j);
    g[static_cast<size_t>(j)][1] = -den.coeff(j);
  }
  return QBivar(std::move(g));
}

QBivar eliminate_eta(const QBivar& curve, const ScalarBivarRational& psi) {
  std::vector<SPoly> f, g;
  for (int k = 0; k <= curve.deg_w(); ++k) f.push_back(SPoly(column(curve, k)));
  const int de = std::max(psi.num.deg_w(), psi.den.deg_w());
  for (int k = 0; k <= de; ++k) g.push_back(SPoly(std::vector<QPoly>{-column(psi.num, k), column(psi.den, k)}));
  SPoly res = bareiss_det(sylvester(Poly<SPoly>(std::move(f)), Poly<SPoly>(std::move(g))));
  if (res.is_zero()) fail(ErrorKind::DegenerateInput, "psi is constant along the curve");
  QPoly content;
  for (const auto& c : res.coeffs()) content = poly_gcd(content, c);
  std::vector<QPoly> reduced;
  for (const auto& c : res.coeffs()) reduced.push_back(exact_div(c, content));
  return QBivar::from_nested(SPoly(std::move(reduced)));
}

CurveRelations example1_relations(const Example1Scenario& s) {
  const GaussRational a = GaussRational::from_complex(s.a), b = GaussRational::from_complex(s.beta);
  const GaussRational ab = a.conj(), bb = b.conj();
  // F = (t^2 - a t + beta) / (t - a), F_* = (1 - conj(a) t + conj(beta) t^2) / (t - conj(a) t^2)
  CurveRelations r;
  r.X = rational_relation(QPoly{b, -a, GaussRational(1)}, QPoly{-a, GaussRational(1)});
  r.Y = rational_relation(QPoly{GaussRational(1), -ab, bb}, QPoly{GaussRational(0), GaussRational(1), -ab});
  return r;
}

CurveRelations example2_relations(const Example2Scenario& s) {
  const QBivar c = s.curve();
  return {eliminate_eta(c, s.psi), eliminate_eta(c, s.psi.reflected())};
}

std::vector<CurvePoint> example1_curve_samples(const Example1Scenario& s, int n, unsigned seed) {
  auto F = [&](cplx t) { return t + s.beta / (t - s.a); };
  auto Fs = [&](cplx t) { return 1.0 / t + std::conj(s.beta) * t / (1.0 - std::conj(s.a) * t); };
  std::vector<CurvePoint> out;
  const int half = n / 2;
  for (int k = 0; k < half; ++k) {
    cplx t = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5) / half + 0.123);
    out.push_back({F(t), Fs(t)});
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> rad(0.3, 0.95), ang(0.0, 2.0 * std::numbers::pi);
  while (static_cast<int>(out.size()) < n) {
    cplx t = std::polar(rad(rng), ang(rng));
    out.push_back({F(t), Fs(t)});
  }
  return out;
}

std::vector<CurvePoint> example2_curve_samples(const Example2Scenario& s, int n, unsigned seed) {
  const CPoly p = to_float(s.p), q = to_float(s.q), r = to_float(s.r);
  const ScalarBivarRational refl = s.psi.reflected();
  std::vector<CurvePoint> out;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> rad(0.3, 0.95), ang(0.0, 2.0 * std::numbers::pi);
  int k = 0;
  while (static_cast<int>(out.size()) < n) {
    cplx t = k % 2 == 0 ? std::polar(1.0, ang(rng)) : std::polar(rad(rng), ang(rng));
    ++k;
    const cplx pt = p.eval(t), qt = q.eval(t), sq = std::sqrt(qt * qt - 4.0 * pt * r.eval(t));
    for (cplx eta : {(qt + sq) / (2.0 * pt), (qt - sq) / (2.0 * pt)}) {
      cplx z = s.psi.eval(t, eta), w = refl.eval(t, eta);
      if (std::isfinite(std::abs(z)) && std::isfinite(std::abs(w)) && std::abs(z) < 1e6 && std::abs(w) < 1e6)
        out.push_back({z, w});
    }
  }
  out.resize(static_cast<size_t>(n));
  return out;
}

double normalized_residual(const CBivar& Q, const std::vector<CurvePoint>& pts) {
  const size_t step = std::max<size_t>(1, pts.size() / 64);
  double box = 0.0;
  for (size_t i = 0; i < pts.size(); i += step)
    for (size_t j = 0; j < pts.size(); j += step) box = std::max(box, std::abs(eval(Q, pts[i].first, pts[j].second)));
  double worst = 0.0;
  for (const auto& [z, w] : pts) worst = std::max(worst, std::abs(eval(Q, z, w)));
  return box > 0.0 ? worst / box : worst;
}

std::pair<std::vector<cplx>, std::vector<cplx>> linear_contents(const CBivar& Q) {
  std::vector<CPoly> zc, wc;
  for (int k = 0; k <= Q.deg_w(); ++k) {
    std::vector<cplx> c;
    for (int j = 0; j <= Q.deg_z(); ++j) c.push_back(Q.coeff(j, k));
    zc.push_back(CPoly(std::move(c)));
  }
  for (int j = 0; j <= Q.deg_z(); ++j) {
    std::vector<cplx> c;
    for (int k = 0; k <= Q.deg_w(); ++k) c.push_back(Q.coeff(j, k));
    wc.push_back(CPoly(std::move(c)));
  }
  return {linear_content(zc), linear_content(wc)};
}

std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DefiningEquation defining_equation(const CurveRelations& rel, const std::vector<CurvePoint>& validation, int deg_z,
                                   int deg_w, Backend backend) {
  const int bound_z = rel.Y.deg_z() * max_s_degree(rel.X);
  const int bound_w = rel.X.deg_z() * max_s_degree(rel.Y);
  if (deg_z < 0) deg_z = bound_z;
  if (deg_w < 0) deg_w = bound_w;
  DefiningEquation d;
  d.backend = backend;
  if (backend == Backend::Exact) {
    QBivar q = resultant_exact(rel.X, rel.Y);
    if (q.is_zero()) fail(ErrorKind::DegenerateInput, "relations share a factor for every (z, w)");
    if (q.deg_z() > deg_z || q.deg_w() > deg_w)
      fail(ErrorKind::DegreeBoundError, "defining equation has degree (" + std::to_string(q.deg_z()) + ", " +
                                            std::to_string(q.deg_w()) + ") above the bound");
    q = real_type_normalize(q);
    d.hash = fnv1a_hex(canonical_string(q));
    d.Q = real_type_normalize(to_float(q));
    d.Q_exact = std::move(q);
  } else {
    auto ev = [&](cplx z, cplx w) {
      return resultant_nominal(at_s(rel.X, z), rel.X.deg_z(), at_s(rel.Y, w), rel.Y.deg_z());
    };
    auto fit = bivar_fit(ev, deg_z, deg_w);
    d.fit_residual = fit.validation_residual;
    d.Q = real_type_normalize(trim_relative(fit.poly, 1e-13));
  }
  d.deg_z = d.Q.deg_z();
  d.deg_w = d.Q.deg_w();
  d.symmetry_defect = real_type_defect(d.Q);
  d.validation_residual = normalized_residual(d.Q, validation);
  if (!(d.validation_residual <= 1e-6))
    fail(ErrorKind::DegreeBoundError, "defining equation does not vanish on the curve samples (residual " +
                                          std::to_string(d.validation_residual) + ")");
  std::tie(d.z_factors, d.w_factors) = linear_contents(d.Q);
  return d;
}

DefiningEquation defining_equation(const Example1Scenario& s, int deg_z, int deg_w, Backend backend) {
  return defining_equation(example1_relations(s), example1_curve_samples(s, 256, 7), deg_z, deg_w, backend);
}

DefiningEquation defining_equation(const Example2Scenario& s, int deg_z, int deg_w, Backend backend) {
  return defining_equation(example2_relations(s), example2_curve_samples(s, 256, 7), deg_z, deg_w, backend);
}

nlohmann::json to_json(const DefiningEquation& d) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int j = 0; j <= d.Q.deg_z(); ++j)
    for (int k = 0; k <= d.Q.deg_w(); ++k) {
      cplx c = d.Q.coeff(j, k);
      if (c != cplx(0.0)) coeffs.push_back({j, k, c.real(), c.imag()});
    }
  nlohmann::json zf = nlohmann::json::array(), wf = nlohmann::json::array();
  for (cplx z : d.z_factors) zf.push_back(cjson(z));
  for (cplx w : d.w_factors) wf.push_back(cjson(w));
  nlohmann::json j = {{"backend", to_string(d.backend)},
                      {"deg_z", d.deg_z},
                      {"deg_w", d.deg_w},
                      {"coefficients", coeffs},
                      {"symmetry_defect", d.symmetry_defect},
                      {"validation_residual", d.validation_residual},
                      {"z_factors", zf},
                      {"w_factors", wf}};
  if (d.backend == Backend::Exact) j["hash"] = d.hash;
  return j;
}

std::vector<AhlforsPoint> ahlfors_curve_sample(const MatrixSymbol& F, const std::vector<cplx>& t_grid) {
  std::vector<AhlforsPoint> out;
  for (cplx t : t_grid) {
    if (std::abs(t) < 1e-12) continue;
    const CMat A = F.eval(t);
    const CMat G = F.eval(1.0 / std::conj(t)).adjoint();
    if (!A.allFinite() || !G.allFinite()) continue;
    Eigen::ComplexEigenSolver<CMat> es(A);
    const auto& ev = es.eigenvalues();
    const Eigen::Index m = A.rows();
    std::vector<bool> used(static_cast<size_t>(m), false);
    const double gscale = 1.0 + G.norm();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (used[static_cast<size_t>(i)]) continue;
      std::vector<Eigen::Index> group;
      for (Eigen::Index j = i; j < m; ++j)
        if (!used[static_cast<size_t>(j)] && std::abs(ev(j) - ev(i)) <= 1e-8 * (1.0 + std::abs(ev(i)))) {
          group.push_back(j);
          used[static_cast<size_t>(j)] = true;
        }
      CMat V(m, static_cast<Eigen::Index>(group.size()));
      cplx z = 0.0;
      for (size_t g = 0; g < group.size(); ++g) {
        V.col(static_cast<Eigen::Index>(g)) = es.eigenvectors().col(group[g]);
        z += ev(group[g]);
      }
      z /= static_cast<double>(group.size());
      Eigen::HouseholderQR<CMat> qr(V);
      CMat U = qr.householderQ() * CMat::Identity(m, V.cols());
      CMat M = U.adjoint() * G * U;
      if ((G * U - U * M).norm() > 1e-6 * gscale) continue;
      Eigen::ComplexEigenSolver<CMat> ms(M);
      const auto& wv = ms.eigenvalues();
      std::vector<bool> wused(static_cast<size_t>(wv.size()), false);
      for (Eigen::Index a = 0; a < wv.size(); ++a) {
        if (wused[static_cast<size_t>(a)]) continue;
        int mult = 0;
        for (Eigen::Index b = a; b < wv.size(); ++b)
          if (!wused[static_cast<size_t>(b)] && std::abs(wv(b) - wv(a)) <= 1e-8 * (1.0 + std::abs(wv(a)))) {
            wused[static_cast<size_t>(b)] = true;
            ++mult;
          }
        out.push_back({z, wv(a), t, mult});
      }
    }
  }
  return out;
}

}  // namespace qdom
