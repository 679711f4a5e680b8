#include "qdom/subnormal/params.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/FFT>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qdom/numkernel/bivar_fit.hpp"
#include "qdom/numkernel/resultant.hpp"

namespace qdom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kContour = 128;

cplx circle_point(int k, int n) { return std::polar(1.0, kTwoPi * k / n); }

std::string format_values(const std::vector<double>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

CoprimeFactorization coprime_factorize(const MatrixSymbol& F, const Tolerances& tol) {
  const int m = F.m();
  const MatrixSymbol G = F.boundary_adjoint();
  for (int k = 0; k < 4; ++k) {
    if (std::abs(G.eval(std::polar(1.0, 0.3 + 1.7 * k)).determinant()) < 1e-14)
      fail(ErrorKind::PreconditionViolation, "det of the boundary function of F* vanishes identically");
  }

  auto all_poles = G.poles(tol);
  std::vector<Root> inner;
  for (const auto& p : all_poles) {
    if (std::abs(std::abs(p.value) - 1.0) <= tol.boundary_pole) fail(ErrorKind::BoundaryPole, "pole of F* on the unit circle");
    if (std::abs(p.value) < 1.0) inner.push_back(p);
  }
  std::sort(inner.begin(), inner.end(), [](const Root& x, const Root& y) {
    if (std::abs(std::abs(x.value) - std::abs(y.value)) > 1e-12) return std::abs(x.value) < std::abs(y.value);
    return std::arg(x.value) < std::arg(y.value);
  });

  CoprimeFactorization out;
  std::vector<cplx> fa, fxi;
  std::vector<CMat> fP;
  const CMat id = CMat::Identity(m, m);
  auto alpha_at = [&](cplx t) {
    CMat b = id;
    for (size_t n = 0; n < fa.size(); ++n) b = b * (blaschke(fa[n], fxi[n], t) * fP[n] + (id - fP[n]));
    return b;
  };

  for (const auto& pole : inner) {
    const cplx p = pole.value;
    double reach = 1.0;
    for (const auto& q : all_poles)
      if (std::abs(q.value - p) > 1e-12) reach = std::min(reach, std::abs(q.value - p));
    reach = std::min(reach, std::abs(1.0 / std::conj(p) - p));
    const double rho = 0.4 * reach;
    const int max_order = pole.multiplicity + 1;

    for (int guard = 0; guard < m * (max_order + 1); ++guard) {
      // Laurent coefficients A_j of G alpha at p (coefficient of (t - p)^{-j}), scaled by rho^{-j}.
      std::vector<CMat> A(static_cast<size_t>(max_order) + 1, CMat::Zero(m, m));
      double scale = 0.0;
      for (int k = 0; k < kContour; ++k) {
        cplx s = rho * circle_point(k, kContour);
        CMat H = G.eval(p + s) * alpha_at(p + s);
        scale = std::max(scale, opnorm(H));
        for (int j = 1; j <= max_order; ++j) A[static_cast<size_t>(j)] += H * std::pow(circle_point(k, kContour), j);
      }
      int top = 0;
      std::vector<double> sv;
      for (int j = max_order; j >= 1; --j) {
        CMat a = A[static_cast<size_t>(j)] / static_cast<double>(kContour);
        Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
        sv.assign(svd.singularValues().data(), svd.singularValues().data() + m);
        for (auto& x : sv) x /= scale;
        if (sv[0] <= 1e-10) continue;
        int rank = 0;
        for (double x : sv) {
          if (x > 1e-10 && x < 1e-6) {
            fail(ErrorKind::FactorizationAmbiguous,
                 "Laurent coefficient rank is ambiguous at pole; relative singular values " + format_values(sv));
          }
          if (x >= 1e-6) ++rank;
        }
        top = j;
        CMat V = svd.matrixV().leftCols(rank);
        fa.push_back(p);
        fxi.push_back(1.0);
        fP.push_back(V * V.adjoint());
        out.laurent_singular_values.push_back(sv);
        break;
      }
      if (top == 0) break;
      if (guard + 1 == m * (max_order + 1)) fail(ErrorKind::FactorizationAmbiguous, "pole extraction did not terminate");
    }
  }

  out.alpha = bp_build(CMat(id), fa, fxi, fP);

  // h = G alpha, assembled as rational entries and reduced.
  const auto num = out.alpha.numerator();
  const CPoly beta = out.alpha.beta();
  std::vector<CRatFun> ae;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ae.emplace_back(num[static_cast<size_t>(i)][static_cast<size_t>(j)], beta);
  out.h = G * MatrixSymbol(m, std::move(ae));

  // Negative Fourier coefficients of G alpha from boundary samples.
  const int S = 1024;
  std::vector<CMat> samples(S);
  double smax = 0.0;
  for (int k = 0; k < S; ++k) {
    cplx t = circle_point(k, S);
    samples[static_cast<size_t>(k)] = G.eval(t) * out.alpha.eval(t);
    smax = std::max(smax, samples[static_cast<size_t>(k)].cwiseAbs().maxCoeff());
  }
  double worst = 0.0;
  for (int n = 1; n < 64; ++n) {
    CMat c = CMat::Zero(m, m);
    for (int k = 0; k < S; ++k) c += samples[static_cast<size_t>(k)] * circle_point(k * n % S, S);
    worst = std::max(worst, c.cwiseAbs().maxCoeff() / S);
  }
  out.negative_coeff_norm = worst / std::max(smax, 1e-300);
  return out;
}

ModelBasis::ModelBasis(BlaschkePotapov alpha) : alpha_(std::move(alpha)) {
  for (size_t n = 0; n < alpha_.factors().size(); ++n) {
    Eigen::SelfAdjointEigenSolver<CMat> es(alpha_.factors()[n].P_f());
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
      if (es.eigenvalues()[k] > 0.5) elems_.push_back({n, es.eigenvectors().col(k)});
  }
}

CMat ModelBasis::eval(cplx t) const {
  const int mm = m();
  CMat out(mm, size());
  CMat prefix = alpha_.v_f();
  const CMat id = CMat::Identity(mm, mm);
  size_t next = 0;
  for (size_t n = 0; n < alpha_.factors().size(); ++n) {
    const auto& f = alpha_.factors()[n];
    const cplx a = f.a_f();
    const cplx kern = std::sqrt(1.0 - std::norm(a)) / (1.0 - std::conj(a) * t);
    for (; next < elems_.size() && elems_[next].factor == n; ++next)
      out.col(static_cast<Eigen::Index>(next)) = prefix * elems_[next].u * kern;
    CMat P = f.P_f();
    prefix = prefix * (blaschke(a, f.xi_f(), t) * P + (id - P));
  }
  return out;
}

std::vector<CRatFun> ModelBasis::rational(int k) const {
  const auto& e = elems_.at(static_cast<size_t>(k));
  std::vector<BlaschkeFactorSpec> head(alpha_.factors().begin(), alpha_.factors().begin() + static_cast<long>(e.factor));
  BlaschkePotapov prefix(alpha_.v(), head);
  const auto num = prefix.numerator();
  const cplx a = alpha_.factors()[e.factor].a_f();
  const CPoly den = prefix.beta() * CPoly{1.0, -std::conj(a)};
  const double s = std::sqrt(1.0 - std::norm(a));
  std::vector<CRatFun> out;
  for (int i = 0; i < m(); ++i) {
    CPoly acc;
    for (int j = 0; j < m(); ++j) acc += num[static_cast<size_t>(i)][static_cast<size_t>(j)] * (s * e.u(j));
    out.push_back(reduce(CRatFun(acc, den)));
  }
  return out;
}

ModelBasis model_basis(const BlaschkePotapov& alpha) {
  ModelBasis b(alpha);
  if (b.size() == 0) fail(ErrorKind::EmptyModelSpace, "alpha is constant, the model space is trivial");
  return b;
}

CMat gram_matrix(const std::function<CMat(cplx)>& basis, int samples) {
  CMat g;
  for (int k = 0; k < samples; ++k) {
    CMat e = basis(circle_point(k, samples));
    if (k == 0) g = CMat::Zero(e.cols(), e.cols());
    g += e.adjoint() * e;
  }
  return g / static_cast<double>(samples);
}

SubnormalParams matrix_parameters(const MatrixSymbol& F, const Tolerances& tol) {
  auto fac = coprime_factorize(F, tol);
  auto basis = model_basis(fac.alpha);
  return matrix_parameters(F, [&](cplx t) { return basis.eval(t); });
}

SubnormalParams matrix_parameters(const MatrixSymbol& F, const std::function<CMat(cplx)>& basis, int samples) {
  const MatrixSymbol G = F.boundary_adjoint();
  const int m = F.m();
  SubnormalParams out;
  out.samples = samples;
  std::vector<CMat> E(static_cast<size_t>(samples)), GE(static_cast<size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    cplx t = circle_point(k, samples);
    E[static_cast<size_t>(k)] = basis(t);
    GE[static_cast<size_t>(k)] = G.eval(t) * E[static_cast<size_t>(k)];
  }
  const int d = static_cast<int>(E[0].cols());
  out.dimM = d;

  // Lambda^*_{ij} = <G e_j, e_i>
  CMat ls = CMat::Zero(d, d);
  for (int k = 0; k < samples; ++k) ls += E[static_cast<size_t>(k)].adjoint() * GE[static_cast<size_t>(k)];
  ls /= static_cast<double>(samples);
  out.Lambda = ls.adjoint();

  // Gamma e_j = P_-(G e_j): keep the negative frequencies of each component.
  Eigen::FFT<double> fft;
  out.hankel_images.assign(static_cast<size_t>(samples), CMat::Zero(m, d));
  const int half = samples / 2;
  CMat Y = CMat::Zero(static_cast<Eigen::Index>(half) * m, d);  // coefficient vectors for n = -1 .. -half
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < m; ++i) {
      std::vector<cplx> v(static_cast<size_t>(samples)), c;
      for (int k = 0; k < samples; ++k) v[static_cast<size_t>(k)] = GE[static_cast<size_t>(k)](i, j);
      fft.fwd(c, v);
      std::vector<cplx> neg(static_cast<size_t>(samples), 0.0);
      for (int n = 1; n <= half; ++n) {
        cplx cn = c[static_cast<size_t>(samples - n)] / static_cast<double>(samples);
        neg[static_cast<size_t>(samples - n)] = cn;
        Y(static_cast<Eigen::Index>(n - 1) * m + i, j) = cn;
      }
      std::vector<cplx> back;
      fft.inv(back, neg);
      for (int k = 0; k < samples; ++k) out.hankel_images[static_cast<size_t>(k)](i, j) = back[static_cast<size_t>(k)] * static_cast<double>(samples);
    }

  Eigen::JacobiSVD<CMat> svd(Y, Eigen::ComputeThinU);
  out.R = svd.matrixU().leftCols(d).adjoint() * Y;
  out.C = out.R.adjoint() * out.R;
  out.C = 0.5 * (out.C + out.C.adjoint());
  out.nodes = eigenvalues(out.Lambda);
  return out;
}

CMat hankel_matrix_against(const SubnormalParams& p, const std::vector<std::function<CVec(cplx)>>& h) {
  const int n = static_cast<int>(h.size());
  CMat out = CMat::Zero(n, p.dimM);
  for (int k = 0; k < p.samples; ++k) {
    cplx t = circle_point(k, p.samples);
    const CMat& g = p.hankel_images[static_cast<size_t>(k)];
    for (int i = 0; i < n; ++i) out.row(i) += h[static_cast<size_t>(i)](t).adjoint() * g;
  }
  return out / static_cast<double>(p.samples);
}

DiscriminantCurve discriminant_poly(const SubnormalParams& p, bool exact, const Tolerances& tol) {
  const int d = p.dimM;
  const CMat C = 0.5 * (p.C + p.C.adjoint());
  DiscriminantCurve out;
  if (exact) {
    // Entries of C - (w I - Lambda^*)(z I - Lambda) in Poly<Poly<.>> with outer w, inner z.
    using Z = QPoly;
    using W = Poly<QPoly>;
    Matrix<GaussRational> Ce = to_exact(C), Le = to_exact(p.Lambda);
    for (int i = 0; i < d; ++i) {
      Ce[static_cast<size_t>(i)][static_cast<size_t>(i)] = GaussRational(Ce[static_cast<size_t>(i)][static_cast<size_t>(i)].re(), 0);
      for (int j = 0; j < i; ++j) Ce[static_cast<size_t>(i)][static_cast<size_t>(j)] = Ce[static_cast<size_t>(j)][static_cast<size_t>(i)].conj();
    }
    auto Ls = [&](int i, int j) { return Le[static_cast<size_t>(j)][static_cast<size_t>(i)].conj(); };
    Matrix<W> M(static_cast<size_t>(d), std::vector<W>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // (w I - Ls)(z I - L) = w z I - w L - z Ls + Ls L
        GaussRational ll(0);
        for (int k = 0; k < d; ++k) ll += Ls(i, k) * Le[static_cast<size_t>(k)][static_cast<size_t>(j)];
        const GaussRational del = i == j ? GaussRational(1) : GaussRational(0);
        Z w0 = Z{Ce[static_cast<size_t>(i)][static_cast<size_t>(j)] - ll, Ls(i, j)};  // constant in w: C - Ls L + z Ls
        Z w1 = Z{Le[static_cast<size_t>(i)][static_cast<size_t>(j)], -del};                 // coefficient of w: L - z I
        M[static_cast<size_t>(i)][static_cast<size_t>(j)] = W(std::vector<Z>{w0, w1});
      }
    out.Q_exact = QBivar::from_nested(bareiss_det(M));
    if (!is_real_type(*out.Q_exact)) fail(ErrorKind::SymmetryViolation, "exact discriminant is not of real type");
    out.Q = to_float(*out.Q_exact);
    out.symmetry_defect = real_type_defect(out.Q);
    return out;
  }
  const CMat Ls = p.Lambda.adjoint();
  const CMat I = CMat::Identity(d, d);
  auto ev = [&](cplx z, cplx w) { return CMat(C - (w * I - Ls) * (z * I - p.Lambda)).determinant(); };
  double scale = 1.0;
  for (int i = 0; i < d; ++i) scale = std::max(scale, std::abs(p.Lambda(i, i)));
  auto fit = bivar_fit(ev, d, d, scale, scale);
  out.Q = fit.poly;
  out.symmetry_defect = real_type_defect(out.Q);
  if (out.symmetry_defect > tol.symmetry) fail(ErrorKind::SymmetryViolation, "discriminant coefficients are not of real type");
  return out;
}

double area_from_C(const CMat& C) {
  if ((C - C.adjoint()).norm() > 1e-10 * std::max(1.0, C.norm())) fail(ErrorKind::PreconditionViolation, "C is not Hermitian");
  return std::numbers::pi * C.trace().real();
}

nlohmann::json to_json(const SubnormalParams& p) {
  auto mat = [](const CMat& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
      rows.push_back(row);
    }
    return rows;
  };
  nlohmann::json nodes = nlohmann::json::array();
  for (cplx z : p.nodes) nodes.push_back({z.real(), z.imag()});
  return {{"dimM", p.dimM}, {"Lambda", mat(p.Lambda)}, {"R", mat(p.R)}, {"C", mat(p.C)},
          {"nodes", nodes}, {"area", area_from_C(p.C)}};
}

}  // namespace qdom
