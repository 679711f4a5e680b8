#include "qdom/symbols/matrix_symbol.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

namespace qdom {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

MatrixSymbol::MatrixSymbol(int m, std::vector<CRatFun> entries) : m_(m), entries_(std::move(entries)) {
  if (m < 1 || entries_.size() != static_cast<size_t>(m * m))
    fail(ErrorKind::DegenerateInput, "symbol needs m*m entries");
  for (auto& e : entries_) e = reduce(e);
}

MatrixSymbol::MatrixSymbol(int m, std::vector<QRatFun> entries) : m_(m) {
  if (m < 1 || entries.size() != static_cast<size_t>(m * m))
    fail(ErrorKind::DegenerateInput, "symbol needs m*m entries");
  for (auto& e : entries) {
    e = reduce(e);
    entries_.push_back(reduce(to_float(e)));
  }
  exact_ = std::move(entries);
}

MatrixSymbol MatrixSymbol::shift(int m) {
  std::vector<CRatFun> e(static_cast<size_t>(m * m), CRatFun(CPoly()));
  for (int i = 0; i < m; ++i) e[static_cast<size_t>(i * m + i)] = CRatFun(CPoly{0.0, 1.0});
  return MatrixSymbol(m, std::move(e));
}

CMat MatrixSymbol::eval(cplx t) const {
  CMat out(m_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) out(i, j) = qdom::eval(entry(i, j), t);
  return out;
}

MatrixSymbol MatrixSymbol::boundary_adjoint() const {
  if (exact_) {
    std::vector<QRatFun> e;
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) e.push_back(reflect((*exact_)[static_cast<size_t>(j * m_ + i)]));
    return MatrixSymbol(m_, std::move(e));
  }
  std::vector<CRatFun> e;
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) e.push_back(reflect(entry(j, i)));
  return MatrixSymbol(m_, std::move(e));
}

MatrixSymbol MatrixSymbol::rotated(cplx xi) const {
  std::vector<CRatFun> e;
  for (const auto& f : entries_) {
    auto sub = [&](const CPoly& p) {
      std::vector<cplx> c = p.coeffs();
      cplx pw = 1.0;
      for (auto& x : c) {
        x *= pw;
        pw *= xi;
      }
      return CPoly(std::move(c));
    };
    e.push_back({sub(f.num), sub(f.den)});
  }
  MatrixSymbol out(m_, std::move(e));
  return out;
}

std::vector<Root> MatrixSymbol::poles(const Tolerances& tol) const {
  std::vector<Root> out;
  for (const auto& f : entries_) {
    for (const auto& p : qdom::poles(f, tol)) {
      bool merged = false;
      for (auto& o : out)
        if (std::abs(o.value - p.value) <= 1e-7 * (1.0 + std::abs(p.value))) {
          o.multiplicity = std::max(o.multiplicity, p.multiplicity);
          merged = true;
          break;
        }
      if (!merged) out.push_back(p);
    }
  }
  return out;
}

std::pair<Matrix<CPoly>, CPoly> MatrixSymbol::common_denominator(const Tolerances& tol) const {
  std::vector<cplx> roots;
  for (const auto& p : poles(tol))
    for (int k = 0; k < p.multiplicity; ++k) roots.push_back(p.value);
  CPoly d = from_roots(roots);
  Matrix<CPoly> n(static_cast<size_t>(m_), std::vector<CPoly>(static_cast<size_t>(m_)));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      const auto& f = entry(i, j);
      // d / den is a polynomial up to rounding.
      n[static_cast<size_t>(i)][static_cast<size_t>(j)] = f.num * divmod(d, f.den).first;
    }
  return {n, d};
}

MatrixSymbol operator+(const MatrixSymbol& a, const MatrixSymbol& b) {
  if (a.m() != b.m()) fail(ErrorKind::DegenerateInput, "symbol size mismatch");
  std::vector<CRatFun> e;
  for (size_t k = 0; k < a.entries().size(); ++k) e.push_back(a.entries()[k] + b.entries()[k]);
  return MatrixSymbol(a.m(), std::move(e));
}

MatrixSymbol operator*(const MatrixSymbol& a, const MatrixSymbol& b) {
  if (a.m() != b.m()) fail(ErrorKind::DegenerateInput, "symbol size mismatch");
  const int m = a.m();
  std::vector<CRatFun> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      CRatFun acc(CPoly{});
      for (int k = 0; k < m; ++k) acc = reduce(acc + a.entry(i, k) * b.entry(k, j));
      e.push_back(acc);
    }
  return MatrixSymbol(m, std::move(e));
}

std::vector<cplx> eigenvalues(const CMat& a) {
  Eigen::ComplexEigenSolver<CMat> es(a, false);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double normality_defect(const MatrixSymbol& F, int samples) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    cplx t = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.37) / samples);
    CMat f = F.eval(t);
    double nf = opnorm(f);
    worst = std::max(worst, opnorm(f * f.adjoint() - f.adjoint() * f) / (1.0 + nf * nf));
  }
  return worst;
}

namespace {

Tri combine(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

bool has_match(const std::vector<cplx>& set, cplx c, double radius) {
  for (auto x : set)
    if (std::abs(x - c) <= radius) return true;
  return false;
}

}  // namespace

SymbolFlags classify_symbol(const MatrixSymbol& F, const Tolerances& tol, unsigned seed) {
  SymbolFlags out;

  // Normality on the circle; a defect between tol and 100 tol is indeterminate.
  out.normal_margin = normality_defect(F, 64);
  if (out.normal_margin <= tol.normal) out.normal = Tri::True;
  else if (out.normal_margin > 100.0 * tol.normal) out.normal = Tri::False;
  else out.normal = Tri::Unknown;

  // Analyticity on the closed disc.
  auto poles = F.poles(tol);
  out.pole_margin = std::numeric_limits<double>::infinity();
  out.analytic_closed_disc = Tri::True;
  for (const auto& p : poles) {
    double r = std::abs(p.value);
    out.pole_margin = std::min(out.pole_margin, std::abs(r - 1.0));
    if (std::abs(r - 1.0) <= tol.boundary_pole) out.analytic_closed_disc = combine(out.analytic_closed_disc, Tri::Unknown);
    else if (r < 1.0) out.analytic_closed_disc = Tri::False;
  }

  // Non-degeneracy: a constant eigenvalue branch survives spectrum intersection.
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> rad(0.0, 0.9), ang(0.0, 2.0 * std::numbers::pi);
  auto sample = [&]() {
    for (;;) {
      cplx t = std::polar(rad(rng), ang(rng));
      CMat f = F.eval(t);
      if (f.allFinite()) return eigenvalues(f);
    }
  };
  const double match = 1e-6;
  std::vector<cplx> cand = sample();
  for (int k = 1; k < 8 && !cand.empty(); ++k) {
    auto ev = sample();
    std::vector<cplx> keep;
    for (auto c : cand)
      if (has_match(ev, c, match * (1.0 + std::abs(c)))) keep.push_back(c);
    cand = std::move(keep);
  }
  for (int k = 0; k < 64 && !cand.empty(); ++k) {
    auto ev = sample();
    std::vector<cplx> keep;
    for (auto c : cand)
      if (has_match(ev, c, match * (1.0 + std::abs(c)))) keep.push_back(c);
    cand = std::move(keep);
  }
  out.constant_eigenvalues = cand;
  out.nondegenerate = cand.empty() ? Tri::True : Tri::False;

  out.ndarn_member = combine(combine(out.normal, out.analytic_closed_disc), out.nondegenerate);
  return out;
}

SymbolFlags classify_symbol(MatrixSymbol& F, const Tolerances& tol, unsigned seed) {
  SymbolFlags f = classify_symbol(static_cast<const MatrixSymbol&>(F), tol, seed);
  F.normal = f.normal;
  F.analytic_closed_disc = f.analytic_closed_disc;
  F.nondegenerate = f.nondegenerate;
  return f;
}

}  // namespace qdom
