#include "qdom/numkernel/resultant.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "qdom/numkernel/roots.hpp"

namespace qdom {

cplx resultant(const CPoly& f, const CPoly& g) {
  auto s = sylvester(f, g);
  const int n = static_cast<int>(s.size());
  if (n == 0) return 1.0;
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = s[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
}

GaussRational resultant(const QPoly& f, const QPoly& g) { return bareiss_det(sylvester(f, g)); }

namespace {

template <class S>
void report_leading(const Poly<Poly<S>>& f, const Poly<Poly<S>>& g, ParamResultant<S>& out) {
  for (const auto* p : {&f, &g}) {
    const auto& lead = p->lead();
    if (lead.degree() >= 1) {
      out.leading_drop = true;
      for (const auto& r : poly_roots(lead)) out.degenerate_params.push_back(r.value);
    }
  }
}

}  // namespace

ParamResultant<cplx> resultant(const Poly<CPoly>& f, const Poly<CPoly>& g) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::DegenerateInput, "resultant of a zero polynomial");
  ParamResultant<cplx> out;
  const int bound = resultant_degree_bound(f, g);
  const int npts = bound + 1;
  std::vector<cplx> vals(static_cast<size_t>(npts));
  for (int k = 0; k < npts; ++k) {
    cplx s = std::polar(1.0, 2.0 * std::numbers::pi * k / npts);
    auto spec = [&](const Poly<CPoly>& p) { return p.map([&](const CPoly& c) { return c.eval(s); }); };
    CPoly fs = spec(f);
    CPoly gs = spec(g);
    // Keep the generic t-degrees so the Sylvester shape matches the symbolic one.
    std::vector<cplx> fc(static_cast<size_t>(f.degree()) + 1), gc(static_cast<size_t>(g.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) fc[static_cast<size_t>(i)] = fs.coeff(i);
    for (int i = 0; i <= g.degree(); ++i) gc[static_cast<size_t>(i)] = gs.coeff(i);
    auto syl = [&]() {
      const int m = f.degree(), n = g.degree();
      Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(m + n, m + n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) mat(i, i + j) = fc[static_cast<size_t>(m - j)];
      for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) mat(n + i, i + j) = gc[static_cast<size_t>(n - j)];
      return mat;
    }();
    vals[static_cast<size_t>(k)] = (syl.rows() == 0) ? cplx(1.0) : Eigen::PartialPivLU<Eigen::MatrixXcd>(syl).determinant();
  }
  std::vector<cplx> coeffs(static_cast<size_t>(npts));
  for (int j = 0; j < npts; ++j) {
    cplx acc = 0.0;
    for (int k = 0; k < npts; ++k) acc += vals[static_cast<size_t>(k)] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / npts);
    coeffs[static_cast<size_t>(j)] = acc / static_cast<double>(npts);
  }
  out.value = trim_relative(CPoly(std::move(coeffs)), 1e-13);
  report_leading(f, g, out);
  return out;
}

ParamResultant<GaussRational> resultant(const Poly<QPoly>& f, const Poly<QPoly>& g) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::DegenerateInput, "resultant of a zero polynomial");
  ParamResultant<GaussRational> out;
  out.value = bareiss_det(sylvester(f, g));
  report_leading(f, g, out);
  return out;
}

}  // namespace qdom
