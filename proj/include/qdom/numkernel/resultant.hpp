#pragma once

#include <map>
#include <vector>

#include "qdom/numkernel/poly.hpp"

namespace qdom {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact in
/// an integral domain, so R may be a polynomial ring over an exact field.
template <class R>
R bareiss_det(Matrix<R> a) {
  const size_t n = a.size();
  if (n == 0) return R(1);
  R prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      size_t p = k + 1;
      while (p < n && is_zero(a[p][k])) ++p;
      if (p == n) return R(0);
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Division-free cofactor expansion memoized over column subsets (n <= 20).
template <class R>
R laplace_det(const Matrix<R>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return R(1);
  std::vector<std::map<unsigned, R>> memo(static_cast<size_t>(n));
  // minor(row, mask): determinant of rows row..n-1 restricted to columns in mask.
  auto minor = [&](auto&& self, int row, unsigned mask) -> R {
    if (row == n) return R(1);
    auto& m = memo[static_cast<size_t>(row)];
    auto it = m.find(mask);
    if (it != m.end()) return it->second;
    R acc(0);
    int pos = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const R& x = a[static_cast<size_t>(row)][static_cast<size_t>(c)];
      if (!is_zero(x)) {
        R term = x * self(self, row + 1, mask & ~(1u << c));
        if (pos % 2 == 0) acc += term;
        else acc -= term;
      }
      ++pos;
    }
    m.emplace(mask, acc);
    return acc;
  };
  return minor(minor, 0, (n == 32 ? ~0u : ((1u << n) - 1u)));
}

/// Sylvester matrix of f (degree m) and g (degree n): n shifted rows of f's
/// coefficients followed by m shifted rows of g's, leading coefficient first.
template <class R>
Matrix<R> sylvester(const Poly<R>& f, const Poly<R>& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 0 || n < 0) fail(ErrorKind::DegenerateInput, "resultant of a zero polynomial");
  const size_t sz = static_cast<size_t>(m + n);
  Matrix<R> s(sz, std::vector<R>(sz, R(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[static_cast<size_t>(n + i)][static_cast<size_t>(i + k)] = g.coeff(n - k);
  return s;
}

/// Scalar resultants. Float: LU with partial pivoting. Exact: Bareiss.
cplx resultant(const CPoly& f, const CPoly& g);
GaussRational resultant(const QPoly& f, const QPoly& g);

/// Resultant in t of polynomials whose coefficients are polynomials in a
/// parameter s. leading_drop lists parameter values where a t-leading
/// coefficient vanishes (the resultant then may not detect common roots).
template <class S>
struct ParamResultant {
  Poly<S> value;
  bool leading_drop = false;
  std::vector<cplx> degenerate_params;
};

ParamResultant<cplx> resultant(const Poly<CPoly>& f, const Poly<CPoly>& g);
ParamResultant<GaussRational> resultant(const Poly<QPoly>& f, const Poly<QPoly>& g);

/// Upper bound for the parameter degree of Res_t(f, g).
template <class S>
int resultant_degree_bound(const Poly<Poly<S>>& f, const Poly<Poly<S>>& g) {
  int df = 0, dg = 0;
  for (const auto& c : f.coeffs()) df = std::max(df, c.degree());
  for (const auto& c : g.coeffs()) dg = std::max(dg, c.degree());
  return g.degree() * df + f.degree() * dg;
}

}  // namespace qdom
