#pragma once

// Dense univariate polynomials over a coefficient ring R.
//
// R is one of: std::complex<double> (float backend), GaussRational (exact
// backend), or Poly<...> itself, which gives multivariate polynomials in
// recursive form. Coefficients are stored in ascending degree order and the
// representation never carries a trailing exact zero.

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "qdom/error.hpp"
#include "qdom/numkernel/gaussian_rational.hpp"

namespace qdom {

using cplx = std::complex<double>;

inline bool is_zero(const cplx& x) { return x == cplx(0.0, 0.0); }
inline cplx exact_div(const cplx& a, const cplx& b) { return a / b; }

template <class R>
struct is_exact : std::false_type {};
template <>
struct is_exact<GaussRational> : std::true_type {};

namespace detail {
template <class R>
bool coeff_is_zero(const R& x) {
  return is_zero(x);
}
}  // namespace detail

template <class R>
class Poly;
template <class R>
struct is_exact<Poly<R>> : is_exact<R> {};
template <class R>
inline constexpr bool is_exact_v = is_exact<R>::value;

template <class R>
class Poly {
 public:
  using value_type = R;

  Poly() = default;
  Poly(int c) : Poly(R(c)) {}  // NOLINT: ring constant
  explicit Poly(R c) {
    if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<R> c) : c_(c) { trim(); }

  static Poly monomial(R c, int deg) {
    std::vector<R> v(static_cast<size_t>(deg) + 1, R(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
  }
  /// c0 + c1 * t
  static Poly linear(R c0, R c1) { return Poly(std::vector<R>{std::move(c0), std::move(c1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int k) const { return (k >= 0 && k <= degree()) ? c_[static_cast<size_t>(k)] : R(0); }
  const R& lead() const {
    if (c_.empty()) fail(ErrorKind::DegenerateInput, "leading coefficient of the zero polynomial");
    return c_.back();
  }

  template <class X>
  X eval(const X& x) const {
    X acc = X(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }
  R operator()(const R& x) const { return eval<R>(x); }

  Poly derivative() const {
    std::vector<R> d;
    for (int k = 1; k <= degree(); ++k) d.push_back(R(k) * c_[static_cast<size_t>(k)]);
    return Poly(std::move(d));
  }

  /// p(t) * t^k
  Poly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<R> v(static_cast<size_t>(k), R(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<Out> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Poly<Out>(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const R& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

inline cplx conj_coeff(const cplx& z) { return std::conj(z); }
inline GaussRational conj_coeff(const GaussRational& z) { return z.conj(); }
template <class R>
Poly<R> conj_coeff(const Poly<R>& p) {
  return p.map([](const R& c) { return conj_coeff(c); });
}

/// Long division a = q*b + r with deg r < deg b. Leading-coefficient division
/// uses exact_div, so nested rings divide recursively.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) fail(ErrorKind::DegenerateInput, "polynomial division by zero");
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly<R>(), a};
  std::vector<R> quo(static_cast<size_t>(da - db + 1), R(0));
  const auto& bc = b.coeffs();
  for (int k = da - db; k >= 0; --k) {
    const R& top = rem[static_cast<size_t>(k + db)];
    if (is_zero(top)) continue;
    R q = exact_div(top, b.lead());
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= q * bc[static_cast<size_t>(j)];
    if constexpr (!is_exact_v<R>) rem[static_cast<size_t>(k + db)] = R(0);
    quo[static_cast<size_t>(k)] = std::move(q);
  }
  rem.resize(static_cast<size_t>(db));
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

/// Division known to be exact. In exact rings a nonzero remainder is an error;
/// in floating rings the remainder is discarded.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  auto [q, r] = divmod(a, b);
  if constexpr (is_exact_v<R>) {
    if (!r.is_zero()) fail(ErrorKind::DegenerateInput, "exact polynomial division left a remainder");
  }
  return q;
}

/// Monic gcd over an exact field.
template <class R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b) {
  static_assert(is_exact_v<R>, "poly_gcd is only meaningful over an exact field");
  if (!b.is_zero()) b = b * (R(1) / b.lead());
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    if (!r.is_zero()) r = r * (R(1) / r.lead());
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  R inv = R(1) / a.lead();
  return a * inv;
}

/// q(s) = p(x0 + s).
template <class R>
Poly<R> taylor_shift(const Poly<R>& p, const R& x0) {
  Poly<R> acc;
  const Poly<R> lin = Poly<R>::linear(x0, R(1));
  for (int k = p.degree(); k >= 0; --k) acc = acc * lin + Poly<R>(p.coeff(k));
  return acc;
}

/// t^n * conj(p(1/conj(t))), i.e. reversed conjugated coefficients of length n+1.
template <class R>
Poly<R> reflect(const Poly<R>& p, int n) {
  std::vector<R> v(static_cast<size_t>(n) + 1, R(0));
  for (int k = 0; k <= p.degree(); ++k) {
    if (n - k < 0) fail(ErrorKind::DegenerateInput, "reflection degree below polynomial degree");
    v[static_cast<size_t>(n - k)] = conj_coeff(p.coeff(k));
  }
  return Poly<R>(std::move(v));
}

inline double max_abs_coeff(const Poly<cplx>& p) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

/// Drops trailing coefficients below rel * max|coeff| (float backend cleanup).
inline Poly<cplx> trim_relative(const Poly<cplx>& p, double rel) {
  double m = max_abs_coeff(p);
  std::vector<cplx> v = p.coeffs();
  while (!v.empty() && std::abs(v.back()) <= rel * m) v.pop_back();
  return Poly<cplx>(std::move(v));
}

inline Poly<cplx> to_float(const Poly<GaussRational>& p) {
  return p.map([](const GaussRational& c) { return c.to_complex(); });
}
inline Poly<GaussRational> to_exact(const Poly<cplx>& p) {
  return p.map([](const cplx& c) { return GaussRational::from_complex(c); });
}

using CPoly = Poly<cplx>;
using QPoly = Poly<GaussRational>;

}  // namespace qdom
