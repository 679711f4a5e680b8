#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qdom {

/// Exact complex number p + q i with p, q rational (GMP backed).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(int v) : re_(v), im_(0) {}  // NOLINT: integer literals act as ring constants
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// Exact conversion: every finite double is a dyadic rational.
  static GaussRational from_double(double re, double im = 0.0);
  static GaussRational from_complex(std::complex<double> z) { return from_double(z.real(), z.imag()); }
  /// Parses rationals such as "3/10", "-7", "0.25" (decimal strings are read exactly).
  static GaussRational parse(std::string_view re, std::string_view im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  /// Canonical "p/q" strings for the real and imaginary parts.
  std::string re_string() const { return re_.get_str(); }
  std::string im_string() const { return im_.get_str(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline bool is_zero(const GaussRational& x) { return x.is_zero(); }
inline GaussRational conj(const GaussRational& x) { return x.conj(); }
inline GaussRational exact_div(const GaussRational& a, const GaussRational& b) { return a / b; }

}  // namespace qdom
