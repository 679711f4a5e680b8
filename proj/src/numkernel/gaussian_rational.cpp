#include "qdom/numkernel/gaussian_rational.hpp"

#include <cmath>

#include "qdom/error.hpp"

namespace qdom {

GaussRational GaussRational::from_double(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    fail(ErrorKind::DegenerateInput, "cannot convert a non-finite value to an exact rational");
  }
  return {mpq_class(re), mpq_class(im)};
}

namespace {

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorKind::SchemaError, "empty rational literal");
  auto dot = s.find('.');
  auto exp = s.find_first_of("eE");
  if (dot == std::string::npos && exp == std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(ErrorKind::SchemaError, "malformed rational literal '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) fail(ErrorKind::SchemaError, "zero denominator in '" + s + "'");
    return q;
  }
  // Decimal notation, read exactly: mantissa digits over a power of ten.
  std::string mant = s.substr(0, exp);
  long e10 = 0;
  if (exp != std::string::npos) e10 = std::stol(s.substr(exp + 1));
  bool neg = !mant.empty() && mant[0] == '-';
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) mant.erase(0, 1);
  auto d = mant.find('.');
  std::string digits = mant;
  if (d != std::string::npos) {
    e10 -= static_cast<long>(mant.size() - d - 1);
    digits.erase(d, 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    fail(ErrorKind::SchemaError, "malformed decimal literal '" + s + "'");
  }
  mpz_class num(digits, 10);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e10)));
  mpq_class q = e10 >= 0 ? mpq_class(num * pow10) : mpq_class(num, pow10);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

}  // namespace

GaussRational GaussRational::parse(std::string_view re, std::string_view im) {
  return {parse_rational(re), parse_rational(im)};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  mpq_class n = o.norm();
  if (sgn(n) == 0) fail(ErrorKind::DegenerateInput, "division by exact zero");
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

}  // namespace qdom
