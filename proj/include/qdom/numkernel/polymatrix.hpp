#pragma once

#include <Eigen/Dense>

#include "qdom/numkernel/resultant.hpp"

namespace qdom {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

template <class R>
Matrix<R> mat_identity(size_t n, const R& one = R(1)) {
  Matrix<R> m(n, std::vector<R>(n, R(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = one;
  return m;
}

template <class R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Matrix<R> c(n, std::vector<R>(p, R(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

template <class R>
Matrix<R> mat_add(Matrix<R> a, const Matrix<R>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

template <class R, class X>
Matrix<R> mat_scale(Matrix<R> a, const X& s) {
  for (auto& row : a)
    for (auto& x : row) x = x * s;
  return a;
}

/// Lifts a constant matrix into a polynomial matrix.
template <class S>
Matrix<Poly<S>> mat_const(const Matrix<S>& a) {
  Matrix<Poly<S>> out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& x : a[i]) out[i].push_back(Poly<S>(x));
  return out;
}

inline CMat to_eigen(const Matrix<cplx>& a) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  const Eigen::Index p = n == 0 ? 0 : static_cast<Eigen::Index>(a[0].size());
  CMat m(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) m(i, j) = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

inline CMat to_eigen(const Matrix<GaussRational>& a) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  const Eigen::Index p = n == 0 ? 0 : static_cast<Eigen::Index>(a[0].size());
  CMat m(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) m(i, j) = a[static_cast<size_t>(i)][static_cast<size_t>(j)].to_complex();
  return m;
}

inline Matrix<GaussRational> to_exact(const CMat& a) {
  Matrix<GaussRational> m(static_cast<size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m[static_cast<size_t>(i)].push_back(GaussRational::from_complex(a(i, j)));
  return m;
}

inline CMat eval(const Matrix<CPoly>& a, cplx t) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  const Eigen::Index p = n == 0 ? 0 : static_cast<Eigen::Index>(a[0].size());
  CMat m(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) m(i, j) = a[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(t);
  return m;
}

inline Matrix<CPoly> to_float(const Matrix<QPoly>& a) {
  Matrix<CPoly> out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& x : a[i]) out[i].push_back(to_float(x));
  return out;
}

/// Largest singular value.
inline double opnorm(const CMat& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<CMat>(a).singularValues()(0);
}

}  // namespace qdom
