#pragma once

#include <string>
#include <vector>

#include "qdom/numkernel/poly.hpp"

namespace qdom {

/// Q(z, w) = sum a[j][k] z^j w^k, stored densely with trailing zero rows and
/// columns trimmed.
template <class S>
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<std::vector<S>> a) : a_(std::move(a)) { trim(); }

  /// Recursive form: outer variable w, inner variable z.
  static BivarPoly from_nested(const Poly<Poly<S>>& q) {
    std::vector<std::vector<S>> a;
    int dz = -1;
    for (const auto& c : q.coeffs()) dz = std::max(dz, c.degree());
    a.assign(static_cast<size_t>(dz + 1), std::vector<S>(q.coeffs().size(), S(0)));
    for (size_t k = 0; k < q.coeffs().size(); ++k)
      for (int j = 0; j <= q.coeffs()[k].degree(); ++j) a[static_cast<size_t>(j)][k] = q.coeffs()[k].coeff(j);
    return BivarPoly(std::move(a));
  }
  Poly<Poly<S>> to_nested() const {
    std::vector<Poly<S>> outer;
    for (int k = 0; k <= deg_w(); ++k) {
      std::vector<S> inner;
      for (int j = 0; j <= deg_z(); ++j) inner.push_back(coeff(j, k));
      outer.emplace_back(std::move(inner));
    }
    return Poly<Poly<S>>(std::move(outer));
  }

  int deg_z() const { return static_cast<int>(a_.size()) - 1; }
  int deg_w() const { return a_.empty() ? -1 : static_cast<int>(a_[0].size()) - 1; }
  bool is_zero() const { return a_.empty(); }
  S coeff(int j, int k) const {
    if (j < 0 || k < 0 || j > deg_z() || k > deg_w()) return S(0);
    return a_[static_cast<size_t>(j)][static_cast<size_t>(k)];
  }
  const std::vector<std::vector<S>>& coeffs() const { return a_; }

  BivarPoly scaled(const S& c) const {
    auto a = a_;
    for (auto& row : a)
      for (auto& x : row) x *= c;
    return BivarPoly(std::move(a));
  }

  friend bool operator==(const BivarPoly& x, const BivarPoly& y) { return x.a_ == y.a_; }

 private:
  void trim() {
    size_t cols = 0;
    size_t rows = 0;
    for (size_t j = 0; j < a_.size(); ++j)
      for (size_t k = 0; k < a_[j].size(); ++k)
        if (!is_zero_coeff(a_[j][k])) {
          rows = std::max(rows, j + 1);
          cols = std::max(cols, k + 1);
        }
    a_.resize(rows);
    for (auto& row : a_) row.resize(cols, S(0));
  }
  static bool is_zero_coeff(const S& x) { return qdom::is_zero(x); }

  std::vector<std::vector<S>> a_;
};

using CBivar = BivarPoly<cplx>;
using QBivar = BivarPoly<GaussRational>;

cplx eval(const CBivar& q, cplx z, cplx w);
cplx eval(const QBivar& q, cplx z, cplx w);
double max_abs_coeff(const CBivar& q);

CBivar to_float(const QBivar& q);
CBivar trim_relative(const CBivar& q, double rel);

/// max |a_kj - conj(a_jk)| relative to max |a|.
double real_type_defect(const CBivar& q);
bool is_real_type(const QBivar& q);

/// If conj(Q(conj w, conj z)) = kappa * Q(z, w) with |kappa| = 1, returns
/// c * Q with c chosen so the result is real type. The float version picks
/// kappa from the largest coefficient.
CBivar real_type_normalize(const CBivar& q);
QBivar real_type_normalize(const QBivar& q);

/// Deterministic text form of the exact coefficients ("j k re im" lines).
std::string canonical_string(const QBivar& q);

}  // namespace qdom
