#include "qdom/numkernel/bivar.hpp"

#include <cmath>
#include <sstream>

namespace qdom {

cplx eval(const CBivar& q, cplx z, cplx w) {
  cplx acc = 0.0;
  for (int j = q.deg_z(); j >= 0; --j) {
    cplx row = 0.0;
    for (int k = q.deg_w(); k >= 0; --k) row = row * w + q.coeff(j, k);
    acc = acc * z + row;
  }
  return acc;
}

cplx eval(const QBivar& q, cplx z, cplx w) { return eval(to_float(q), z, w); }

double max_abs_coeff(const CBivar& q) {
  double m = 0.0;
  for (const auto& row : q.coeffs())
    for (const auto& c : row) m = std::max(m, std::abs(c));
  return m;
}

CBivar to_float(const QBivar& q) {
  std::vector<std::vector<cplx>> a;
  for (const auto& row : q.coeffs()) {
    a.emplace_back();
    for (const auto& c : row) a.back().push_back(c.to_complex());
  }
  return CBivar(std::move(a));
}

CBivar trim_relative(const CBivar& q, double rel) {
  double m = max_abs_coeff(q);
  auto a = q.coeffs();
  for (auto& row : a)
    for (auto& c : row)
      if (std::abs(c) <= rel * m) c = 0.0;
  return CBivar(std::move(a));
}

double real_type_defect(const CBivar& q) {
  double m = max_abs_coeff(q);
  if (m == 0.0) return 0.0;
  const int d = std::max(q.deg_z(), q.deg_w());
  double worst = 0.0;
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d; ++k) worst = std::max(worst, std::abs(q.coeff(k, j) - std::conj(q.coeff(j, k))));
  return worst / m;
}

bool is_real_type(const QBivar& q) {
  const int d = std::max(q.deg_z(), q.deg_w());
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d; ++k)
      if (q.coeff(k, j) != q.coeff(j, k).conj()) return false;
  return true;
}

CBivar real_type_normalize(const CBivar& q) {
  // kappa from the largest coefficient: conj(a_jk) = kappa * a_kj.
  int bj = 0, bk = 0;
  double best = -1.0;
  for (int j = 0; j <= q.deg_z(); ++j)
    for (int k = 0; k <= q.deg_w(); ++k)
      if (std::abs(q.coeff(j, k)) > best) {
        best = std::abs(q.coeff(j, k));
        bj = j;
        bk = k;
      }
  if (best <= 0.0) return q;
  cplx partner = q.coeff(bk, bj);
  if (std::abs(partner) < 1e-12 * best) return q;
  cplx kappa = std::conj(q.coeff(bj, bk)) / partner;
  kappa /= std::abs(kappa);
  // c * Q is real type iff c = conj(c) * kappa.
  cplx c = std::sqrt(kappa);
  // Scale so the largest coefficient has modulus 1.
  return q.scaled(c / best);
}

QBivar real_type_normalize(const QBivar& q) {
  if (q.is_zero() || is_real_type(q)) return q;
  int bj = -1, bk = -1;
  for (int j = 0; j <= q.deg_z() && bj < 0; ++j)
    for (int k = 0; k <= q.deg_w(); ++k)
      if (!q.coeff(j, k).is_zero() && !q.coeff(k, j).is_zero()) {
        bj = j;
        bk = k;
        break;
      }
  if (bj < 0) return q;
  GaussRational kappa = q.coeff(bj, bk).conj() / q.coeff(bk, bj);
  // c = 1 + kappa works unless kappa = -1, then c = i.
  GaussRational c = GaussRational(1) + kappa;
  if (c.is_zero()) c = GaussRational(mpq_class(0), mpq_class(1));
  return q.scaled(c);
}

std::string canonical_string(const QBivar& q) {
  std::ostringstream os;
  for (int j = 0; j <= q.deg_z(); ++j)
    for (int k = 0; k <= q.deg_w(); ++k) {
      const auto& c = q.coeff(j, k);
      if (c.is_zero()) continue;
      os << j << ' ' << k << ' ' << c.re_string() << ' ' << c.im_string() << '\n';
    }
  return os.str();
}

}  // namespace qdom
