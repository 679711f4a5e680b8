#include "qdom/numkernel/bivar_fit.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qdom {

namespace {

constexpr double kMaxCondition = 1e12;

cplx node(double r, int k, int n, double offset) {
  return std::polar(r, 2.0 * std::numbers::pi * (k + offset) / n);
}

}  // namespace

BivarFit bivar_fit(const std::function<cplx(cplx, cplx)>& evaluator, int deg_z, int deg_w, double rz, double rw) {
  if (deg_z < 0 || deg_w < 0) fail(ErrorKind::DegenerateInput, "negative degree bound");
  if (rz <= 0.0 || rw <= 0.0) fail(ErrorKind::DegenerateInput, "interpolation radius must be positive");
  BivarFit out;
  out.condition = std::max(std::pow(rz, deg_z), std::pow(rz, -deg_z)) * std::max(std::pow(rw, deg_w), std::pow(rw, -deg_w));
  if (out.condition > kMaxCondition) {
    fail(ErrorKind::ConditioningError,
         "interpolation grid condition estimate " + std::to_string(out.condition) + " exceeds limit; use the exact backend");
  }
  const int nz = deg_z + 1;
  const int nw = deg_w + 1;
  std::vector<std::vector<cplx>> vals(static_cast<size_t>(nz), std::vector<cplx>(static_cast<size_t>(nw)));
  double vmax = 0.0;
  for (int a = 0; a < nz; ++a)
    for (int b = 0; b < nw; ++b) {
      cplx v = evaluator(node(rz, a, nz, 0.0), node(rw, b, nw, 0.0));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        fail(ErrorKind::DegenerateInput, "evaluator is not finite on the interpolation grid");
      vals[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
      vmax = std::max(vmax, std::abs(v));
    }
  // 2D inverse DFT, then undo the radii.
  std::vector<std::vector<cplx>> coef(static_cast<size_t>(nz), std::vector<cplx>(static_cast<size_t>(nw)));
  for (int j = 0; j < nz; ++j)
    for (int k = 0; k < nw; ++k) {
      cplx acc = 0.0;
      for (int a = 0; a < nz; ++a)
        for (int b = 0; b < nw; ++b)
          acc += vals[static_cast<size_t>(a)][static_cast<size_t>(b)] *
                 std::polar(1.0, -2.0 * std::numbers::pi * (static_cast<double>(j * a) / nz + static_cast<double>(k * b) / nw));
      coef[static_cast<size_t>(j)][static_cast<size_t>(k)] = acc / (static_cast<double>(nz * nw) * std::pow(rz, j) * std::pow(rw, k));
    }
  double cmax = 0.0;
  for (auto& row : coef)
    for (auto& c : row) cmax = std::max(cmax, std::abs(c));
  for (auto& row : coef)
    for (auto& c : row)
      if (std::abs(c) < 1e-14 * cmax) c = 0.0;
  out.poly = CBivar(std::move(coef));
  if (vmax == 0.0) return out;

  for (int a = 0; a < nz; ++a)
    for (int b = 0; b < nw; ++b) {
      cplx q = eval(out.poly, node(rz, a, nz, 0.0), node(rw, b, nw, 0.0));
      out.grid_residual = std::max(out.grid_residual, std::abs(q - vals[static_cast<size_t>(a)][static_cast<size_t>(b)]) / vmax);
    }
  double wmax = 0.0, err = 0.0;
  for (int a = 0; a < nz; ++a)
    for (int b = 0; b < nw; ++b) {
      cplx z = node(rz, a, nz, 0.5), w = node(rw, b, nw, 0.5);
      cplx v = evaluator(z, w);
      wmax = std::max(wmax, std::abs(v));
      err = std::max(err, std::abs(v - eval(out.poly, z, w)));
    }
  out.validation_residual = err / std::max(wmax, vmax);
  return out;
}

}  // namespace qdom
