#include "qdom/quaddom/example1.hpp"

#include <cmath>
#include <numbers>

#include "qdom/symbols/fourier.hpp"

namespace qdom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_cross(cplx p1, cplx p2, cplx q1, cplx q2) {
  double d1 = cross(p2 - p1, q1 - p1), d2 = cross(p2 - p1, q2 - p1);
  double d3 = cross(q2 - q1, p1 - q1), d4 = cross(q2 - q1, p2 - q1);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

}  // namespace

bool polyline_self_intersects(const std::vector<cplx>& pts) {
  const size_t n = pts.size();
  if (n < 4) return false;
  struct Box {
    double x0, x1, y0, y1;
  };
  std::vector<Box> box(n);
  for (size_t i = 0; i < n; ++i) {
    cplx a = pts[i], b = pts[(i + 1) % n];
    box[i] = {std::min(a.real(), b.real()), std::max(a.real(), b.real()), std::min(a.imag(), b.imag()), std::max(a.imag(), b.imag())};
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closure
      if (box[i].x1 < box[j].x0 || box[j].x1 < box[i].x0 || box[i].y1 < box[j].y0 || box[j].y1 < box[i].y0) continue;
      if (segments_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) return true;
    }
  return false;
}

Example1Scenario example1_build(cplx a, cplx beta, int samples) {
  if (std::abs(a) <= 1.0) fail(ErrorKind::PreconditionViolation, "Example 1 needs |a| > 1");
  if (beta == 0.0) fail(ErrorKind::PreconditionViolation, "Example 1 needs beta != 0");
  Example1Scenario s;
  s.a = a;
  s.beta = beta;
  s.F = MatrixSymbol::scalar(CRatFun(CPoly{beta, -a, 1.0}, CPoly{-a, 1.0}));
  s.Fstar = reflect(s.F.entry(0, 0));

  std::vector<cplx> pts(static_cast<size_t>(samples));
  const cplx c = s.F.eval(0.0)(0, 0);
  double total = 0.0;
  s.min_arg_step = INFINITY;
  for (int k = 0; k < samples; ++k) pts[static_cast<size_t>(k)] = s.F.eval(std::polar(1.0, kTwoPi * k / samples))(0, 0);
  for (int k = 0; k < samples; ++k) {
    double step = std::arg((pts[static_cast<size_t>((k + 1) % samples)] - c) / (pts[static_cast<size_t>(k)] - c));
    s.min_arg_step = std::min(s.min_arg_step, step);
    total += step;
  }
  s.boundary_winding = static_cast<int>(std::lround(total / kTwoPi));
  s.simple_boundary = !polyline_self_intersects(pts);
  s.univalent = s.simple_boundary && s.boundary_winding == 1;
  return s;
}

NodeWeightSet schwartz_nodes_weights(const Example1Scenario& s) {
  if (!s.univalent) fail(ErrorKind::PreconditionViolation, "Schwartz function nodes need a univalent scenario");
  const CRatFun prod = reduce(s.Fstar * derivative(s.F.entry(0, 0)));
  auto pf = partial_fractions(prod);
  auto fstar_poles = poles(s.Fstar);
  NodeWeightSet out;
  for (cplx t0 : {cplx(0.0), 1.0 / std::conj(s.a)}) {
    out.t_nodes.push_back(t0);
    out.nodes.push_back(s.F.eval(t0)(0, 0));
    cplx res = 0.0;
    for (size_t i = 0; i < pf.poles.size(); ++i)
      if (std::abs(pf.poles[i] - t0) < 1e-8) res += pf.coeffs[i][0];
    out.weights.push_back(std::numbers::pi * res);
    int order = 0;
    for (const auto& p : fstar_poles)
      if (std::abs(p.value - t0) < 1e-8) order = p.multiplicity;
    out.orders.push_back(order);
  }
  return out;
}

std::vector<TestFunction> standard_test_functions() {
  return {{"1", [](cplx) { return cplx(1.0); }, {}},
          {"z", [](cplx z) { return z; }, {}},
          {"z^2", [](cplx z) { return z * z; }, {}},
          {"1/(z-5)", [](cplx z) { return 1.0 / (z - 5.0); }, {cplx(5.0)}}};
}

std::vector<QuadratureResidual> verify_quadrature_identity(const Example1Scenario& s, const std::vector<TestFunction>& fs,
                                                           const GridSpec& grid) {
  auto nw = schwartz_nodes_weights(s);
  auto trace = trace_branches(s.F, std::max(grid.n_init, 2 * std::max(grid.nx, grid.ny)));
  for (const auto& f : fs)
    for (cplx p : f.poles)
      if (membership(s.F, p, 1e-9, trace) != Membership::Exterior)
        fail(ErrorKind::InvalidTestFunction, "test function " + f.name + " has a pole in the closed domain");

  std::vector<GridSpec> levels(3, grid);
  for (int l = 0; l < 2; ++l) {
    levels[static_cast<size_t>(l)].nx = grid.nx >> (2 - l);
    levels[static_cast<size_t>(l)].ny = grid.ny >> (2 - l);
  }
  std::vector<std::vector<cplx>> integrals(fs.size());
  for (const GridSpec& g : levels) {
    auto rep = verify_generates_domain(s.F, trace, g);
    // Midpoint rule in y; in x each cell contributes the length of its overlap
    // with the winding-1 intervals, evaluated at the overlap midpoint.
    std::vector<cplx> acc(fs.size(), 0.0);
    for (int j = 0; j < rep.ny; ++j) {
      const double yc = rep.y0 + (j + 0.5) * rep.dy;
      std::vector<cplx> row(fs.size(), 0.0);
      for (auto [xa, xb] : rep.row_intervals[static_cast<size_t>(j)]) {
        int i0 = std::max(0, static_cast<int>(std::floor((xa - rep.x0) / rep.dx)));
        int i1 = std::min(rep.nx - 1, static_cast<int>(std::floor((xb - rep.x0) / rep.dx)));
        for (int i = i0; i <= i1; ++i) {
          double lo = std::max(xa, rep.x0 + i * rep.dx), hi = std::min(xb, rep.x0 + (i + 1) * rep.dx);
          if (hi <= lo) continue;
          cplx z(0.5 * (lo + hi), yc);
          for (size_t k = 0; k < fs.size(); ++k) row[k] += fs[k].f(z) * (hi - lo);
        }
      }
      for (size_t k = 0; k < fs.size(); ++k) acc[k] += row[k];
    }
    for (size_t k = 0; k < fs.size(); ++k) integrals[k].push_back(acc[k] * rep.dy);
  }

  std::vector<QuadratureResidual> out;
  for (size_t k = 0; k < fs.size(); ++k) {
    QuadratureResidual r;
    r.name = fs[k].name;
    for (size_t n = 0; n < nw.nodes.size(); ++n) r.quadrature += nw.weights[n] * fs[k].f(nw.nodes[n]);
    for (cplx I : integrals[k]) r.level_residuals.push_back(std::abs(I - r.quadrature) / (1.0 + std::abs(I)));
    r.integral = (4.0 * integrals[k][2] - integrals[k][1]) / 3.0;
    r.residual = std::abs(r.integral - r.quadrature) / (1.0 + std::abs(r.integral));
    out.push_back(r);
  }
  return out;
}

nlohmann::json to_json(const NodeWeightSet& nw) {
  nlohmann::json nodes = nlohmann::json::array(), weights = nlohmann::json::array();
  for (cplx z : nw.nodes) nodes.push_back({z.real(), z.imag()});
  for (cplx c : nw.weights) weights.push_back({c.real(), c.imag()});
  return {{"nodes", nodes}, {"weights", weights}, {"orders", nw.orders}};
}

}  // namespace qdom
