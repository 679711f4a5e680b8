#pragma once

#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "qdom/winding/domain.hpp"

namespace qdom {

/// F(t) = t + beta / (t - a), |a| > 1.
struct Example1Scenario {
  cplx a;
  cplx beta;
  MatrixSymbol F;
  CRatFun Fstar;  // 1/t + conj(beta) t / (1 - conj(a) t)
  bool univalent = false;
  bool simple_boundary = false;  // boundary polyline has no self-intersection
  int boundary_winding = 0;      // winding of F(e^{i theta}) around F(0)
  double min_arg_step = 0.0;     // smallest increment of arg(F(e^{i theta}) - F(0))
};

/// Throws PreconditionViolation unless |a| > 1 and beta != 0.
Example1Scenario example1_build(cplx a, cplx beta, int samples = 4096);

/// True if the closed polyline (last point joined to the first) crosses itself.
bool polyline_self_intersects(const std::vector<cplx>& pts);

struct NodeWeightSet {
  std::vector<cplx> nodes;
  std::vector<cplx> weights;  // pi times the residue of the Schwartz function (simple poles)
  std::vector<int> orders;    // pole orders of the Schwartz function
  std::vector<cplx> t_nodes;  // preimages in the disc
};

/// Nodes F(0), F(1/conj a) with weights pi Res_t[F_*(t) F'(t)]. Throws
/// PreconditionViolation for a non-univalent scenario.
NodeWeightSet schwartz_nodes_weights(const Example1Scenario& s);

struct TestFunction {
  std::string name;
  std::function<cplx(cplx)> f;
  std::vector<cplx> poles;
};

struct QuadratureResidual {
  std::string name;
  cplx integral;     // Richardson combination of the two finest grids
  cplx quadrature;   // sum c_k f(z_k)
  double residual = 0.0;
  std::vector<double> level_residuals;  // grids n/4, n/2, n
};

/// Area integrals over the winding-1 region of the traced boundary: midpoint
/// rule in y, exact interval lengths in x. Evaluated on grids n/4, n/2 and n;
/// the residual uses second-order Richardson on the two finest grids.
/// The trace uses at least 2n samples.
/// Throws InvalidTestFunction if a pole of f lies in the closed domain.
std::vector<QuadratureResidual> verify_quadrature_identity(const Example1Scenario& s, const std::vector<TestFunction>& fs,
                                                           const GridSpec& grid = {2048, 2048});

/// f = 1, z, z^2, 1/(z - 5).
std::vector<TestFunction> standard_test_functions();

nlohmann::json to_json(const NodeWeightSet& nw);

}  // namespace qdom
