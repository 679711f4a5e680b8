#pragma once

#include <vector>

#include "qdom/symbols/compose.hpp"

namespace qdom {

/// F(t) = psi(t, B(t)) with B = (I - Q1 + b_lambda Q1)(I - Q2 + b_{-lambda} Q2),
/// Q1, Q2 the projections onto (1, 0) and (c, a), and
/// psi = (2 p eta - q + L (t - gamma1)) / (2 p eta - q - L (t - gamma1)).
struct Example2Scenario {
  GaussRational lambda, a, c, L;
  int branch_pick = 0;
  QPoly p, q, r, D;                // D = q^2 - 4 p r
  std::vector<cplx> roots;         // all roots of D
  std::vector<cplx> disc_roots;    // roots in the disc, sorted by argument
  cplx gamma1;                     // disc_roots[branch_pick]
  GaussRational gamma1_exact;      // dyadic rounding of gamma1
  double pairing_defect = 0.0;     // max over disc roots of dist(1/conj(gamma), roots)
  bool D_self_reciprocal = false;  // conj(D(1/conj t)) = t^-4 D(t), checked exactly
  ScalarBivarRational psi;
  BlaschkePotapov B;
  MatrixSymbol F;

  cplx lambda_f() const { return lambda.to_complex(); }
  cplx L_f() const { return L.to_complex(); }
  /// p eta^2 - q eta + r, grid indexed [t-degree][eta-degree].
  QBivar curve() const;
};

/// Throws PreconditionViolation unless 0 < |lambda| < 1, a > 0,
/// c >= 0, |a^2 + c^2 - 1| <= 1e-12, L != 0 and branch_pick indexes a disc
/// root. Throws DegenerateCurve if two roots of D are within 1e-8 or a root
/// lies within 1e-8 of the unit circle.
Example2Scenario example2_build(const GaussRational& lambda, const GaussRational& a, const GaussRational& c,
                                const GaussRational& L, int branch_pick = 0);
Example2Scenario example2_build(cplx lambda, double a, double c, cplx L, int branch_pick = 0);

/// lambda = 0.8i, a = 5/13, c = 12/13, L = i.
Example2Scenario example2_reference();

struct ZBranches {
  std::vector<double> thetas;
  std::vector<cplx> sigma;    // continuous square root of D, sign of the z_plus branch
  std::vector<cplx> z_plus;   // (sigma + L u) / (sigma - L u), u = t - gamma1
  std::vector<cplx> z_minus;  // same with -sigma
  double product_defect = 0.0;  // max |z_plus z_minus - 1|
  double mean_modulus_plus = 0.0;
  double mean_modulus_minus = 0.0;
  bool swapped = false;  // z_plus uses minus the branch that is principal at t = 1
};

/// Samples t = e^{i theta_k}, theta_k = 2 pi k / n. The square root is
/// continued by choosing at each step the sign closer to the previous value;
/// z_plus is then the branch with the larger mean modulus. Throws
/// DegenerateCurve if D vanishes on the circle or the continuation is
/// ambiguous, BoundaryPole if sigma = +-L u at a sample.
ZBranches trace_z_branches(const Example2Scenario& s, int n = 4096);

struct UnivalenceReport {
  bool pass = false;
  bool arg_increasing = false;  // every step of arg z_plus positive, total 2 pi
  bool pole_free = false;       // no root of the pole cubic in the closed disc
  double min_arg_step = 0.0;
  double total_arg = 0.0;
  std::vector<cplx> pole_candidates;  // roots of (D - L^2 u^2) / u
  std::vector<cplx> disc_poles;       // candidates with |t| <= 1 + 1e-9
};

/// z has a pole at (t, sigma) exactly when sigma = L u, so
/// D(t) = L^2 u^2; u divides D - L^2 u^2 and t = gamma1 itself is not a pole.
/// The part of the curve over the disc contains both sheets, so every root of
/// the cubic in the closed disc is a pole.
UnivalenceReport univalence_check(const Example2Scenario& s, int n = 4096);

}  // namespace qdom
