#pragma once

#include <iosfwd>
#include <vector>

#include "qdom/symbols/matrix_symbol.hpp"

namespace qdom {

/// Continuity-matched eigenvalue branches of F(e^{i theta}), theta in [0, 2 pi].
struct CurveTrace {
  std::vector<double> thetas;                 // ascending, first 0, last 2 pi
  std::vector<std::vector<cplx>> branches;    // branches[j][i] at thetas[i]
  std::vector<int> closure_perm;              // branch j at 2 pi continues as branch closure_perm[j] at 0
  std::vector<std::vector<int>> loops;        // cycles of closure_perm
  int component_count = 0;                    // loops with coincident images merged
  std::vector<int> loop_component;            // component index of each loop
  int refinement_levels = 0;                  // deepest bisection used
  double min_gap = 0.0;                       // smallest inter-cluster distance seen

  int m() const { return static_cast<int>(branches.size()); }
  size_t size() const { return thetas.size(); }
  /// Closed polyline of one loop (branch samples concatenated along the cycle).
  std::vector<cplx> loop_points(size_t loop) const;
  /// Distance from z to the union of trace polylines.
  double distance(cplx z) const;
  /// Largest deviation of the polyline from the sampled curve (midpoint sagitta).
  double sagitta() const;
};

/// Throws BoundaryPole if F has a pole on the circle and BranchAmbiguity when
/// the continuity bound cannot be met within 12 bisection levels.
CurveTrace trace_branches(const MatrixSymbol& F, int n_init = 512, const Tolerances& tol = {});

/// Winding number of theta -> det(F(e^{i theta}) - z0 I), adaptive steps.
/// Throws TooCloseToBoundary when z0 is within the clearance of the trace.
int winding_number(const MatrixSymbol& F, cplx z0, const CurveTrace& trace);
int winding_number(const MatrixSymbol& F, cplx z0);

/// Sum over branches of the argument increments of zeta_j - z0.
int trace_winding(const CurveTrace& trace, cplx z0);

/// CSV: theta,branch_index,re,im (sample-major order).
void write_trace_csv(const CurveTrace& trace, std::ostream& os);

}  // namespace qdom
