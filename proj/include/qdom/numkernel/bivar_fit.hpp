#pragma once

#include <functional>

#include "qdom/numkernel/bivar.hpp"

namespace qdom {

struct BivarFit {
  CBivar poly;
  double grid_residual = 0.0;        // max over interpolation nodes, relative
  double validation_residual = 0.0;  // max over the rotated grid, relative
  double condition = 1.0;
};

/// Interpolates evaluator on a tensor grid of scaled roots of unity
/// (radius rz for z, rw for w) and validates on the half-step rotated grid.
/// Throws ConditioningError when the scaled grid is too ill-conditioned.
BivarFit bivar_fit(const std::function<cplx(cplx, cplx)>& evaluator, int deg_z, int deg_w, double rz = 1.0,
                   double rw = 1.0);

}  // namespace qdom
