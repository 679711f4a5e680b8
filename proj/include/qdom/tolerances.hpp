#pragma once

namespace qdom {

/// Numerical thresholds used across the pipeline. Every field can be
/// overridden from the command line.
struct Tolerances {
  double root = 1e-9;             // |p(r)| <= root * max|coeff|
  double root_cluster = 1e-6;     // multiplicity radius, scaled by (1+|r|)
  double rank = 1e-8;             // singular value cut, relative to sigma_1
  double normal = 1e-9;           // scaled by (1 + |F(t)|^2)
  double boundary_pole = 1e-8;    // distance of a pole from the unit circle
  double fourier_check = 1e-9;    // residue path vs FFT path
  double branch_collision = 1e-10;
  double symmetry = 1e-8;         // real-type coefficient symmetry (float)
};

}  // namespace qdom
