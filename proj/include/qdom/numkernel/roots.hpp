#pragma once

#include <vector>

#include "qdom/numkernel/poly.hpp"
#include "qdom/tolerances.hpp"

namespace qdom {

struct Root {
  cplx value;
  int multiplicity = 1;
};

/// Roots of p with multiplicities (companion eigenvalues, Newton polish,
/// clustering). Multiplicities sum to deg p.
std::vector<Root> poly_roots(const CPoly& p, const Tolerances& tol = {});
std::vector<Root> poly_roots(const QPoly& p, const Tolerances& tol = {});

/// Roots listed with repetition.
std::vector<cplx> flat_roots(const std::vector<Root>& roots);

/// |p(r)| relative to the largest coefficient magnitude.
double relative_residual(const CPoly& p, cplx r);

/// Monic polynomial with the given roots, scaled by lead.
CPoly from_roots(const std::vector<cplx>& roots, cplx lead = 1.0);

}  // namespace qdom
