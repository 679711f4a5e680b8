#pragma once

#include "qdom/symbols/compose.hpp"

namespace qdom {

/// F(t) = t + B(t), B = (I - Q1 + i b_{1/10} Q1)(I - Q2 + eps2 b_{-1/10} Q2)(I - Q3 + t Q3)
/// with l1 = (12, -5, 0)/13, l2 = (0, 12, -5)/13, l3 = (-5, 0, 12)/13.
/// eps2 enters as the dyadic rounding of its double value.
BlaschkePotapov example3_blaschke(cplx eps2);
MatrixSymbol example3_build(cplx eps2);
/// eps2 = exp(2 pi i / 3).
MatrixSymbol example3_build();
/// eps2 = (-1 + i) / sqrt 2.
MatrixSymbol example3_variant();

}  // namespace qdom
