#include "qdom/quaddom/example3.hpp"

#include <cmath>
#include <numbers>

namespace qdom {

BlaschkePotapov example3_blaschke(cplx eps2) {
  auto q = [](long p) { return GaussRational(mpq_class(p, 13), 0); };
  auto P1 = rank_one_projection(std::vector<GaussRational>{q(12), q(-5), q(0)});
  auto P2 = rank_one_projection(std::vector<GaussRational>{q(0), q(12), q(-5)});
  auto P3 = rank_one_projection(std::vector<GaussRational>{q(-5), q(0), q(12)});
  const GaussRational lam(mpq_class(1, 10), 0);
  return bp_build(mat_identity<GaussRational>(3), {{lam, GaussRational(0, 1), P1},
                                                   {-lam, GaussRational::from_complex(eps2), P2},
                                                   {GaussRational(0), GaussRational(1), P3}});
}

MatrixSymbol example3_build(cplx eps2) {
  // psi(t, eta) = t + eta
  ScalarBivarRational psi(QBivar({{GaussRational(0), GaussRational(1)}, {GaussRational(1), GaussRational(0)}}),
                          QBivar({{GaussRational(1)}}));
  return compose_psi(psi, example3_blaschke(eps2));
}

MatrixSymbol example3_build() { return example3_build(std::polar(1.0, 2.0 * std::numbers::pi / 3.0)); }

MatrixSymbol example3_variant() { return example3_build(cplx(-1.0, 1.0) / std::numbers::sqrt2); }

}  // namespace qdom
