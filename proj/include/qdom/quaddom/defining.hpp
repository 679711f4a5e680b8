#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdom/numkernel/bivar.hpp"
#include "qdom/quaddom/example1.hpp"
#include "qdom/quaddom/example2.hpp"

namespace qdom {

enum class Backend { Float, Exact };

std::string_view to_string(Backend b) noexcept;
/// "float" or "exact"; anything else throws PreconditionViolation.
Backend parse_backend(std::string_view s);

/// Polynomial relations X(t, z) = 0 and Y(t, w) = 0 on the curve, grids
/// indexed [t-degree][z- or w-degree].
struct CurveRelations {
  QBivar X;
  QBivar Y;
};

/// num(t) - s den(t).
QBivar rational_relation(const QPoly& num, const QPoly& den);

/// Res_eta(curve(t, eta), s den(t, eta) - num(t, eta)) with its content in t
/// (gcd of the s-coefficients) divided out.
QBivar eliminate_eta(const QBivar& curve, const ScalarBivarRational& psi);

/// z = F(t), w = F_*(t) with a and beta entering as dyadic rationals.
CurveRelations example1_relations(const Example1Scenario& s);
/// z = psi(t, eta) and w = psi^#(t, eta) on p eta^2 - q eta + r = 0.
CurveRelations example2_relations(const Example2Scenario& s);

using CurvePoint = std::pair<cplx, cplx>;  // (z, w)

/// Points (F(t), F_*(t)): n/2 on the circle (w = conj z) and n/2 at random t
/// in the annulus 0.3 < |t| < 0.95, all off the fitting grids.
std::vector<CurvePoint> example1_curve_samples(const Example1Scenario& s, int n, unsigned seed = 42);
/// Points (psi(t, eta), psi^#(t, eta)) over both roots eta of the curve equation.
std::vector<CurvePoint> example2_curve_samples(const Example2Scenario& s, int n, unsigned seed = 42);

/// max |Q| over pts divided by max |Q(z_i, w_j)| over the cross product of
/// the sample coordinates (at most 64 of each).
double normalized_residual(const CBivar& Q, const std::vector<CurvePoint>& pts);

struct DefiningEquation {
  Backend backend = Backend::Float;
  CBivar Q;                      // real-type normalized, largest coefficient of modulus 1
  std::optional<QBivar> Q_exact;
  int deg_z = 0;
  int deg_w = 0;
  double symmetry_defect = 0.0;
  double validation_residual = 0.0;
  double fit_residual = 0.0;     // float backend: interpolation check
  std::vector<cplx> z_factors;   // z0 with (z - z0) dividing Q
  std::vector<cplx> w_factors;
  std::string hash;              // exact backend: FNV-1a of the canonical coefficient string
};

/// Q(z, w) = Res_t(X, Y). deg_z / deg_w < 0 select the resultant degree bound.
/// Throws DegreeBoundError when the result exceeds the bounds (exact) or the
/// validation residual exceeds 1e-6 (both backends).
DefiningEquation defining_equation(const CurveRelations& rel, const std::vector<CurvePoint>& validation, int deg_z,
                                   int deg_w, Backend backend);
DefiningEquation defining_equation(const Example1Scenario& s, int deg_z = -1, int deg_w = -1,
                                   Backend backend = Backend::Float);
DefiningEquation defining_equation(const Example2Scenario& s, int deg_z = -1, int deg_w = -1,
                                   Backend backend = Backend::Float);

/// Roots z0 of a common factor (z - z0) of all w-coefficients (and the same
/// with the roles swapped), found from the lowest-degree coefficient and
/// accepted when every coefficient vanishes there to 1e-8 relative.
std::pair<std::vector<cplx>, std::vector<cplx>> linear_contents(const CBivar& Q);

std::string fnv1a_hex(std::string_view s);

nlohmann::json to_json(const DefiningEquation& d);

struct AhlforsPoint {
  cplx z;
  cplx w;
  cplx t;
  int mult = 1;
};

/// Points (z, w, t) with a common eigenvector of F(t) and F(1/conj t)^*.
/// Eigenvalues of F(t) within 1e-8 are grouped; on each group the
/// eigenspace must be invariant under F(1/conj t)^* (residual 1e-6), and
/// every eigenvalue of the restriction gives a point. t = 0 and poles are skipped.
std::vector<AhlforsPoint> ahlfors_curve_sample(const MatrixSymbol& F, const std::vector<cplx>& t_grid);

}  // namespace qdom
