#pragma once

#include <json.hpp>
#include <string_view>
#include <vector>

#include "qdom/winding/trace.hpp"

namespace qdom {

struct GridSpec {
  int nx = 512;
  int ny = 512;
  double inflate = 0.2;  // relative margin around the bounding box of the trace
  int n_init = 512;
  int probes = 16;       // cells cross-checked against the determinant winding number
  unsigned seed = 42;    // probe selection
};

/// Labels: -1 boundary band, otherwise the winding number at the cell center.
struct DomainReport {
  CurveTrace boundary;
  int nx = 0, ny = 0;
  double x0 = 0, y0 = 0, dx = 0, dy = 0;  // cell (i, j) has center (x0 + (i+1/2) dx, y0 + (j+1/2) dy)
  std::vector<int> labels;                 // row-major, index j * nx + i
  std::vector<int> winding;                // winding of the traced polygon at every center, band included
  std::vector<std::vector<std::pair<double, double>>> row_intervals;  // x-intervals with winding 1 on each center row
  bool conditions[3] = {false, false, false};
  int connectivity_estimate = 0;
  int probes_checked = 0;
  int probe_mismatches = 0;
  bool labels_in_01 = false;
  bool interior_connected = false;
  bool locally_constant = false;

  int label(int i, int j) const { return labels[static_cast<size_t>(j * nx + i)]; }
  cplx center(int i, int j) const { return {x0 + (i + 0.5) * dx, y0 + (j + 0.5) * dy}; }
  std::vector<cplx> interior_samples() const { return samples_with(1); }
  std::vector<cplx> exterior_samples() const { return samples_with(0); }
  bool passed() const { return conditions[0] && conditions[1] && conditions[2]; }

 private:
  std::vector<cplx> samples_with(int w) const;
};

DomainReport verify_generates_domain(const MatrixSymbol& F, const GridSpec& grid = {});
/// Same check on an existing trace.
DomainReport verify_generates_domain(const MatrixSymbol& F, const CurveTrace& trace, const GridSpec& grid);

enum class Membership { Interior, Exterior, Boundary };
std::string_view to_string(Membership m);

Membership membership(const MatrixSymbol& F, cplx z, double tol, const CurveTrace& trace);
Membership membership(const MatrixSymbol& F, cplx z, double tol);

nlohmann::json to_json(const DomainReport& r);

}  // namespace qdom
