#include "qdom/winding/domain.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qdom {

namespace {

struct Segment {
  cplx p, q;
};

std::vector<Segment> segments(const CurveTrace& tr) {
  std::vector<Segment> out;
  for (size_t j = 0; j < tr.branches.size(); ++j) {
    const auto& b = tr.branches[j];
    for (size_t i = 0; i + 1 < b.size(); ++i) out.push_back({b[i], b[i + 1]});
    out.push_back({b.back(), tr.branches[static_cast<size_t>(tr.closure_perm[j])].front()});
  }
  return out;
}

/// Flood fill over cells where pred holds; returns component ids (-1 elsewhere).
template <class Pred>
int components(int nx, int ny, bool eight, Pred pred, std::vector<int>& comp) {
  comp.assign(static_cast<size_t>(nx * ny), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < nx * ny; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0 || !pred(s)) continue;
    comp[static_cast<size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      int ci = c % nx, cj = c / nx;
      for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di) {
          if ((di == 0 && dj == 0) || (!eight && di != 0 && dj != 0)) continue;
          int i = ci + di, j = cj + dj;
          if (i < 0 || j < 0 || i >= nx || j >= ny) continue;
          int n = j * nx + i;
          if (comp[static_cast<size_t>(n)] >= 0 || !pred(n)) continue;
          comp[static_cast<size_t>(n)] = count;
          stack.push_back(n);
        }
    }
    ++count;
  }
  return count;
}

}  // namespace

std::vector<cplx> DomainReport::samples_with(int w) const {
  std::vector<cplx> out;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (label(i, j) == w) out.push_back(center(i, j));
  return out;
}

DomainReport verify_generates_domain(const MatrixSymbol& F, const GridSpec& grid) {
  return verify_generates_domain(F, trace_branches(F, grid.n_init), grid);
}

DomainReport verify_generates_domain(const MatrixSymbol& F, const CurveTrace& trace, const GridSpec& grid) {
  if (grid.nx < 8 || grid.ny < 8) fail(ErrorKind::DegenerateInput, "grid must be at least 8 x 8");
  DomainReport r;
  r.boundary = trace;
  r.nx = grid.nx;
  r.ny = grid.ny;

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& b : trace.branches)
    for (cplx z : b) {
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    }
  double w = xmax - xmin, h = ymax - ymin;
  double ext = std::max({w, h, 1e-12});
  if (w < 1e-3 * ext) w = 1e-3 * ext;
  if (h < 1e-3 * ext) h = 1e-3 * ext;
  const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
  w *= 1.0 + grid.inflate;
  h *= 1.0 + grid.inflate;
  r.x0 = cx - 0.5 * w;
  r.y0 = cy - 0.5 * h;
  r.dx = w / grid.nx;
  r.dy = h / grid.ny;
  const int nx = r.nx, ny = r.ny;
  const auto segs = segments(trace);

  // Scanline winding at the cell centers: crossings to the right of the center.
  r.labels.assign(static_cast<size_t>(nx * ny), 0);
  std::vector<std::vector<std::pair<double, int>>> rows(static_cast<size_t>(ny));
  for (const auto& s : segs) {
    const double py = s.p.imag(), qy = s.q.imag();
    if (py == qy) continue;
    const int dir = qy > py ? 1 : -1;
    const double lo = std::min(py, qy), hi = std::max(py, qy);
    int j0 = std::max(0, static_cast<int>(std::ceil((lo - r.y0) / r.dy - 0.5)));
    int j1 = std::min(ny - 1, static_cast<int>(std::ceil((hi - r.y0) / r.dy - 0.5)) - 1);
    for (int j = j0; j <= j1; ++j) {
      double yc = r.y0 + (j + 0.5) * r.dy;
      if (yc < lo || yc >= hi) continue;
      double x = s.p.real() + (yc - py) / (qy - py) * (s.q.real() - s.p.real());
      rows[static_cast<size_t>(j)].push_back({x, dir});
    }
  }
  for (int j = 0; j < ny; ++j) {
    auto& row = rows[static_cast<size_t>(j)];
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    int acc = 0;
    std::vector<std::pair<double, double>> iv;
    for (size_t k = 0; k < row.size(); ++k) {
      acc += row[k].second;
      if (acc == 1 && k + 1 < row.size()) iv.push_back({row[k + 1].first, row[k].first});
    }
    std::reverse(iv.begin(), iv.end());
    r.row_intervals.push_back(std::move(iv));
    acc = 0;
    size_t k = 0;
    for (int i = nx - 1; i >= 0; --i) {
      double xc = r.x0 + (i + 0.5) * r.dx;
      while (k < row.size() && row[k].first > xc) acc += row[k++].second;
      r.labels[static_cast<size_t>(j * nx + i)] = acc;
    }
  }

  // Boundary band: rasterized segments dilated by one cell.
  std::vector<char> band(static_cast<size_t>(nx * ny), 0);
  auto mark = [&](cplx z) {
    int i = static_cast<int>(std::floor((z.real() - r.x0) / r.dx));
    int j = static_cast<int>(std::floor((z.imag() - r.y0) / r.dy));
    for (int dj = -1; dj <= 1; ++dj)
      for (int di = -1; di <= 1; ++di) {
        int a = i + di, b = j + dj;
        if (a >= 0 && b >= 0 && a < nx && b < ny) band[static_cast<size_t>(b * nx + a)] = 1;
      }
  };
  for (const auto& s : segs) {
    double len = std::max(std::abs(s.q.real() - s.p.real()) / r.dx, std::abs(s.q.imag() - s.p.imag()) / r.dy);
    int n = std::max(1, static_cast<int>(std::ceil(2.0 * len)));
    for (int k = 0; k <= n; ++k) mark(s.p + (s.q - s.p) * (static_cast<double>(k) / n));
  }
  r.winding = r.labels;
  for (size_t c = 0; c < band.size(); ++c)
    if (band[c]) r.labels[c] = -1;

  // Probe cross-check against the determinant winding number.
  std::mt19937 rng(grid.seed);
  std::uniform_int_distribution<int> pick(0, nx * ny - 1);
  for (int attempt = 0; attempt < 20 * grid.probes && r.probes_checked < grid.probes; ++attempt) {
    int c = pick(rng);
    if (r.labels[static_cast<size_t>(c)] < 0) continue;
    int wdet;
    try {
      wdet = winding_number(F, r.center(c % nx, c / nx), trace);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::TooCloseToBoundary) continue;
      throw;
    }
    ++r.probes_checked;
    if (wdet != r.labels[static_cast<size_t>(c)]) ++r.probe_mismatches;
  }

  r.labels_in_01 = true;
  r.locally_constant = true;
  bool any_one = false;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      int l = r.label(i, j);
      if (l < 0) continue;
      if (l > 1) r.labels_in_01 = false;
      if (l == 1) any_one = true;
      if (i + 1 < nx && r.label(i + 1, j) >= 0 && r.label(i + 1, j) != l) r.locally_constant = false;
      if (j + 1 < ny && r.label(i, j + 1) >= 0 && r.label(i, j + 1) != l) r.locally_constant = false;
    }

  std::vector<int> comp;
  int n_one = components(nx, ny, false, [&](int c) { return r.labels[static_cast<size_t>(c)] == 1; }, comp);
  r.interior_connected = n_one == 1;

  int n_rest = components(nx, ny, true, [&](int c) { return r.labels[static_cast<size_t>(c)] != 1; }, comp);
  std::vector<char> touches(static_cast<size_t>(n_rest), 0);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (i != 0 && j != 0 && i != nx - 1 && j != ny - 1) continue;
      int id = comp[static_cast<size_t>(j * nx + i)];
      if (id >= 0) touches[static_cast<size_t>(id)] = 1;
    }
  r.connectivity_estimate = static_cast<int>(std::count(touches.begin(), touches.end(), 0));

  // Condition (1): the trace is the grid boundary of the 1-region.
  bool c1 = any_one;
  const double reach = 2.5 * std::hypot(r.dx, r.dy);
  const int win = static_cast<int>(std::ceil(reach / std::min(r.dx, r.dy)));
  for (const auto& b : trace.branches) {
    for (size_t s = 0; s < b.size() && c1; ++s) {
      int i = static_cast<int>(std::floor((b[s].real() - r.x0) / r.dx));
      int j = static_cast<int>(std::floor((b[s].imag() - r.y0) / r.dy));
      bool near = false;
      for (int dj = -win; dj <= win && !near; ++dj)
        for (int di = -win; di <= win && !near; ++di) {
          int a = i + di, q = j + dj;
          near = a >= 0 && q >= 0 && a < nx && q < ny && r.label(a, q) == 1 && std::abs(r.center(a, q) - b[s]) <= reach;
        }
      c1 = near;
    }
  }
  for (int j = 0; j < ny && c1; ++j)
    for (int i = 0; i < nx && c1; ++i) {
      if (r.label(i, j) != 1) continue;
      bool edge = (i > 0 && r.label(i - 1, j) != 1) || (i + 1 < nx && r.label(i + 1, j) != 1) ||
                  (j > 0 && r.label(i, j - 1) != 1) || (j + 1 < ny && r.label(i, j + 1) != 1);
      if (edge && trace.distance(r.center(i, j)) > reach) c1 = false;
    }

  const bool c23 = any_one && r.labels_in_01 && r.locally_constant && r.interior_connected && r.probe_mismatches == 0;
  r.conditions[0] = c1;
  r.conditions[1] = c23;
  r.conditions[2] = c23;
  return r;
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Interior: return "interior";
    case Membership::Exterior: return "exterior";
    case Membership::Boundary: return "boundary";
  }
  return "?";
}

Membership membership(const MatrixSymbol& F, cplx z, double tol, const CurveTrace& trace) {
  if (trace.distance(z) <= tol) return Membership::Boundary;
  try {
    return winding_number(F, z, trace) == 1 ? Membership::Interior : Membership::Exterior;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TooCloseToBoundary) return Membership::Boundary;
    throw;
  }
}

Membership membership(const MatrixSymbol& F, cplx z, double tol) {
  return membership(F, z, tol, trace_branches(F, 512));
}

nlohmann::json to_json(const DomainReport& r) {
  nlohmann::json rle = nlohmann::json::array();
  for (size_t k = 0; k < r.labels.size();) {
    size_t e = k;
    while (e < r.labels.size() && r.labels[e] == r.labels[k]) ++e;
    rle.push_back({r.labels[k], e - k});
    k = e;
  }
  nlohmann::json loops = nlohmann::json::array();
  for (const auto& l : r.boundary.loops) loops.push_back(l);
  return {
      {"conditions", {{"boundary_is_curve", r.conditions[0]}, {"winding_one_inside", r.conditions[1]},
                      {"winding_zero_outside", r.conditions[2]}}},
      {"passed", r.passed()},
      {"connectivity_estimate", r.connectivity_estimate},
      {"labels_in_01", r.labels_in_01},
      {"interior_connected", r.interior_connected},
      {"locally_constant", r.locally_constant},
      {"probes", {{"checked", r.probes_checked}, {"mismatches", r.probe_mismatches}}},
      {"trace", {{"branches", r.boundary.m()}, {"samples", r.boundary.size()},
                 {"component_count", r.boundary.component_count}, {"loops", loops},
                 {"refinement_levels", r.boundary.refinement_levels}}},
      {"grid", {{"nx", r.nx}, {"ny", r.ny}, {"x0", r.x0}, {"y0", r.y0}, {"dx", r.dx}, {"dy", r.dy}}},
      {"labels_rle", rle},
  };
}

}  // namespace qdom
