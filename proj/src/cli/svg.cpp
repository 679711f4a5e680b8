#include "qdom/cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

namespace qdom {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

void emit_svg(const CurveTrace& trace, const DomainReport* mask, std::ostream& os) {
  if (trace.size() == 0 || trace.loops.empty()) fail(ErrorKind::NoData, "empty trace");
  std::vector<std::vector<cplx>> polys;
  std::vector<bool> drawn(static_cast<size_t>(trace.component_count), false);
  for (size_t l = 0; l < trace.loops.size(); ++l) {
    const int c = l < trace.loop_component.size() ? trace.loop_component[l] : static_cast<int>(l);
    if (c >= 0 && static_cast<size_t>(c) < drawn.size()) {
      if (drawn[static_cast<size_t>(c)]) continue;
      drawn[static_cast<size_t>(c)] = true;
    }
    polys.push_back(trace.loop_points(l));
  }
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& p : polys)
    for (cplx z : p) {
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, -z.imag());
      y1 = std::max(y1, -z.imag());
    }
  const double mx = 0.1 * std::max(x1 - x0, 1e-12), my = 0.1 * std::max(y1 - y0, 1e-12);
  x0 -= mx;
  x1 += mx;
  y0 -= my;
  y1 += my;
  const double stroke = 0.004 * std::max(x1 - x0, y1 - y0);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << ' ' << fmt(y0) << ' ' << fmt(x1 - x0) << ' '
     << fmt(y1 - y0) << "\">\n";
  if (mask) {
    os << "<path fill=\"#9ecae1\" stroke=\"none\" d=\"";
    for (int j = 0; j < mask->ny; ++j) {
      int i = 0;
      while (i < mask->nx) {
        if (mask->winding[static_cast<size_t>(j * mask->nx + i)] != 1) {
          ++i;
          continue;
        }
        int k = i;
        while (k < mask->nx && mask->winding[static_cast<size_t>(j * mask->nx + k)] == 1) ++k;
        const double xa = mask->x0 + i * mask->dx, ya = -(mask->y0 + (j + 1) * mask->dy);
        os << 'M' << fmt(xa) << ' ' << fmt(ya) << 'h' << fmt((k - i) * mask->dx) << 'v' << fmt(mask->dy) << 'h'
           << fmt(-(k - i) * mask->dx) << 'z';
        i = k;
      }
    }
    os << "\"/>\n";
  }
  for (const auto& p : polys) {
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(stroke) << "\" points=\"";
    for (size_t k = 0; k < p.size(); ++k) os << (k ? " " : "") << fmt(p[k].real()) << ',' << fmt(-p[k].imag());
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

void emit_svg(const CurveTrace& trace, const DomainReport* mask, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::NoData, "cannot open " + path.string());
  emit_svg(trace, mask, f);
}

}  // namespace qdom
