#include "qdom/winding/trace.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>

#include "qdom/winding/assignment.hpp"

namespace qdom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxLevels = 12;

struct Sample {
  double theta;
  std::vector<cplx> ev;
};

std::vector<cplx> spectrum(const MatrixSymbol& F, double theta) {
  CMat f = F.eval(std::polar(1.0, theta));
  if (!f.allFinite()) fail(ErrorKind::BoundaryPole, "symbol is not finite on the unit circle");
  return eigenvalues(f);
}

/// Reorders b to follow a with minimal total displacement.
std::vector<cplx> match(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  const size_t n = a.size();
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) cost[i][j] = std::abs(a[i] - b[j]);
  auto col = hungarian(cost);
  std::vector<cplx> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = b[static_cast<size_t>(col[i])];
  return out;
}

/// Smallest distance between eigenvalues that are not numerically coincident.
double cluster_gap(const std::vector<cplx>& ev, double collision) {
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < ev.size(); ++i)
    for (size_t j = i + 1; j < ev.size(); ++j) {
      double d = std::abs(ev[i] - ev[j]);
      double scale = 1.0 + std::abs(ev[i]);
      if (d > collision * scale) gap = std::min(gap, d);
    }
  return gap;
}

double max_move(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool has_collision(const std::vector<cplx>& ev, double collision) {
  for (size_t i = 0; i < ev.size(); ++i)
    for (size_t j = i + 1; j < ev.size(); ++j)
      if (std::abs(ev[i] - ev[j]) <= collision * (1.0 + std::abs(ev[i]))) return true;
  return false;
}

}  // namespace

std::vector<cplx> CurveTrace::loop_points(size_t loop) const {
  std::vector<cplx> pts;
  for (int j : loops[loop]) {
    const auto& b = branches[static_cast<size_t>(j)];
    pts.insert(pts.end(), b.begin(), b.end() - 1);
  }
  pts.push_back(pts.front());
  return pts;
}

double CurveTrace::distance(cplx z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : branches)
    for (size_t i = 0; i + 1 < b.size(); ++i) {
      cplx p = b[i], q = b[i + 1];
      cplx d = q - p;
      double len2 = std::norm(d);
      double s = len2 > 0.0 ? std::clamp(((z - p) * std::conj(d)).real() / len2, 0.0, 1.0) : 0.0;
      best = std::min(best, std::abs(z - (p + s * d)));
    }
  return best;
}

double CurveTrace::sagitta() const {
  double s = 0.0;
  for (const auto& b : branches)
    for (size_t i = 0; i + 2 < b.size(); ++i) s = std::max(s, std::abs(b[i + 1] - 0.5 * (b[i] + b[i + 2])));
  return s;
}

CurveTrace trace_branches(const MatrixSymbol& F, int n_init, const Tolerances& tol) {
  if (n_init < 64) fail(ErrorKind::DegenerateInput, "n_init must be at least 64");
  for (const auto& p : F.poles(tol))
    if (std::abs(std::abs(p.value) - 1.0) <= tol.boundary_pole) fail(ErrorKind::BoundaryPole, "pole on the unit circle");

  CurveTrace out;
  out.min_gap = std::numeric_limits<double>::infinity();
  std::vector<Sample> samples;
  samples.push_back({0.0, spectrum(F, 0.0)});
  const double collision = tol.branch_collision;

  for (int k = 1; k <= n_init; ++k) {
    const double th_end = kTwoPi * k / n_init;
    // Depth-first bisection between the last accepted sample and th_end.
    std::vector<std::pair<double, int>> pending{{th_end, 0}};
    while (!pending.empty()) {
      auto [th, level] = pending.back();
      const Sample& prev = samples.back();
      std::vector<cplx> ev = match(prev.ev, spectrum(F, th));
      double gap = std::min(cluster_gap(prev.ev, collision), cluster_gap(ev, collision));
      double move = max_move(prev.ev, ev);
      if (move < gap / 3.0) {
        out.min_gap = std::min(out.min_gap, gap);
        out.refinement_levels = std::max(out.refinement_levels, level);
        samples.push_back({th, std::move(ev)});
        pending.pop_back();
        continue;
      }
      if (level >= kMaxLevels) {
        std::ostringstream msg;
        msg << "branch continuity unresolved in theta window [" << prev.theta << ", " << th << "]"
            << (has_collision(ev, collision) ? " (eigenvalue collision)" : "");
        fail(ErrorKind::BranchAmbiguity, msg.str());
      }
      pending.back().second = level + 1;
      pending.push_back({0.5 * (prev.theta + th), level + 1});
    }
  }

  const size_t m = static_cast<size_t>(F.m());
  out.thetas.reserve(samples.size());
  out.branches.assign(m, {});
  for (const auto& s : samples) {
    out.thetas.push_back(s.theta);
    for (size_t j = 0; j < m; ++j) out.branches[j].push_back(s.ev[j]);
  }

  // Closure: branch ends at 2 pi matched to branch starts at 0.
  std::vector<cplx> ends(m), starts(m);
  for (size_t j = 0; j < m; ++j) {
    ends[j] = out.branches[j].back();
    starts[j] = out.branches[j].front();
  }
  std::vector<std::vector<double>> cost(m, std::vector<double>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) cost[i][j] = std::abs(ends[i] - starts[j]);
  out.closure_perm = hungarian(cost);

  std::vector<bool> seen(m, false);
  for (size_t j = 0; j < m; ++j) {
    if (seen[j]) continue;
    std::vector<int> cyc;
    for (size_t k = j; !seen[k]; k = static_cast<size_t>(out.closure_perm[k])) {
      seen[k] = true;
      cyc.push_back(static_cast<int>(k));
    }
    out.loops.push_back(cyc);
  }

  // Loops with pointwise coincident images form one geometric component.
  std::vector<int> comp(out.loops.size(), -1);
  int count = 0;
  for (size_t a = 0; a < out.loops.size(); ++a) {
    if (comp[a] >= 0) continue;
    comp[a] = count;
    for (size_t b = a + 1; b < out.loops.size(); ++b) {
      if (comp[b] >= 0 || out.loops[a].size() != out.loops[b].size()) continue;
      bool same = true;
      for (size_t k = 0; k < out.loops[a].size() && same; ++k) {
        const auto& x = out.branches[static_cast<size_t>(out.loops[a][k])];
        const auto& y = out.branches[static_cast<size_t>(out.loops[b][k])];
        for (size_t i = 0; i < x.size() && same; ++i) same = std::abs(x[i] - y[i]) <= 1e-8 * (1.0 + std::abs(x[i]));
      }
      if (same) comp[b] = count;
    }
    ++count;
  }
  out.component_count = count;
  out.loop_component = std::move(comp);
  return out;
}

int trace_winding(const CurveTrace& trace, cplx z0) {
  double total = 0.0;
  for (const auto& b : trace.branches)
    for (size_t i = 0; i + 1 < b.size(); ++i) total += std::arg((b[i + 1] - z0) / (b[i] - z0));
  return static_cast<int>(std::lround(total / kTwoPi));
}

int winding_number(const MatrixSymbol& F, cplx z0, const CurveTrace& trace) {
  const double clearance = 1e-8 * (1.0 + std::abs(z0)) + 2.0 * trace.sagitta();
  if (trace.distance(z0) <= clearance) {
    fail(ErrorKind::TooCloseToBoundary, "point is within the clearance of the traced curve");
  }
  const int m = F.m();
  auto g = [&](double th) {
    CMat f = F.eval(std::polar(1.0, th)) - z0 * CMat::Identity(m, m);
    return f.determinant();
  };
  double total = 0.0;
  const int n = 256;
  for (int k = 0; k < n; ++k) {
    std::vector<std::tuple<double, double, int>> stack{{kTwoPi * k / n, kTwoPi * (k + 1) / n, 0}};
    while (!stack.empty()) {
      auto [a, b, depth] = stack.back();
      stack.pop_back();
      double d = std::arg(g(b) / g(a));
      if (std::abs(d) < 0.5 * std::numbers::pi || depth > 40) {
        total += d;
      } else {
        double mid = 0.5 * (a + b);
        stack.push_back({mid, b, depth + 1});
        stack.push_back({a, mid, depth + 1});
      }
    }
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

int winding_number(const MatrixSymbol& F, cplx z0) { return winding_number(F, z0, trace_branches(F, 256)); }

void write_trace_csv(const CurveTrace& trace, std::ostream& os) {
  os << "theta,branch_index,re,im\n";
  os << std::setprecision(17);
  for (size_t i = 0; i < trace.thetas.size(); ++i)
    for (size_t j = 0; j < trace.branches.size(); ++j)
      os << trace.thetas[i] << ',' << j << ',' << trace.branches[j][i].real() << ',' << trace.branches[j][i].imag() << '\n';
}

}  // namespace qdom
