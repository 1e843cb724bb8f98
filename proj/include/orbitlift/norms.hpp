#ifndef ORBITLIFT_NORMS_HPP
#define ORBITLIFT_NORMS_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "orbitlift/core.hpp"

namespace orbitlift {

/// Per-cell derivative magnitudes |Δf|/Δt of a sampled curve.
///
/// The vector norm is Euclidean over all components. Squared component
/// differences are summed in sorted order so the result does not depend on
/// the order of the components (branch relabelling leaves it bit-identical).
inline std::vector<double> cell_slopes(const SampledCurve& c) {
  std::vector<double> out(c.size() - 1);
  std::vector<double> sq(c.components());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    double scale = 0.0;
    for (std::size_t k = 0; k < sq.size(); ++k) {
      sq[k] = std::abs(c[i + 1][k] - c[i][k]);
      scale = std::max(scale, sq[k]);
    }
    double mag = 0.0;
    if (scale > 0.0) {
      for (auto& v : sq) v = (v / scale) * (v / scale);
      std::sort(sq.begin(), sq.end());
      double s = 0.0;
      for (double v : sq) s += v;
      mag = scale * std::sqrt(s);
    }
    out[i] = mag / c.grid().cell_width(i);
  }
  return out;
}

inline std::vector<double> cell_widths(const Grid& g) {
  std::vector<double> w(g.size() - 1);
  for (std::size_t i = 0; i + 1 < g.size(); ++i) w[i] = g.cell_width(i);
  return w;
}

/// (Σ_i m_i^p w_i)^{1/p} over the cells with include[i] (all when empty).
///
/// Terms are scaled by the largest included magnitude so huge slopes near
/// singular points do not overflow. Cells are visited in index order.
inline double lp_of_cells(const std::vector<double>& slopes, const std::vector<double>& widths, double p,
                          const std::vector<bool>& include = {}) {
  double top = 0.0;
  for (std::size_t i = 0; i < slopes.size(); ++i)
    if (include.empty() || include[i]) top = std::max(top, slopes[i]);
  if (top == 0.0) return 0.0;
  if (!std::isfinite(top)) return top;
  double sum = 0.0;
  for (std::size_t i = 0; i < slopes.size(); ++i)
    if (include.empty() || include[i]) sum += std::pow(slopes[i] / top, p) * widths[i];
  return top * std::pow(sum, 1.0 / p);
}

/// Weak-L^p quasinorm sup_r r·|{m > r}|^{1/p} of a cellwise constant function.
///
/// Cells flagged in `unresolved` are counted in every super-level set they
/// belong to but their own magnitude is not used as a threshold.
inline double weak_of_cells(const std::vector<double>& slopes, const std::vector<double>& widths, double p,
                            const std::vector<bool>& unresolved = {}) {
  std::vector<std::size_t> order(slopes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return slopes[a] > slopes[b]; });
  double best = 0.0, cumulative = 0.0;
  bool resolved_in_run = false;
  for (std::size_t r = 0; r < order.size(); ++r) {
    std::size_t i = order[r];
    cumulative += widths[i];
    if (unresolved.empty() || !unresolved[i]) resolved_in_run = true;
    // Equal magnitudes form one level set: only evaluate at the end of a run.
    if (r + 1 < order.size() && slopes[order[r + 1]] == slopes[i]) continue;
    if (resolved_in_run) best = std::max(best, slopes[i] * std::pow(cumulative, 1.0 / p));
    resolved_in_run = false;
  }
  return best;
}

/// Cells with exactly one endpoint at which the curve vanishes identically.
inline std::vector<bool> zero_adjacent_cells(const SampledCurve& c) {
  std::vector<bool> zero(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) zero[i] = norm2(c[i]) == 0.0;
  std::vector<bool> out(c.size() - 1);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) out[i] = zero[i] != zero[i + 1];
  return out;
}

}  // namespace orbitlift

#endif  // ORBITLIFT_NORMS_HPP
