#ifndef ORBITLIFT_COVERS_HPP
#define ORBITLIFT_COVERS_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <vector>

#include "orbitlift/core.hpp"
#include "orbitlift/reduction.hpp"

namespace orbitlift {

enum class IntervalKind { first, second };

inline const char* to_string(IntervalKind k) { return k == IntervalKind::first ? "first" : "second"; }

enum class Side { minus, plus };

/// Interval J = (s_minus, s_plus) around the node t1 with
/// L|J| + ‖b̂'‖_{L^1(J)} = D |b̂_ℓ(t1)|.
struct PreparedInterval {
  std::size_t node = 0;
  double t1 = 0.0;
  std::size_t ell = 0;
  double s_minus = 0.0;
  double s_plus = 0.0;
  IntervalKind kind = IntervalKind::first;
  double D = 0.0;
  double L = 0.0;
  /// D |b̂_ℓ(t1)|
  double target = 0.0;
  /// φ_-(s_minus) and φ_+(s_plus).
  double phi_minus = 0.0;
  double phi_plus = 0.0;
  /// J = I and the identity still falls short of the target.
  bool saturated = false;

  double length() const { return s_plus - s_minus; }
  friend bool operator==(const PreparedInterval&, const PreparedInterval&) = default;
};

namespace detail {

/// Growth rate of φ on cell i: L + Σ_j |Δb̂_j| / h.
inline double phi_rate(const RadicalSelection& sel, std::size_t cell, double L) {
  double v = 0.0;
  for (std::size_t j = 0; j < sel.components(); ++j)
    v += std::abs(sel.selections[cell + 1][j] - sel.selections[cell][j]);
  return L + v / sel.grid().cell_width(cell);
}

/// Point s on the given side of node t1 with φ(s) = value, or the domain end
/// when φ stays below value; also returns φ at that point.
inline std::pair<double, double> phi_inverse(const RadicalSelection& sel, std::size_t t1, double L, double value,
                                             Side side) {
  const auto& g = sel.grid();
  double acc = 0.0;
  if (side == Side::plus) {
    for (std::size_t i = t1; i + 1 < sel.size(); ++i) {
      double rate = phi_rate(sel, i, L), step = rate * g.cell_width(i);
      if (acc + step >= value) return {std::min(g[i] + (value - acc) / rate, g[i + 1]), value};
      acc += step;
    }
    return {g.back(), acc};
  }
  for (std::size_t i = t1; i > 0; --i) {
    double rate = phi_rate(sel, i - 1, L), step = rate * g.cell_width(i - 1);
    if (acc + step >= value) return {std::max(g[i] - (value - acc) / rate, g[i - 1]), value};
    acc += step;
  }
  return {g.front(), acc};
}

}  // namespace detail

/// φ_{t1,±}(s) = L|s - t1| + ‖b̂'‖_{L^1} between t1 and s, b̂ piecewise linear.
inline double phi(const RadicalSelection& sel, std::size_t t1, double L, double s, Side side) {
  const auto& g = sel.grid();
  const double t = g[t1];
  if (s < g.front() || s > g.back() || (side == Side::plus ? s < t : s > t))
    throw Error(ErrorCode::OutOfRange, "s = " + std::to_string(s) + " is not on the " +
                                           (side == Side::plus ? "right" : "left") + " of t1 = " + std::to_string(t));
  double acc = 0.0;
  if (side == Side::plus) {
    for (std::size_t i = t1; i + 1 < sel.size() && g[i] < s; ++i)
      acc += detail::phi_rate(sel, i, L) * (std::min(s, g[i + 1]) - g[i]);
  } else {
    for (std::size_t i = t1; i > 0 && g[i] > s; --i)
      acc += detail::phi_rate(sel, i - 1, L) * (g[i] - std::max(s, g[i - 1]));
  }
  return acc;
}

/// Prepared interval at node t1: symmetric (φ_- = φ_+ = D/2 |b̂_ℓ(t1)|) when
/// possible, otherwise the side reaching the boundary of I first stops there
/// and the other side takes the remainder.
inline PreparedInterval build_prepared_interval(const RadicalSelection& sel, std::size_t t1, std::size_t ell,
                                                double L, double D) {
  if (t1 >= sel.size()) throw Error(ErrorCode::OutOfRange, "t1 outside the grid");
  if (!(D > 0.0 && D < 1.0 / 3.0)) throw Error(ErrorCode::InputError, "D must lie in (0, 1/3)");
  if (!(L > 0.0)) throw Error(ErrorCode::InputError, "L must be positive");
  const double mod = std::abs(sel.hat(t1, ell));
  if (mod == 0.0) throw Error(ErrorCode::DominantVanishes, "b̂_ℓ(t1) = 0 at t = " + std::to_string(sel.grid()[t1]));
  PreparedInterval J;
  J.node = t1;
  J.t1 = sel.grid()[t1];
  J.ell = ell;
  J.D = D;
  J.L = L;
  J.target = D * mod;
  const double half = 0.5 * J.target;
  auto [sp, fp] = detail::phi_inverse(sel, t1, L, half, Side::plus);
  auto [sm, fm] = detail::phi_inverse(sel, t1, L, half, Side::minus);
  if (fp >= half && fm >= half) {
    J.kind = IntervalKind::first;
  } else {
    J.kind = IntervalKind::second;
    if (fp < half) std::tie(sm, fm) = detail::phi_inverse(sel, t1, L, J.target - fp, Side::minus);
    else std::tie(sp, fp) = detail::phi_inverse(sel, t1, L, J.target - fm, Side::plus);
    J.saturated = fp + fm < J.target;
  }
  J.s_minus = sm;
  J.s_plus = sp;
  J.phi_minus = fm;
  J.phi_plus = fp;
  return J;
}

struct CoverReport {
  std::vector<PreparedInterval> built;
  std::vector<PreparedInterval> selected;
  /// Index into `built` of each selected interval.
  std::vector<std::size_t> selected_from;
  /// |I'|: total length of the components of I' (delimited by zero nodes and the domain ends).
  double measure = 0.0;
  double total_length = 0.0;
  std::size_t max_overlap = 0;
  std::vector<double> uncovered;
  /// Selected intervals reaching outside their component of I'.
  std::vector<double> escaping;

  bool coverage() const { return uncovered.empty(); }
  bool overlap_ok() const { return max_overlap <= 2; }
  bool length_ok() const { return total_length <= 2.0 * measure * (1.0 + 1e-12); }
  bool inside_ok() const { return escaping.empty(); }
  bool ok() const { return coverage() && overlap_ok() && length_ok() && inside_ok(); }
  std::string violation() const {
    if (!uncovered.empty()) return "node t = " + std::to_string(uncovered.front()) + " is not covered";
    if (!overlap_ok()) return "a point lies in " + std::to_string(max_overlap) + " selected intervals";
    if (!length_ok()) return "total length " + std::to_string(total_length) + " exceeds 2|I'| = " +
                             std::to_string(2.0 * measure);
    if (!escaping.empty()) return "interval at t1 = " + std::to_string(escaping.front()) + " leaves I'";
    return {};
  }
};

/// Largest number of the intervals containing a common point (open intervals).
inline std::size_t max_overlap(const std::vector<PreparedInterval>& js) {
  std::vector<double> lo, hi, pts;
  for (const auto& j : js) {
    lo.push_back(j.s_minus);
    hi.push_back(j.s_plus);
  }
  std::sort(lo.begin(), lo.end());
  std::sort(hi.begin(), hi.end());
  pts = lo;
  pts.insert(pts.end(), hi.begin(), hi.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto count_lt = [](const std::vector<double>& v, double x) {
    return std::lower_bound(v.begin(), v.end(), x) - v.begin();
  };
  auto count_le = [](const std::vector<double>& v, double x) {
    return std::upper_bound(v.begin(), v.end(), x) - v.begin();
  };
  std::ptrdiff_t best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // At the point itself, then on the open gap to its right.
    best = std::max(best, count_lt(lo, pts[i]) - count_le(hi, pts[i]));
    if (i + 1 < pts.size()) best = std::max(best, count_le(lo, pts[i]) - count_le(hi, pts[i]));
  }
  return static_cast<std::size_t>(best);
}

/// Prepared intervals at every node of I' and the greedy two-overlap subcollection.
///
/// Per component of I' the sweep keeps the leftmost node not yet covered and
/// selects, among the built intervals containing it, one reaching farthest to
/// the right. Coverage, overlap and total length are then measured, never
/// assumed; the report lists every violation.
inline CoverReport evaluate_cover(const RadicalSelection& sel, double L, double D) {
  const std::size_t n = sel.size();
  const auto& g = sel.grid();
  std::vector<bool> nonzero(n);
  for (std::size_t i = 0; i < n; ++i) nonzero[i] = norm2(sel.base[i]) != 0.0;
  if (std::none_of(nonzero.begin(), nonzero.end(), [](bool b) { return b; }))
    throw Error(ErrorCode::InputError, "b vanishes at every node");

  CoverReport r;
  std::vector<std::size_t> index_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!nonzero[i]) continue;
    index_of[i] = r.built.size();
    r.built.push_back(build_prepared_interval(sel, i, dominant_index(sel, i), L, D));
  }
  auto contains = [&](const PreparedInterval& J, double t) {
    return (J.s_minus < t && t < J.s_plus) || (t == g.front() && J.s_minus == t && J.s_plus > t) ||
           (t == g.back() && J.s_plus == t && J.s_minus < t);
  };

  std::size_t i = 0;
  while (i < n) {
    if (!nonzero[i]) {
      ++i;
      continue;
    }
    std::size_t first = i, last = i;
    while (last + 1 < n && nonzero[last + 1]) ++last;
    const double c_lo = first == 0 ? g.front() : g[first - 1];
    const double c_hi = last + 1 == n ? g.back() : g[last + 1];
    r.measure += c_hi - c_lo;

    // Built intervals of the component ordered by left end.
    std::vector<std::size_t> by_left;
    for (std::size_t k = first; k <= last; ++k) by_left.push_back(index_of[k]);
    std::stable_sort(by_left.begin(), by_left.end(),
                     [&](std::size_t a, std::size_t b) { return r.built[a].s_minus < r.built[b].s_minus; });
    std::size_t cursor = 0, best = r.built.size();
    std::size_t f = first;
    while (f <= last) {
      const double t = g[f];
      while (cursor < by_left.size() && r.built[by_left[cursor]].s_minus < t) {
        std::size_t c = by_left[cursor++];
        if (best == r.built.size() || r.built[c].s_plus > r.built[best].s_plus) best = c;
      }
      if (best == r.built.size() || !contains(r.built[best], t)) {
        // Nothing reaches t; fall back to t's own interval if it contains t.
        const auto& own = r.built[index_of[f]];
        if (!contains(own, t)) {
          r.uncovered.push_back(t);
          ++f;
          continue;
        }
        best = index_of[f];
      }
      const auto& J = r.built[best];
      r.selected.push_back(J);
      r.selected_from.push_back(best);
      if (J.s_minus < c_lo || J.s_plus > c_hi) r.escaping.push_back(J.t1);
      while (f <= last && contains(J, g[f])) ++f;
    }
    i = last + 1;
  }
  for (const auto& J : r.selected) r.total_length += J.length();
  r.max_overlap = max_overlap(r.selected);
  return r;
}

/// evaluate_cover, failing with CoverPropertyViolation on any violated property.
inline CoverReport select_cover(const RadicalSelection& sel, double L, double D) {
  auto r = evaluate_cover(sel, L, D);
  if (!r.ok()) throw Error(ErrorCode::CoverPropertyViolation, r.violation());
  return r;
}

}  // namespace orbitlift

#endif  // ORBITLIFT_COVERS_HPP
