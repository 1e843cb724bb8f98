#ifndef ORBITLIFT_REDUCTION_HPP
#define ORBITLIFT_REDUCTION_HPP

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "orbitlift/core.hpp"
#include "orbitlift/invariants.hpp"
#include "orbitlift/lifting.hpp"

namespace orbitlift {

/// A curve a together with fixed continuous selections â_j of a_j^{1/d_j}.
struct RadicalSelection {
  SampledCurve base;
  SampledCurve selections;
  std::vector<int> degrees;
  /// ‖â_j'‖_{L^1} over the whole grid, per component.
  std::vector<double> l1_norms;
  double residual = 0.0;

  const Grid& grid() const { return base.grid(); }
  std::size_t size() const { return base.size(); }
  std::size_t components() const { return degrees.size(); }
  cplx hat(std::size_t node, std::size_t j) const { return selections[node][j]; }
};

/// Σ_cells |Δc_j| for nodes lo..hi of component j (the L^1 norm of the
/// derivative of the piecewise linear interpolant).
inline double l1_variation(const SampledCurve& c, std::size_t j, std::size_t lo, std::size_t hi) {
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += std::abs(c[i + 1][j] - c[i][j]);
  return s;
}

/// Continuous radicals of every component of `a`.
///
/// With an oracle each component is refined on its own; the union of the
/// refined grids is then resampled so all selections share one grid.
inline RadicalSelection radical_selections(const SampledCurve& a, const std::vector<int>& degrees,
                                           const CurveOracle& oracle = nullptr, const LiftOptions& opts = {}) {
  if (degrees.size() != a.components())
    throw Error(ErrorCode::ShapeMismatch, std::to_string(degrees.size()) + " degrees for " +
                                              std::to_string(a.components()) + " components");
  for (int d : degrees)
    if (d < 1) throw Error(ErrorCode::ShapeMismatch, "degrees must be >= 1");
  SampledCurve base = a;
  if (oracle) {
    std::set<double> nodes(a.grid().nodes().begin(), a.grid().nodes().end());
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      CurveOracle oj = [&oracle, j](double t) { return CVec{oracle(t).at(j)}; };
      auto lift = continuous_radical(a.component(j), degrees[j], oj, opts);
      nodes.insert(lift.grid.nodes().begin(), lift.grid.nodes().end());
    }
    if (nodes.size() != a.size()) {
      Grid merged(std::vector<double>(nodes.begin(), nodes.end()));
      std::vector<CVec> v(merged.size());
      std::size_t src = 0;
      for (std::size_t i = 0; i < merged.size(); ++i) {
        while (src < a.size() && a.t(src) < merged[i]) ++src;
        v[i] = src < a.size() && a.t(src) == merged[i] ? a[src] : oracle(merged[i]);
      }
      base = SampledCurve(merged, std::move(v));
    }
  }
  RadicalSelection sel{base, base, degrees, {}, 0.0};
  std::vector<CVec> hat(base.size(), CVec(degrees.size()));
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    auto lift = continuous_radical(base.component(j), degrees[j], nullptr, opts);
    for (std::size_t i = 0; i < base.size(); ++i) hat[i][j] = lift.branches[0][i][0];
    sel.residual = std::max(sel.residual, lift.residual);
  }
  sel.selections = SampledCurve(base.grid(), std::move(hat));
  for (std::size_t j = 0; j < degrees.size(); ++j)
    sel.l1_norms.push_back(l1_variation(sel.selections, j, 0, base.size() - 1));
  return sel;
}

/// Smallest index k with |â_k(t_node)| = max_j |â_j(t_node)|.
inline std::size_t dominant_index(const RadicalSelection& sel, std::size_t node) {
  std::size_t k = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < sel.components(); ++j) {
    double m = std::abs(sel.hat(node, j));
    if (m > best) {
      best = m;
      k = j;
    }
  }
  if (best <= 0.0)
    throw Error(ErrorCode::AllZeroAtPoint, "â vanishes at t = " + std::to_string(sel.grid()[node]));
  return k;
}

/// The curve ((â_k^{-1} â_1)^{d_1}, ..., (â_k^{-1} â_n)^{d_n}) on nodes lo..hi.
inline SampledCurve normalized_curve(const RadicalSelection& sel, std::size_t k, std::size_t lo, std::size_t hi) {
  std::vector<double> t;
  std::vector<CVec> v;
  for (std::size_t i = lo; i <= hi; ++i) {
    cplx ak = sel.hat(i, k);
    if (ak == cplx{0.0, 0.0})
      throw Error(ErrorCode::VanishingDominant, "â_k vanishes at t = " + std::to_string(sel.grid()[i]));
    CVec row(sel.components());
    for (std::size_t j = 0; j < row.size(); ++j)
      row[j] = j == k ? cplx{1.0, 0.0} : power_map(sel.hat(i, j) / ak, sel.degrees[j]);
    t.push_back(sel.grid()[i]);
    v.push_back(std::move(row));
  }
  if (t.size() == 1) {  // a grid needs two nodes; a single node is a constant curve
    t.push_back(std::nextafter(t[0], std::numeric_limits<double>::infinity()));
    v.push_back(v[0]);
  }
  return SampledCurve(Grid(std::move(t)), std::move(v));
}

inline SampledCurve normalized_curve(const RadicalSelection& sel, std::size_t k) {
  return normalized_curve(sel, k, 0, sel.size() - 1);
}

enum class StopKind { equality, boundary };

inline const char* to_string(StopKind s) { return s == StopKind::equality ? "equality" : "boundary"; }

/// Curve, interval (node range lo..hi), point t0, dominant index k, constant B and M.
struct AdmissibleData {
  RadicalSelection sel;
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t t0 = 0;
  std::size_t k = 0;
  double B = 0.25;
  double M = 0.0;
  StopKind stop = StopKind::equality;
  /// B|â_k(t0)| - (M|I| + ‖â'‖_{L^1(I)}) for the returned interval.
  double slack = 0.0;
  /// Constraint excess of the first rejected extension (0 for the boundary case).
  double rejected_excess = 0.0;

  double length() const { return sel.grid()[hi] - sel.grid()[lo]; }
  double dominant_modulus() const { return std::abs(sel.hat(t0, k)); }
  /// ‖â'‖_{L^1(I)} = Σ_j ‖â_j'‖_{L^1(I)}.
  double l1() const {
    double s = 0.0;
    for (std::size_t j = 0; j < sel.components(); ++j) s += l1_variation(sel.selections, j, lo, hi);
    return s;
  }
};

namespace detail {

/// |Δ a_j^{(d-1)}| / Δt per cell, where d is the maximal degree.
inline std::vector<std::vector<double>> lip_slopes(const RadicalSelection& sel) {
  const int d = *std::max_element(sel.degrees.begin(), sel.degrees.end());
  SampledCurve top = d == 1 ? sel.base : finite_difference(sel.base, d - 1);
  std::vector<std::vector<double>> out(sel.components(), std::vector<double>(sel.size() - 1));
  for (std::size_t j = 0; j < sel.components(); ++j)
    for (std::size_t i = 0; i + 1 < sel.size(); ++i)
      out[j][i] = std::abs(top[i + 1][j] - top[i][j]) / sel.grid().cell_width(i);
  return out;
}

inline double m_constant(const std::vector<double>& lip, const std::vector<int>& degrees, double ak0) {
  const int d = *std::max_element(degrees.begin(), degrees.end());
  double m = 0.0;
  for (std::size_t j = 0; j < lip.size(); ++j)
    m = std::max(m, std::pow(lip[j], 1.0 / d) * std::pow(ak0, static_cast<double>(d - degrees[j]) / d));
  return m;
}

}  // namespace detail

/// M = max_j Lip_I(a_j^{(d-1)})^{1/d} |â_k(t0)|^{(d-d_j)/d} for the node range lo..hi.
inline double compute_M(const RadicalSelection& sel, std::size_t lo, std::size_t hi, std::size_t t0, std::size_t k) {
  auto slopes = detail::lip_slopes(sel);
  std::vector<double> lip(sel.components(), 0.0);
  for (std::size_t j = 0; j < lip.size(); ++j)
    for (std::size_t i = lo; i < hi; ++i) lip[j] = std::max(lip[j], slopes[j][i]);
  return detail::m_constant(lip, sel.degrees, std::abs(sel.hat(t0, k)));
}

/// Admissible data on a given node range (no maximality, no checks).
inline AdmissibleData make_admissible_data(const RadicalSelection& sel, std::size_t lo, std::size_t hi, std::size_t t0,
                                           std::size_t k, double B) {
  if (!(lo <= t0 && t0 <= hi && hi < sel.size())) throw Error(ErrorCode::OutOfRange, "t0 must lie in the interval");
  AdmissibleData data{sel, lo, hi, t0, k, B};
  data.M = compute_M(sel, lo, hi, t0, k);
  data.stop = lo == 0 && hi + 1 == sel.size() ? StopKind::boundary : StopKind::equality;
  data.slack = B * data.dominant_modulus() - (data.M * data.length() + data.l1());
  return data;
}

/// Largest node range around t0 on which M|I| + ‖â'‖_{L^1(I)} <= B|â_k(t0)|.
///
/// Nodes are added alternately on the left and the right; a side stops at the
/// domain boundary or at the first node that would break the constraint, and
/// the other side keeps growing alone. M is recomputed for every candidate.
inline AdmissibleData maximal_admissible_interval(const RadicalSelection& sel, std::size_t t0, std::size_t k,
                                                  double B = 0.25) {
  if (t0 >= sel.size()) throw Error(ErrorCode::OutOfRange, "t0 outside the grid");
  if (!(B > 0.0 && B < 1.0 / 3.0)) throw Error(ErrorCode::InputError, "B must lie in (0, 1/3)");
  const double ak0 = std::abs(sel.hat(t0, k));
  if (ak0 == 0.0) throw Error(ErrorCode::AllZeroAtPoint, "â_k(t0) = 0");
  const std::size_t n = sel.components();
  const auto slopes = detail::lip_slopes(sel);
  const auto& grid = sel.grid();
  const double budget = B * ak0;

  std::size_t lo = t0, hi = t0;
  std::vector<double> lip(n, 0.0);
  double l1 = 0.0;
  auto cost_with_cell = [&](std::size_t cell, double len, std::vector<double>& lip_out, double& l1_out) {
    lip_out = lip;
    l1_out = l1;
    for (std::size_t j = 0; j < n; ++j) {
      lip_out[j] = std::max(lip_out[j], slopes[j][cell]);
      l1_out += std::abs(sel.selections[cell + 1][j] - sel.selections[cell][j]);
    }
    return detail::m_constant(lip_out, sel.degrees, ak0) * len + l1_out;
  };

  bool left_open = lo > 0, right_open = hi + 1 < sel.size();
  double first_excess = 0.0;
  bool left_turn = true;
  std::vector<double> cand_lip;
  double cand_l1 = 0.0;
  while (left_open || right_open) {
    bool go_left = left_open && (left_turn || !right_open);
    left_turn = !left_turn;
    std::size_t cell = go_left ? lo - 1 : hi;
    double len = go_left ? grid[hi] - grid[lo - 1] : grid[hi + 1] - grid[lo];
    double cost = cost_with_cell(cell, len, cand_lip, cand_l1);
    if (cost <= budget) {
      lip = cand_lip;
      l1 = cand_l1;
      if (go_left) left_open = --lo > 0;
      else right_open = ++hi + 1 < sel.size();
    } else {
      if (first_excess == 0.0) first_excess = cost - budget;
      (go_left ? left_open : right_open) = false;
    }
  }
  AdmissibleData data{sel, lo, hi, t0, k, B};
  data.M = detail::m_constant(lip, sel.degrees, ak0);
  data.stop = lo == 0 && hi + 1 == sel.size() ? StopKind::boundary : StopKind::equality;
  data.slack = budget - (data.M * data.length() + l1);
  data.rejected_excess = first_excess;
  return data;
}

struct AdmissibleReport {
  // Preconditions.
  bool b_in_range = false;       ///< 0 < B < 1/3
  bool dominant = false;         ///< |â_k(t0)| = max_j |â_j(t0)| > 0
  bool assumption = false;       ///< ‖â'‖_{L^1(I)} <= B |â_k(t0)|
  // Conclusions.
  bool deviation_bound = false;            ///< |â_j(t) - â_j(t0)| <= B |â_k(t0)|
  bool ratio_bound = false;            ///< 2/3 < 1-B <= |â_k(t)/â_k(t0)| <= 1+B < 4/3
  bool modulus_bound = false;            ///< |â_j(t)| <= 4/3 |â_k(t0)| <= 2 |â_k(t)|
  bool length_bound = false;     ///< length of the normalized curve <= 3 d^2 2^d B
  double max_deviation = 0.0;    ///< max |â_j(t) - â_j(t0)| / |â_k(t0)|
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double length = 0.0;
  double length_limit = 0.0;
  std::string first_failure;

  bool preconditions() const { return b_in_range && dominant && assumption; }
  bool conclusions() const { return deviation_bound && ratio_bound && modulus_bound && length_bound; }
};

/// Evaluates the consequences of admissibility on the sampled data.
///
/// Conclusions are checked on the samples independently of whether the
/// preconditions hold, so violated preconditions show which conclusion breaks.
inline AdmissibleReport check_admissible(const AdmissibleData& data, double slack = 1e-12) {
  const auto& sel = data.sel;
  const std::size_t n = sel.components();
  const double B = data.B, ak0 = data.dominant_modulus();
  const int d = *std::max_element(sel.degrees.begin(), sel.degrees.end());
  AdmissibleReport r;
  r.b_in_range = B > 0.0 && B < 1.0 / 3.0;
  r.dominant = ak0 > 0.0;
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(sel.hat(data.t0, j)) > ak0) r.dominant = false;
  r.assumption = data.l1() <= B * ak0 * (1.0 + slack);
  if (!r.dominant) {
    r.first_failure = "precondition: k is not dominant at t0";
    return r;
  }

  r.min_ratio = std::numeric_limits<double>::infinity();
  bool modulus_bound = true;
  for (std::size_t i = data.lo; i <= data.hi; ++i) {
    double akt = std::abs(sel.hat(i, data.k));
    for (std::size_t j = 0; j < n; ++j) {
      r.max_deviation = std::max(r.max_deviation, std::abs(sel.hat(i, j) - sel.hat(data.t0, j)) / ak0);
      double aj = std::abs(sel.hat(i, j));
      if (!(aj <= 4.0 / 3.0 * ak0 * (1.0 + slack) && 4.0 / 3.0 * ak0 <= 2.0 * akt * (1.0 + slack))) modulus_bound = false;
    }
    r.min_ratio = std::min(r.min_ratio, akt / ak0);
    r.max_ratio = std::max(r.max_ratio, akt / ak0);
  }
  r.deviation_bound = r.max_deviation <= B * (1.0 + slack) + slack;
  r.ratio_bound = 2.0 / 3.0 < 1.0 - B && r.min_ratio >= (1.0 - B) * (1.0 - slack) &&
            r.max_ratio <= (1.0 + B) * (1.0 + slack) && 1.0 + B < 4.0 / 3.0;
  r.modulus_bound = modulus_bound;
  r.length_limit = 3.0 * d * d * std::pow(2.0, d) * B;
  if (std::all_of(sel.selections.values().begin() + static_cast<std::ptrdiff_t>(data.lo),
                  sel.selections.values().begin() + static_cast<std::ptrdiff_t>(data.hi) + 1,
                  [&](const CVec& v) { return v[data.k] != cplx{0.0, 0.0}; })) {
    auto under = normalized_curve(sel, data.k, data.lo, data.hi);
    for (std::size_t i = 0; i + 1 < under.size(); ++i) r.length += distance2(under[i + 1], under[i]);
    r.length_bound = r.length <= r.length_limit * (1.0 + slack) + slack;
  } else {
    r.length = std::numeric_limits<double>::infinity();
  }

  if (!r.b_in_range) r.first_failure = "precondition: B outside (0, 1/3)";
  else if (!r.assumption) r.first_failure = "precondition: L1 smallness assumption";
  if (!r.deviation_bound) r.first_failure += (r.first_failure.empty() ? "" : "; ") + std::string("conclusion: deviation bound");
  else if (!r.ratio_bound) r.first_failure += (r.first_failure.empty() ? "" : "; ") + std::string("conclusion: ratio bound");
  else if (!r.modulus_bound) r.first_failure += (r.first_failure.empty() ? "" : "; ") + std::string("conclusion: modulus bound");
  else if (!r.length_bound) r.first_failure += (r.first_failure.empty() ? "" : "; ") + std::string("conclusion: length");
  return r;
}

struct DerivativeBoundReport {
  /// max_{s<d, j} ‖a_j^(s)‖_{L^∞(I)} |I|^s |â_k(t0)|^{-d_j}
  double sup_constant = 0.0;
  /// max_j Lip_I(a_j^(d-1)) |I|^d |â_k(t0)|^{-d_j}
  double lip_constant = 0.0;
  double measured() const { return std::max(sup_constant, lip_constant); }
};

/// Smallest C with ‖a_j^{(s)}‖_{L^∞(I)} <= C |I|^{-s} |â_k(t0)|^{d_j} on the
/// samples, for 1 <= s < d (sup_constant) and for the Lipschitz constant of
/// a_j^{(d-1)} with s = d (lip_constant).
inline DerivativeBoundReport check_derivative_bounds(const AdmissibleData& data) {
  const auto& sel = data.sel;
  const int d = *std::max_element(sel.degrees.begin(), sel.degrees.end());
  if (data.hi - data.lo < static_cast<std::size_t>(d) || sel.size() <= static_cast<std::size_t>(d))
    throw Error(ErrorCode::OrderTooHigh, "interval too short for derivatives of order " + std::to_string(d - 1));
  const double len = data.length(), ak0 = data.dominant_modulus();
  DerivativeBoundReport r;
  for (int s = 1; s < d; ++s) {
    auto fd = finite_difference(sel.base, s);
    for (std::size_t j = 0; j < sel.components(); ++j) {
      double sup = 0.0;
      for (std::size_t i = data.lo; i <= data.hi; ++i) sup = std::max(sup, std::abs(fd[i][j]));
      r.sup_constant = std::max(r.sup_constant, sup * std::pow(len, s) * std::pow(ak0, -sel.degrees[j]));
    }
  }
  auto slopes = detail::lip_slopes(sel);
  for (std::size_t j = 0; j < sel.components(); ++j) {
    double lip = 0.0;
    for (std::size_t i = data.lo; i < data.hi; ++i) lip = std::max(lip, slopes[j][i]);
    r.lip_constant = std::max(r.lip_constant, lip * std::pow(len, d) * std::pow(ak0, -sel.degrees[j]));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Root clusters
// ---------------------------------------------------------------------------

struct ClusterPiece {
  std::vector<std::size_t> branches;
  LiftedCurve lift;
  SampledCurve centroid;
  /// Elementary symmetric values of the recentred roots (e_1 = 0).
  SampledCurve coefficients;
  std::vector<int> degrees;
};

struct ClusterSplit {
  std::vector<ClusterPiece> pieces;
  /// max over nodes of |σ(recombined) - σ(lift)|.
  double recombination_error = 0.0;
};

namespace detail {

/// Coefficients (highest first) of p(X - c) for p given highest first (Horner in X - c).
inline CVec taylor_shift(const CVec& p, cplx c) {
  CVec r{p[0]};
  for (std::size_t k = 1; k < p.size(); ++k) {
    CVec next(r.size() + 1, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i] += r[i];
      next[i + 1] -= c * r[i];
    }
    next.back() += p[k];
    r = std::move(next);
  }
  return r;
}

inline CVec poly_mul(const CVec& a, const CVec& b) {
  CVec c(a.size() + b.size() - 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Connected components of {|λ_i - λ_j| <= gap}, each sorted, ordered by smallest member.
inline std::vector<std::vector<std::size_t>> single_linkage(const CVec& z, double gap) {
  const std::size_t q = z.size();
  std::vector<std::size_t> label(q);
  for (std::size_t i = 0; i < q; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j)
        if (std::abs(z[i] - z[j]) <= gap && label[j] < label[i]) {
          label[i] = label[j];
          changed = true;
        }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(q, q);
  for (std::size_t i = 0; i < q; ++i) {
    if (slot[label[i]] == q) {
      slot[label[i]] = groups.size();
      groups.emplace_back();
    }
    groups[slot[label[i]]].push_back(i);
  }
  return groups;
}

}  // namespace detail

/// Splits a root lift into clusters separated by more than `gap`.
///
/// At every node the same partition of the branches is required, with groups
/// at distance > gap from each other and of diameter < gap/3. For each group
/// the centroid and the elementary symmetric values of the recentred roots are
/// returned; recombining all groups must reproduce σ of the full lift.
inline ClusterSplit split_clusters(const LiftedCurve& lift, double gap = 1e-7) {
  if (lift.dim() != 1) throw Error(ErrorCode::ShapeMismatch, "cluster splitting needs scalar branches");
  const std::size_t q = lift.branch_count(), n = lift.size();
  auto roots_at = [&](std::size_t i) {
    CVec z(q);
    for (std::size_t b = 0; b < q; ++b) z[b] = lift.branches[b][i][0];
    return z;
  };
  const auto groups = detail::single_linkage(roots_at(0), gap);
  for (std::size_t i = 0; i < n; ++i) {
    CVec z = roots_at(i);
    if (detail::single_linkage(z, gap) != groups)
      throw Error(ErrorCode::ClustersNotSeparated, "cluster partition changes at t = " + std::to_string(lift.grid[i]));
    for (const auto& g : groups)
      for (std::size_t a : g)
        for (std::size_t b : g)
          if (std::abs(z[a] - z[b]) >= gap / 3.0)
            throw Error(ErrorCode::ClustersNotSeparated,
                        "cluster diameter >= gap/3 at t = " + std::to_string(lift.grid[i]));
  }

  ClusterSplit out;
  for (const auto& g : groups) {
    ClusterPiece piece{g, LiftedCurve{lift.grid, {}}, SampledCurve(lift.grid, std::vector<CVec>(n, CVec(1))),
                       SampledCurve(lift.grid, std::vector<CVec>(n, CVec(g.size())))};
    for (std::size_t b : g) piece.lift.branches.push_back(lift.branches[b]);
    std::vector<CVec> cen(n), coef(n);
    for (std::size_t i = 0; i < n; ++i) {
      cplx c{0.0, 0.0};
      for (std::size_t b : g) c += lift.branches[b][i][0];
      c /= static_cast<double>(g.size());
      CVec shifted;
      for (std::size_t b : g) shifted.push_back(lift.branches[b][i][0] - c);
      cen[i] = {c};
      coef[i] = elementary_symmetric(shifted);
    }
    piece.centroid = SampledCurve(lift.grid, std::move(cen));
    piece.coefficients = SampledCurve(lift.grid, std::move(coef));
    for (std::size_t k = 1; k <= g.size(); ++k) piece.degrees.push_back(static_cast<int>(k));
    out.pieces.push_back(std::move(piece));
  }

  for (std::size_t i = 0; i < n; ++i) {
    CVec product{cplx{1.0, 0.0}};
    for (const auto& piece : out.pieces) {
      // Π(X - (c + μ)) = P(X - c) with P the polynomial of the recentred roots μ.
      CVec p = monic_from_elementary(piece.coefficients[i]);
      product = detail::poly_mul(product, detail::taylor_shift(p, piece.centroid[i][0]));
    }
    auto e = elementary_from_monic(product);
    auto ref = elementary_symmetric(roots_at(i));
    for (std::size_t k = 0; k < q; ++k)
      out.recombination_error = std::max(out.recombination_error, std::abs(e[k] - ref[k]));
  }
  return out;
}

}  // namespace orbitlift

#endif  // ORBITLIFT_REDUCTION_HPP
