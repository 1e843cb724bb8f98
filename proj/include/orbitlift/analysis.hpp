#ifndef ORBITLIFT_ANALYSIS_HPP
#define ORBITLIFT_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "orbitlift/core.hpp"
#include "orbitlift/invariants.hpp"
#include "orbitlift/lifting.hpp"
#include "orbitlift/norms.hpp"

namespace orbitlift {

enum class NormKind { holder, lp, weak_lp, normalized_lp, normalized_weak };

inline const char* to_string(NormKind k) {
  switch (k) {
    case NormKind::holder: return "holder";
    case NormKind::lp: return "lp";
    case NormKind::weak_lp: return "weak_lp";
    case NormKind::normalized_lp: return "normalized_lp";
    case NormKind::normalized_weak: return "normalized_weak";
  }
  return "unknown";
}

struct NormReport {
  NormKind kind = NormKind::lp;
  /// Integrability exponent; for Hölder norms the exponent α.
  double p = 1.0;
  /// Differentiability order (Hölder norms only).
  int k = 0;
  double value = 0.0;
  int level = 0;
  std::size_t grid_size = 0;
  /// Hölder norms: max_s sup|f^(s)| and Höld_α(f^(k)) separately.
  double sup_part = 0.0;
  double holder_part = 0.0;
};

/// The report multiplied by |Ω|^{-1/p}.
inline NormReport normalized(const NormReport& r, double measure) {
  NormReport out = r;
  if (r.kind == NormKind::lp) out.kind = NormKind::normalized_lp;
  else if (r.kind == NormKind::weak_lp) out.kind = NormKind::normalized_weak;
  else throw Error(ErrorCode::InputError, "only L^p and weak-L^p reports can be normalized");
  out.value = r.value * std::pow(measure, -1.0 / r.p);
  return out;
}

/// Default seed for sampled pair sets.
inline constexpr std::uint64_t default_seed = 20240611;

namespace detail {

/// Max over node pairs (i < j) of score(i, j): all pairs up to 4096 nodes,
/// otherwise every pair within 64 nodes plus 10^6 seeded random pairs.
template <class Score>
double max_over_pairs(std::size_t n, Score score, std::uint64_t seed) {
  double best = 0.0;
  if (n <= 4096) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, score(i, j));
    return best;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < std::min(n, i + 65); ++j) best = std::max(best, score(i, j));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int r = 0; r < 1000000; ++r) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    best = std::max(best, score(std::min(i, j), std::max(i, j)));
  }
  return best;
}

inline double sup_norm(const SampledCurve& c) {
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s = std::max(s, norm2(c[i]));
  return s;
}

}  // namespace detail

/// Höld_α of a sampled curve: sup |f(t) - f(u)| / |t - u|^α over node pairs.
inline double holder_quotient(const SampledCurve& c, double alpha, std::uint64_t seed = default_seed) {
  return detail::max_over_pairs(
      c.size(), [&](std::size_t i, std::size_t j) { return distance2(c[i], c[j]) / std::pow(c.t(j) - c.t(i), alpha); },
      seed);
}

/// Diameter of the image of the curve.
inline double image_diameter(const SampledCurve& c, std::uint64_t seed = default_seed) {
  return detail::max_over_pairs(c.size(), [&](std::size_t i, std::size_t j) { return distance2(c[i], c[j]); }, seed);
}

/// ‖f‖_{C^{k,α}} = max_{s<=k} sup |f^(s)| + Höld_α(f^(k)), derivatives by divided differences.
inline NormReport holder_norm(const SampledCurve& curve, int k, double alpha, std::uint64_t seed = default_seed) {
  if (k < 0 || curve.size() < static_cast<std::size_t>(k) + 2)
    throw Error(ErrorCode::OrderTooHigh, "Hölder norm of order " + std::to_string(k) + " needs more than " +
                                             std::to_string(curve.size()) + " nodes");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorCode::InputError, "α must lie in (0, 1]");
  NormReport r;
  r.kind = NormKind::holder;
  r.p = alpha;
  r.k = k;
  r.grid_size = curve.size();
  r.sup_part = detail::sup_norm(curve);
  SampledCurve top = curve;
  for (int s = 1; s <= k; ++s) {
    top = finite_difference(curve, s);
    r.sup_part = std::max(r.sup_part, detail::sup_norm(top));
  }
  r.holder_part = holder_quotient(top, alpha, seed);
  r.value = r.sup_part + r.holder_part;
  return r;
}

/// (Σ over cells |Δf/Δt|^p Δt)^{1/p}, Euclidean over components.
inline NormReport lp_derivative_norm(const SampledCurve& curve, double p) {
  if (p < 1.0) throw Error(ErrorCode::InputError, "p must be >= 1");
  NormReport r;
  r.kind = NormKind::lp;
  r.p = p;
  r.grid_size = curve.size();
  r.value = lp_of_cells(cell_slopes(curve), cell_widths(curve.grid()), p);
  return r;
}

/// Weak-L^p quasinorm sup_r r |{|f'| > r}|^{1/p} of the cellwise derivative.
///
/// With `resolve_zero_cells` the cells having one endpoint at an exact zero of
/// the curve are not used as thresholds (still counted in the level sets):
/// their chord slope does not resolve a singular derivative and would set the
/// supremum by itself. Without it the exact quasinorm of the step function is
/// returned.
inline NormReport weak_lp_quasinorm(const SampledCurve& curve, double p, bool resolve_zero_cells = true) {
  if (p < 1.0) throw Error(ErrorCode::InputError, "p must be >= 1");
  NormReport r;
  r.kind = NormKind::weak_lp;
  r.p = p;
  r.grid_size = curve.size();
  std::vector<bool> unresolved;
  if (resolve_zero_cells) unresolved = zero_adjacent_cells(curve);
  r.value = weak_of_cells(cell_slopes(curve), cell_widths(curve.grid()), p, unresolved);
  return r;
}

struct QpReport {
  double q = 1.0;
  double p = 2.0;
  double weak_q = 0.0;   ///< ‖f'‖*_{q,w}
  double lebesgue_q = 0.0;  ///< ‖f'‖*_{L^q}
  double weak_p = 0.0;   ///< ‖f'‖*_{p,w}
  double constant = 1.0;    ///< (p/(p-q))^{1/q}
  /// constant·weak_p - lebesgue_q, and lebesgue_q - weak_q.
  double slack_upper = 0.0;
  double slack_lower = 0.0;
  bool upper_holds = false;
  bool lower_holds = false;
  bool holds() const { return upper_holds && lower_holds; }
};

/// ‖f'‖*_{q,w} <= ‖f'‖*_{L^q} <= (p/(p-q))^{1/q} ‖f'‖*_{p,w} on the exact step function of slopes.
inline QpReport check_qp_inequality(const SampledCurve& curve, double q, double p) {
  if (!(q >= 1.0 && q < p)) throw Error(ErrorCode::InputError, "need 1 <= q < p");
  const double measure = curve.grid().length();
  QpReport r;
  r.q = q;
  r.p = p;
  r.weak_q = normalized(weak_lp_quasinorm(curve, q, false), measure).value;
  r.lebesgue_q = normalized(lp_derivative_norm(curve, q), measure).value;
  r.weak_p = normalized(weak_lp_quasinorm(curve, p, false), measure).value;
  r.constant = std::pow(p / (p - q), 1.0 / q);
  r.slack_upper = r.constant * r.weak_p - r.lebesgue_q;
  r.slack_lower = r.lebesgue_q - r.weak_q;
  r.upper_holds = r.lebesgue_q <= r.constant * r.weak_p + 1e-9;
  r.lower_holds = r.weak_q <= r.lebesgue_q + 1e-9;
  return r;
}

struct InterpolationReport {
  double lhs = 0.0;        ///< ‖f^(s)‖_{L^∞(I)}
  double variation = 0.0;  ///< V_I(f), diameter of f(I)
  double holder = 0.0;     ///< Höld_α(f^(m))
  double rhs = 0.0;
  double ratio = 0.0;
};

/// Ratio of ‖f^(s)‖_∞ to |I|^{-s}(V + V^{(m+α-s)/(m+α)} Höld_α(f^(m))^{s/(m+α)} |I|^s).
inline InterpolationReport check_interpolation_inequality(const SampledCurve& curve, int m, double alpha, int s,
                                                          std::uint64_t seed = default_seed) {
  if (s < 0 || s > m) throw Error(ErrorCode::InputError, "need 0 <= s <= m");
  InterpolationReport r;
  SampledCurve fm = m == 0 ? curve : finite_difference(curve, m);
  r.lhs = s == 0 ? detail::sup_norm(curve) : detail::sup_norm(finite_difference(curve, s));
  r.variation = image_diameter(curve, seed);
  r.holder = holder_quotient(fm, alpha, seed);
  const double len = curve.grid().length(), ma = m + alpha;
  r.rhs = std::pow(len, -s) *
          (r.variation + std::pow(r.variation, (ma - s) / ma) * std::pow(r.holder, s / ma) * std::pow(len, s));
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  return r;
}

struct MainBoundReport {
  double p = 1.0;
  double lhs = 0.0;   ///< ‖lift'‖_{L^p}
  double rhs0 = 0.0;  ///< max_j ‖a_j‖^{1/d_j}_{C^{d-1,1}}
  double ratio = 0.0;
  bool degenerate = false;  ///< rhs0 = 0
};

/// Measured constant of the main estimate ‖lift'‖_{L^p} <= C max_j ‖a_j‖^{1/d_j}_{C^{d-1,1}}.
inline MainBoundReport verify_main_bound(const SampledCurve& a, const LiftedCurve& lift, const RepresentationSpec& spec,
                                         double p, std::uint64_t seed = default_seed) {
  const double crit = spec.critical_exponent();
  if (!(p >= 1.0 && p < crit))
    throw Error(ErrorCode::ExponentOutOfRange,
                "p = " + std::to_string(p) + " outside [1, " + std::to_string(crit) + ")");
  const auto& deg = spec.degrees();
  if (deg.size() != a.components()) throw Error(ErrorCode::ShapeMismatch, "curve does not match the representation degrees");
  MainBoundReport r;
  r.p = p;
  r.lhs = lp_derivative_norm(lift.as_curve(), p).value;
  const int d = spec.max_degree();
  for (std::size_t j = 0; j < deg.size(); ++j) {
    double nj = holder_norm(a.component(j), d - 1, 1.0, seed).value;
    r.rhs0 = std::max(r.rhs0, std::pow(nj, 1.0 / deg[j]));
  }
  r.degenerate = r.rhs0 == 0.0;
  r.ratio = r.degenerate ? 0.0 : r.lhs / r.rhs0;
  return r;
}

// ---------------------------------------------------------------------------
// Critical exponent scan
// ---------------------------------------------------------------------------

/// Invariant curve to lift at increasing resolution.
struct ScanProblem {
  RepresentationSpec spec;
  CurveOracle oracle;
  double lo = -1.0;
  double hi = 1.0;
  /// Points towards which the grids are graded.
  std::vector<double> singular_points{0.0};
};

enum class Verdict { stable, diverging, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::diverging: return "diverging";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

struct ExponentScanReport {
  int d = 1;
  std::vector<double> p_grid;
  /// values[p index][level]
  std::vector<std::vector<double>> values;
  std::vector<std::size_t> grid_sizes;
  std::vector<Verdict> verdicts;
  double p_star = std::numeric_limits<double>::quiet_NaN();
  /// No stable or no diverging exponent in the range.
  bool at_boundary = false;
};

struct ScanOptions {
  /// Grid at level l reaches down to distance 10^{-decades_per_level (l+1)}.
  double decades_per_level = 40.0;
  double ratio = 1.01;
  double max_step = 0.01;
  double stable_tol = 0.02;
  double diverging_growth = 0.05;
};

/// Grid used at a refinement level of the scan.
inline Grid scan_grid(const ScanProblem& pb, int level, const ScanOptions& opt = {}) {
  double h_min = std::pow(10.0, -opt.decades_per_level * (level + 1));
  return geometric_grid(pb.lo, pb.hi, pb.singular_points, h_min, opt.ratio, opt.max_step);
}

/// Lift of the problem's curve over a grid (radical for cyclic specs, roots otherwise).
inline LiftedCurve lift_problem(const ScanProblem& pb, const Grid& grid) {
  auto a = sample(grid, pb.oracle);
  if (const auto* c = std::get_if<Cyclic>(&pb.spec.kind())) return continuous_radical(a, c->d, pb.oracle);
  if (std::holds_alternative<Symmetric>(pb.spec.kind())) return continuous_roots(a, pb.oracle);
  throw Error(ErrorCode::ShapeMismatch, "scan supports cyclic and symmetric specs");
}

/// Worker count: ORBITLIFT_THREADS if set, else hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("ORBITLIFT_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Classifies each p from its norms across levels and locates the critical exponent.
inline void classify_scan(ExponentScanReport& r, const ScanOptions& opt = {}) {
  r.verdicts.assign(r.p_grid.size(), Verdict::inconclusive);
  for (std::size_t ip = 0; ip < r.p_grid.size(); ++ip) {
    const auto& v = r.values[ip];
    const std::size_t L = v.size();
    bool diverging = L >= 2;
    for (std::size_t l = 0; l + 1 < L; ++l)
      if (!(v[l + 1] >= (1.0 + opt.diverging_growth) * v[l])) diverging = false;
    bool stable = L >= 2 && std::abs(v[L - 1] - v[L - 2]) < opt.stable_tol * std::abs(v[L - 2]);
    if (diverging) r.verdicts[ip] = Verdict::diverging;
    else if (stable) r.verdicts[ip] = Verdict::stable;
  }
  double smallest_div = std::numeric_limits<double>::infinity();
  for (std::size_t ip = 0; ip < r.p_grid.size(); ++ip)
    if (r.verdicts[ip] == Verdict::diverging) smallest_div = std::min(smallest_div, r.p_grid[ip]);
  double largest_stable = -std::numeric_limits<double>::infinity();
  for (std::size_t ip = 0; ip < r.p_grid.size(); ++ip)
    if (r.verdicts[ip] == Verdict::stable && r.p_grid[ip] < smallest_div)
      largest_stable = std::max(largest_stable, r.p_grid[ip]);
  r.at_boundary = !std::isfinite(smallest_div) || !std::isfinite(largest_stable);
  if (!r.at_boundary) r.p_star = 0.5 * (largest_stable + smallest_div);
  else if (std::isfinite(smallest_div)) r.p_star = smallest_div;
  else if (std::isfinite(largest_stable)) r.p_star = largest_stable;
}

/// L^p norms of the lift's derivative at increasing resolution for every p.
///
/// Levels are independent and computed in parallel; each writes only its own
/// column, so the result does not depend on the thread count.
inline ExponentScanReport critical_exponent_scan(const ScanProblem& pb, const std::vector<double>& p_grid, int levels,
                                                 const ScanOptions& opt = {}) {
  if (levels < 1) throw Error(ErrorCode::InputError, "levels must be >= 1");
  for (double p : p_grid)
    if (p < 1.0) throw Error(ErrorCode::InputError, "p must be >= 1");
  ExponentScanReport r;
  r.d = pb.spec.max_degree();
  r.p_grid = p_grid;
  r.values.assign(p_grid.size(), std::vector<double>(static_cast<std::size_t>(levels), 0.0));
  r.grid_sizes.assign(static_cast<std::size_t>(levels), 0);
  std::vector<std::string> failures(static_cast<std::size_t>(levels));
  std::vector<ErrorCode> codes(static_cast<std::size_t>(levels), ErrorCode::InputError);

  auto run_level = [&](int level) {
    try {
      auto lift = lift_problem(pb, scan_grid(pb, level, opt));
      auto curve = lift.as_curve();
      auto slopes = cell_slopes(curve);
      auto widths = cell_widths(curve.grid());
      r.grid_sizes[static_cast<std::size_t>(level)] = curve.size();
      for (std::size_t ip = 0; ip < p_grid.size(); ++ip)
        r.values[ip][static_cast<std::size_t>(level)] = lp_of_cells(slopes, widths, p_grid[ip]);
    } catch (const Error& e) {
      failures[static_cast<std::size_t>(level)] = e.what();
      codes[static_cast<std::size_t>(level)] = e.code();
    }
  };
  const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(levels));
  if (workers <= 1) {
    for (int l = 0; l < levels; ++l) run_level(l);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int l = static_cast<int>(w); l < levels; l += static_cast<int>(workers)) run_level(l);
      });
    for (auto& th : pool) th.join();
  }
  for (std::size_t l = 0; l < failures.size(); ++l)
    if (!failures[l].empty()) throw Error(codes[l], "level " + std::to_string(l) + ": " + failures[l]);
  classify_scan(r, opt);
  return r;
}

/// Evenly spaced exponents from lo to hi inclusive.
inline std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> out;
  if (steps <= 1) return {lo};
  for (int i = 0; i < steps; ++i) out.push_back(lo + (hi - lo) * i / (steps - 1));
  return out;
}

}  // namespace orbitlift

#endif  // ORBITLIFT_ANALYSIS_HPP
