#ifndef ORBITLIFT_LIFTING_HPP
#define ORBITLIFT_LIFTING_HPP

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitlift/core.hpp"
#include "orbitlift/invariants.hpp"
#include "orbitlift/matching.hpp"
#include "orbitlift/norms.hpp"
#include "orbitlift/polyroots.hpp"

namespace orbitlift {

struct LiftOptions {
  /// Bound on |σ(lift) - a| at every sample.
  double tol = 1e-8;
  /// Maximal bisection depth per input cell.
  int max_depth = 20;
  /// Below this modulus of g every d-th root is accepted.
  double zero_tol = 1e-12;
  /// Throw RefinementBudgetExhausted instead of returning a flagged partial lift.
  bool throw_on_budget = false;
};

/// Branch curves over a common grid. Branch b at node i is branches[b][i] ∈ C^n.
///
/// Concatenating the branches at a node gives the point of V in the layout
/// used by evaluate_sigma.
struct LiftedCurve {
  Grid grid;
  std::vector<std::vector<CVec>> branches;
  double residual = 0.0;
  int refinement_level = 0;
  /// Cells whose branch choice stayed ambiguous at the maximal depth.
  std::size_t ambiguous_cells = 0;
  std::string diagnostic;

  std::size_t size() const { return grid.size(); }
  std::size_t branch_count() const { return branches.size(); }
  std::size_t dim() const { return branches.front().front().size(); }
  bool complete() const { return ambiguous_cells == 0; }

  CVec point(std::size_t i) const {
    CVec out;
    for (const auto& b : branches) out.insert(out.end(), b[i].begin(), b[i].end());
    return out;
  }

  /// The lift as a single curve in V.
  SampledCurve as_curve() const {
    std::vector<CVec> v(size());
    for (std::size_t i = 0; i < size(); ++i) v[i] = point(i);
    return SampledCurve(grid, std::move(v));
  }
};

/// d-th root with argument in [0, 2π/d).
inline cplx principal_root(cplx g, int d) {
  if (g == cplx{0.0, 0.0}) return g;
  double arg = std::arg(g);
  if (arg < 0.0) arg += 2.0 * std::numbers::pi;
  return std::polar(std::pow(std::abs(g), 1.0 / d), arg / d);
}

namespace detail {

struct RadicalTracker {
  int d;
  const CurveOracle& oracle;
  const LiftOptions& opts;
  std::vector<double> t;
  std::vector<cplx> f;
  std::vector<cplx> g;
  int deepest = 0;
  std::size_t ambiguous = 0;
  double first_ambiguous_t = 0.0;

  cplx nearest_root(cplx gb, cplx prev) const {
    cplx base = principal_root(gb, d), best = base;
    double best_dist = std::abs(base - prev);
    for (int k = 1; k < d; ++k) {
      cplx r = base * std::polar(1.0, 2.0 * std::numbers::pi * k / d);
      double dist = std::abs(r - prev);
      if (dist < best_dist) {
        best = r;
        best_dist = dist;
      }
    }
    return best;
  }

  // Extends the lift from (ta, fa, ga) to tb; the end node is appended.
  void step(double ta, cplx fa, cplx ga, double tb, cplx gb, int depth) {
    cplx fb = nearest_root(gb, fa);
    bool near_zero = std::abs(ga) < opts.zero_tol || std::abs(gb) < opts.zero_tol;
    double margin = 0.5 * std::abs(fb) * std::sin(std::numbers::pi / d);
    if (d == 1 || near_zero || std::abs(fb - fa) <= margin) {
      t.push_back(tb);
      f.push_back(fb);
      g.push_back(gb);
      deepest = std::max(deepest, depth);
      return;
    }
    if (oracle && depth < opts.max_depth) {
      double tm = 0.5 * (ta + tb);
      cplx gm = oracle(tm).at(0);
      step(ta, fa, ga, tm, gm, depth + 1);
      step(tm, f.back(), gm, tb, gb, depth + 1);
      return;
    }
    if (ambiguous == 0) first_ambiguous_t = ta;
    ++ambiguous;
    t.push_back(tb);
    f.push_back(fb);
    g.push_back(gb);
    deepest = std::max(deepest, depth);
  }
};

inline void finish_budget(LiftedCurve& lift, std::size_t ambiguous, double where, const LiftOptions& opts) {
  lift.ambiguous_cells = ambiguous;
  if (ambiguous == 0) return;
  lift.diagnostic = std::to_string(ambiguous) + " cell(s) ambiguous at maximal depth, first near t = " +
                    std::to_string(where) + " (under-sampled near a zero?)";
  if (opts.throw_on_budget) throw Error(ErrorCode::RefinementBudgetExhausted, lift.diagnostic);
}

}  // namespace detail

/// Continuous solution f of f^d = g by nearest-root continuation.
///
/// At the first node the principal root is taken; afterwards the d-th root
/// nearest to the previous value. A step is ambiguous when its length exceeds
/// a quarter of the spacing between adjacent roots, |f| sin(π/d) / 2; such cells are
/// bisected through the oracle up to opts.max_depth.
inline LiftedCurve continuous_radical(const SampledCurve& g, int d, const CurveOracle& oracle = nullptr,
                                     const LiftOptions& opts = {}) {
  if (d < 1) throw Error(ErrorCode::ShapeMismatch, "radical order must be >= 1");
  if (g.components() != 1) throw Error(ErrorCode::ShapeMismatch, "radical input must be scalar");
  detail::RadicalTracker tr{d, oracle, opts, {}, {}, {}};
  tr.t.push_back(g.t(0));
  tr.f.push_back(principal_root(g[0][0], d));
  tr.g.push_back(g[0][0]);
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    tr.step(g.t(i), tr.f.back(), g[i][0], g.t(i + 1), g[i + 1][0], 0);

  LiftedCurve lift{Grid(tr.t), {std::vector<CVec>(tr.f.size())}};
  for (std::size_t i = 0; i < tr.f.size(); ++i) {
    lift.branches[0][i] = {tr.f[i]};
    lift.residual = std::max(lift.residual, std::abs(power_map(tr.f[i], d) - tr.g[i]));
  }
  lift.refinement_level = tr.deepest;
  detail::finish_budget(lift, tr.ambiguous, tr.first_ambiguous_t, opts);
  return lift;
}

/// Root multiset of the monic polynomial with elementary symmetric values `e`,
/// checked against opts.tol.
inline CVec roots_from_elementary(std::span<const cplx> e, std::span<const cplx> warm_start,
                                  const LiftOptions& opts, double t = 0.0) {
  auto coeffs = monic_from_elementary(e);
  // Coefficient residual, absolute and relative to the root scale s (e_k ~ s^k).
  double scale = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k)
    scale = std::max(scale, std::pow(std::abs(e[k]), 1.0 / static_cast<double>(k + 1)));
  auto residual = [&](const CVec& r) {
    auto back = elementary_symmetric(r);
    double worst = 0.0, sk = 1.0;
    for (std::size_t k = 0; k < back.size(); ++k) {
      sk *= scale;
      double err = std::abs(back[k] - e[k]);
      worst = std::max(worst, scale > 0.0 ? std::max(err, err / sk) : err);
    }
    return worst;
  };
  auto res = aberth_roots(coeffs, warm_start);
  if (residual(res.roots) <= opts.tol) return res.roots;
  auto cold = aberth_roots(coeffs);
  if (residual(cold.roots) <= opts.tol) return cold.roots;
  throw Error(ErrorCode::RootSolveFailure,
              "root solve at t = " + std::to_string(t) + " left residual " + std::to_string(residual(cold.roots)));
}

namespace detail {

struct RootTracker {
  std::size_t q;
  const CurveOracle& oracle;
  const LiftOptions& opts;
  std::vector<double> t;
  std::vector<CVec> lam;  // ordered branch values per node
  std::vector<CVec> a;
  int deepest = 0;
  std::size_t ambiguous = 0;
  double first_ambiguous_t = 0.0;

  static std::vector<CVec> as_points(const CVec& z) {
    std::vector<CVec> p;
    for (auto v : z) p.push_back({v});
    return p;
  }

  void step(double ta, const CVec& la, double tb, const CVec& ab, int depth) {
    CVec roots = roots_from_elementary(ab, la, opts, tb);
    auto m = match_points(as_points(la), as_points(roots));
    CVec lb(q);
    for (std::size_t i = 0; i < q; ++i) lb[i] = roots[m.perm[i]];
    double budget = std::pow(10.0 * (tb - ta), 2.0 / static_cast<double>(q));
    if (q == 1 || m.cost <= budget) {
      push(tb, std::move(lb), ab, depth);
      return;
    }
    if (oracle && depth < opts.max_depth) {
      double tm = 0.5 * (ta + tb);
      CVec am = oracle(tm);
      step(ta, la, tm, am, depth + 1);
      CVec lm = lam.back();
      step(tm, lm, tb, ab, depth + 1);
      return;
    }
    if (ambiguous == 0) first_ambiguous_t = ta;
    ++ambiguous;
    push(tb, std::move(lb), ab, depth);
  }

  void push(double tb, CVec lb, const CVec& ab, int depth) {
    t.push_back(tb);
    lam.push_back(std::move(lb));
    a.push_back(ab);
    deepest = std::max(deepest, depth);
  }
};

}  // namespace detail

/// Continuous root curves λ_1..λ_Q with elementary_symmetric(λ(t)) = a(t).
///
/// Roots are solved per sample by Aberth–Ehrlich iteration seeded with the
/// previous sample's roots; consecutive root multisets are matched by
/// minimum-cost assignment under squared Euclidean cost. Cells whose matched
/// cost exceeds (10 h)^{2/Q} are bisected through the oracle.
inline LiftedCurve continuous_roots(const SampledCurve& a, const CurveOracle& oracle = nullptr,
                                   const LiftOptions& opts = {}) {
  const std::size_t q = a.components();
  detail::RootTracker tr{q, oracle, opts, {}, {}, {}};
  CVec first = roots_from_elementary(a[0], {}, opts, a.t(0));
  std::sort(first.begin(), first.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  tr.push(a.t(0), first, a[0], 0);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    CVec prev = tr.lam.back();
    tr.step(a.t(i), prev, a.t(i + 1), a[i + 1], 0);
  }

  LiftedCurve lift{Grid(tr.t), std::vector<std::vector<CVec>>(q, std::vector<CVec>(tr.t.size()))};
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    for (std::size_t b = 0; b < q; ++b) lift.branches[b][i] = {tr.lam[i][b]};
    auto back = elementary_symmetric(tr.lam[i]);
    for (std::size_t k = 0; k < q; ++k) lift.residual = std::max(lift.residual, std::abs(back[k] - tr.a[i][k]));
  }
  lift.refinement_level = tr.deepest;
  detail::finish_budget(lift, tr.ambiguous, tr.first_ambiguous_t, opts);
  return lift;
}

/// Branches through a sequence of unordered tuples, chaining optimal matchings
/// between consecutive samples (greedy per step).
inline LiftedCurve lift_tuple_curve(const Grid& grid, const std::vector<AQPoint>& samples) {
  if (samples.size() != grid.size()) throw Error(ErrorCode::LengthMismatch, "one tuple per node required");
  const std::size_t q = samples.front().size(), n = samples.front().dim();
  for (const auto& s : samples)
    if (s.size() != q || s.dim() != n) throw Error(ErrorCode::ShapeMismatch, "tuples of different shape");
  LiftedCurve lift{grid, std::vector<std::vector<CVec>>(q, std::vector<CVec>(grid.size()))};
  std::vector<CVec> cur = samples.front().points();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) {
      auto m = match_points(cur, samples[i].points());
      for (std::size_t b = 0; b < q; ++b) cur[b] = samples[i][m.perm[b]];
    }
    for (std::size_t b = 0; b < q; ++b) lift.branches[b][i] = cur[b];
  }
  return lift;
}

inline LiftedCurve lift_tuple_curve(const std::vector<AQPoint>& samples) {
  std::vector<double> t(samples.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<double>(i);
  return lift_tuple_curve(Grid(std::move(t)), samples);
}

/// Nodes at which the lift is nonzero.
inline std::vector<bool> nonzero_nodes(const LiftedCurve& lift) {
  std::vector<bool> out(lift.size());
  for (std::size_t i = 0; i < lift.size(); ++i) out[i] = norm2(lift.point(i)) != 0.0;
  return out;
}

struct ZeroExtension {
  LiftedCurve lift;
  /// L^p norm of the derivative over the whole grid.
  double norm = 0.0;
  /// L^p norm of the derivative over the cells touching Ω₀.
  double norm_on_omega0 = 0.0;
};

/// Extends a lift known on the nodes `in_omega0` by zero to the whole grid.
///
/// Values at nodes outside Ω₀ are ignored and replaced by 0. Every node of Ω₀
/// next to the zero set must carry a value of modulus <= tol. The derivative
/// vanishes on cells with both endpoints in the zero set, so the norm over the
/// whole grid equals the norm over the cells touching Ω₀.
inline ZeroExtension extend_through_zeros(const LiftedCurve& lift, const std::vector<bool>& in_omega0, double p,
                                          double tol = 0.1) {
  if (in_omega0.size() != lift.size()) throw Error(ErrorCode::LengthMismatch, "mask does not match grid");
  ZeroExtension out{lift};
  const std::size_t n = lift.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (in_omega0[i]) {
      bool boundary = (i > 0 && !in_omega0[i - 1]) || (i + 1 < n && !in_omega0[i + 1]);
      if (boundary && norm2(lift.point(i)) > tol)
        throw Error(ErrorCode::DiscontinuousAtZeroSet,
                    "value of modulus " + std::to_string(norm2(lift.point(i))) + " next to the zero set at t = " +
                        std::to_string(lift.grid[i]));
      continue;
    }
    for (auto& b : out.lift.branches) std::fill(b[i].begin(), b[i].end(), cplx{0.0, 0.0});
  }
  auto curve = out.lift.as_curve();
  auto slopes = cell_slopes(curve);
  auto widths = cell_widths(curve.grid());
  std::vector<bool> touching(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) touching[i] = in_omega0[i] || in_omega0[i + 1];
  out.norm = lp_of_cells(slopes, widths, p);
  out.norm_on_omega0 = lp_of_cells(slopes, widths, p, touching);
  return out;
}

/// Overload for a lift sampled on a subsequence of `full_grid` (the Ω₀ nodes).
inline ZeroExtension extend_through_zeros(const LiftedCurve& lift, const Grid& full_grid, double p,
                                          double tol = 0.1) {
  std::vector<bool> mask(full_grid.size(), false);
  LiftedCurve full{full_grid,
                   std::vector<std::vector<CVec>>(lift.branch_count(),
                                                  std::vector<CVec>(full_grid.size(), CVec(lift.dim())))};
  std::size_t j = 0;
  for (std::size_t i = 0; i < full_grid.size() && j < lift.size(); ++i) {
    if (full_grid[i] != lift.grid[j]) continue;
    mask[i] = true;
    for (std::size_t b = 0; b < lift.branch_count(); ++b) full.branches[b][i] = lift.branches[b][j];
    ++j;
  }
  if (j != lift.size()) throw Error(ErrorCode::ShapeMismatch, "lift grid is not a subsequence of the full grid");
  return extend_through_zeros(full, mask, p, tol);
}

/// Group element of `spec` applied to a whole lift.
inline LiftedCurve apply_group_element(const RepresentationSpec& spec, std::size_t element, const LiftedCurve& lift) {
  LiftedCurve out = lift;
  for (std::size_t i = 0; i < lift.size(); ++i) {
    CVec moved = act(spec, element, lift.point(i));
    std::size_t pos = 0;
    for (auto& b : out.branches)
      for (auto& z : b[i]) z = moved[pos++];
  }
  return out;
}

struct GlueResult {
  LiftedCurve lift;
  /// Junction mismatch after the reconciling element was applied.
  double mismatch = 0.0;
  /// Permutation applied to the right branches (Symmetric / QTuple) or group element index.
  std::vector<std::size_t> permutation;
  std::size_t element = 0;
};

/// Concatenates two lifts that meet at one junction node, moving the right one
/// by the group element that matches it to the left one there.
inline GlueResult glue_lifts(const LiftedCurve& left, const LiftedCurve& right, const RepresentationSpec& spec,
                             double tol = 1e-8) {
  if (left.grid.back() != right.grid.front())
    throw Error(ErrorCode::ShapeMismatch, "lifts do not share a junction node");
  if (left.branch_count() != right.branch_count() || left.dim() != right.dim())
    throw Error(ErrorCode::ShapeMismatch, "lifts of different shape");
  const std::size_t jl = left.size() - 1;
  CVec lp = left.point(jl), rp = right.point(0);
  auto sl = evaluate_sigma(spec, lp).values, sr = evaluate_sigma(spec, rp).values;
  double sigma_gap = distance2(sl, sr);
  if (sigma_gap > tol)
    throw Error(ErrorCode::NoReconcilingElement,
                "σ-values differ by " + std::to_string(sigma_gap) + " at the junction");

  GlueResult out{left};
  LiftedCurve moved = right;
  if (std::holds_alternative<Symmetric>(spec.kind()) || std::holds_alternative<QTuple>(spec.kind())) {
    std::vector<CVec> from, to;
    for (const auto& b : left.branches) from.push_back(b[jl]);
    for (const auto& b : right.branches) to.push_back(b[0]);
    auto m = match_points(from, to);
    for (std::size_t b = 0; b < left.branch_count(); ++b) moved.branches[b] = right.branches[m.perm[b]];
    out.permutation = m.perm;
  } else {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t g = 0; g < group_order(spec); ++g) {
      double gap = distance2(lp, act(spec, g, rp));
      if (gap < best) {
        best = gap;
        out.element = g;
      }
    }
    moved = apply_group_element(spec, out.element, right);
  }
  out.mismatch = distance2(lp, moved.point(0));
  if (out.mismatch > tol)
    throw Error(ErrorCode::NoReconcilingElement,
                "best group element leaves junction mismatch " + std::to_string(out.mismatch));

  std::vector<double> t = left.grid.nodes();
  t.insert(t.end(), right.grid.nodes().begin() + 1, right.grid.nodes().end());
  out.lift.grid = Grid(std::move(t));
  for (std::size_t b = 0; b < left.branch_count(); ++b)
    out.lift.branches[b].insert(out.lift.branches[b].end(), moved.branches[b].begin() + 1, moved.branches[b].end());
  out.lift.residual = std::max(left.residual, right.residual);
  out.lift.refinement_level = std::max(left.refinement_level, right.refinement_level);
  out.lift.ambiguous_cells = left.ambiguous_cells + right.ambiguous_cells;
  return out;
}

// ---------------------------------------------------------------------------
// Two-dimensional lifting
// ---------------------------------------------------------------------------

struct GridNode {
  std::size_t ix = 0;
  std::size_t iy = 0;
  friend bool operator==(const GridNode&, const GridNode&) = default;
};

struct MonodromyReport {
  enum class Status { consistent, obstructed };
  Status status = Status::consistent;
  /// Closed loop of grid nodes (first node not repeated) along which
  /// continuation returns a different sheet. Empty when consistent.
  std::vector<GridNode> witness;
};

struct Grid2DLift {
  MonodromyReport report;
  /// Flat lift value per grid node (row-major in x); empty outside the mask.
  std::vector<CVec> values;
  std::size_t nx = 0;
  std::size_t ny = 0;
  const CVec& at(std::size_t ix, std::size_t iy) const { return values[iy * nx + ix]; }
};

namespace detail {

/// Fibre over a node and continuation into it for the 2-D lifter.
struct Fibre2D {
  const RepresentationSpec& spec;
  const LiftOptions& opts;

  CVec initial(const CVec& f) const {
    if (const auto* c = std::get_if<Cyclic>(&spec.kind())) return {principal_root(f.at(0), c->d)};
    CVec r = roots_from_elementary(f, {}, opts);
    std::sort(r.begin(), r.end(), [](cplx x, cplx y) {
      return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return r;
  }

  /// Point over `f` nearest to `from` (branch by branch for root tuples).
  CVec transport(const CVec& from, const CVec& f) const {
    if (const auto* c = std::get_if<Cyclic>(&spec.kind())) {
      cplx base = principal_root(f.at(0), c->d), best = base;
      for (int k = 1; k < c->d; ++k) {
        cplx r = base * std::polar(1.0, 2.0 * std::numbers::pi * k / c->d);
        if (std::abs(r - from[0]) < std::abs(best - from[0])) best = r;
      }
      return {best};
    }
    CVec r = roots_from_elementary(f, from, opts);
    std::vector<CVec> a, b;
    for (auto z : from) a.push_back({z});
    for (auto z : r) b.push_back({z});
    auto m = match_points(a, b);
    CVec out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[m.perm[i]];
    return out;
  }
};

}  // namespace detail

/// Lifts a field of invariant values on a (masked) 2-D grid.
///
/// Values are continued along a breadth-first spanning tree of the domain,
/// horizontal neighbours first so that rows are lifted before columns. Every
/// grid edge of the domain is then checked: continuing across it must land on
/// the stored value. A failing edge closes a loop in the tree along which the
/// lift comes back on another sheet; that loop is the monodromy witness.
/// Supported for Cyclic and Symmetric specs.
inline Grid2DLift lift_grid_2d(const SampledGrid2D& f, const RepresentationSpec& spec, const LiftOptions& opts = {}) {
  if (!std::holds_alternative<Cyclic>(spec.kind()) && !std::holds_alternative<Symmetric>(spec.kind()))
    throw Error(ErrorCode::ShapeMismatch, "2-D lifting supports cyclic and symmetric specs");
  const std::size_t nx = f.nx(), ny = f.ny(), total = nx * ny;
  detail::Fibre2D fibre{spec, opts};
  Grid2DLift out;
  out.nx = nx;
  out.ny = ny;
  out.values.assign(total, {});
  std::vector<std::size_t> parent(total, total), depth(total, 0);
  std::vector<bool> seen(total, false);

  auto neighbours = [&](std::size_t idx) {
    std::vector<std::size_t> nb;
    std::size_t ix = idx % nx, iy = idx / nx;
    if (ix > 0) nb.push_back(idx - 1);
    if (ix + 1 < nx) nb.push_back(idx + 1);
    if (iy > 0) nb.push_back(idx - nx);
    if (iy + 1 < ny) nb.push_back(idx + nx);
    return nb;
  };

  for (std::size_t seed = 0; seed < total; ++seed) {
    if (seen[seed] || !f.mask()[seed]) continue;
    seen[seed] = true;
    out.values[seed] = fibre.initial(f.at(seed % nx, seed / nx));
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : neighbours(u)) {
        if (seen[v] || !f.mask()[v]) continue;
        seen[v] = true;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        out.values[v] = fibre.transport(out.values[u], f.at(v % nx, v / nx));
        queue.push_back(v);
      }
    }
  }

  for (std::size_t u = 0; u < total; ++u) {
    if (!f.mask()[u]) continue;
    for (std::size_t v : neighbours(u)) {
      if (v < u || !f.mask()[v]) continue;
      if (parent[v] == u || parent[u] == v) continue;
      CVec moved = fibre.transport(out.values[u], f.at(v % nx, v / nx));
      double scale = std::max(1.0, norm2(out.values[v]));
      if (distance2(moved, out.values[v]) <= 1e3 * opts.tol * scale) continue;
      // Fundamental cycle of edge (u, v) in the spanning tree.
      std::vector<std::size_t> up{u}, vp{v};
      std::size_t a = u, b = v;
      while (depth[a] > depth[b]) up.push_back(a = parent[a]);
      while (depth[b] > depth[a]) vp.push_back(b = parent[b]);
      while (a != b) {
        up.push_back(a = parent[a]);
        vp.push_back(b = parent[b]);
      }
      vp.pop_back();  // common ancestor already in `up`
      std::vector<std::size_t> loop(up.begin(), up.end());
      loop.insert(loop.end(), vp.rbegin(), vp.rend());
      out.report.status = MonodromyReport::Status::obstructed;
      for (std::size_t idx : loop) out.report.witness.push_back({idx % nx, idx / nx});
      return out;
    }
  }
  return out;
}

}  // namespace orbitlift

#endif  // ORBITLIFT_LIFTING_HPP
