#ifndef ORBITLIFT_CORE_HPP
#define ORBITLIFT_CORE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace orbitlift {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Error categories raised by the library. The CLI maps these onto exit codes.
enum class ErrorCode {
  NonMonotoneGrid,
  LengthMismatch,
  RaggedComponents,
  OrderTooHigh,
  ShapeMismatch,
  NotAGroup,
  RefinementBudgetExhausted,
  RootSolveFailure,
  DiscontinuousAtZeroSet,
  NoReconcilingElement,
  ExponentOutOfRange,
  AllZeroAtPoint,
  VanishingDominant,
  ClustersNotSeparated,
  OutOfRange,
  DominantVanishes,
  CoverPropertyViolation,
  InputError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonMonotoneGrid: return "NonMonotoneGrid";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::RaggedComponents: return "RaggedComponents";
    case ErrorCode::OrderTooHigh: return "OrderTooHigh";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::RefinementBudgetExhausted: return "RefinementBudgetExhausted";
    case ErrorCode::RootSolveFailure: return "RootSolveFailure";
    case ErrorCode::DiscontinuousAtZeroSet: return "DiscontinuousAtZeroSet";
    case ErrorCode::NoReconcilingElement: return "NoReconcilingElement";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::AllZeroAtPoint: return "AllZeroAtPoint";
    case ErrorCode::VanishingDominant: return "VanishingDominant";
    case ErrorCode::ClustersNotSeparated: return "ClustersNotSeparated";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DominantVanishes: return "DominantVanishes";
    case ErrorCode::CoverPropertyViolation: return "CoverPropertyViolation";
    case ErrorCode::InputError: return "InputError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Euclidean norm of a complex vector.
inline double norm2(std::span<const cplx> v) {
  double scale = 0.0;
  for (const auto& z : v) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& z : v) {
    double q = std::abs(z) / scale;
    sum += q * q;
  }
  return scale * std::sqrt(sum);
}

inline double distance2(std::span<const cplx> a, std::span<const cplx> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]);
  return std::sqrt(sum);
}

// ---------------------------------------------------------------------------
// Grid
// ---------------------------------------------------------------------------

/// Strictly increasing parameter nodes, at least two of them.
class Grid {
 public:
  explicit Grid(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2)
      throw Error(ErrorCode::NonMonotoneGrid, "grid needs at least 2 nodes");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
      if (!(nodes_[i] < nodes_[i + 1]))
        throw Error(ErrorCode::NonMonotoneGrid,
                    "nodes not strictly increasing at index " + std::to_string(i + 1));
    }
  }

  static Grid uniform(double lo, double hi, std::size_t count) {
    std::vector<double> t(count);
    for (std::size_t i = 0; i < count; ++i)
      t[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    t.back() = hi;
    return Grid(std::move(t));
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  double front() const { return nodes_.front(); }
  double back() const { return nodes_.back(); }
  double length() const { return nodes_.back() - nodes_.front(); }
  double cell_width(std::size_t i) const { return nodes_[i + 1] - nodes_[i]; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::vector<double> nodes_;
};

/// Nodes graded geometrically towards each of `singular_points` inside [lo, hi].
///
/// Around every singular point s the nodes are s ± h_min·ratio^j until the next
/// singular point (or the interval end) is reached; s itself is a node. Regions
/// far from singular points are filled with steps no larger than `max_step`.
inline Grid geometric_grid(double lo, double hi, std::vector<double> singular_points,
                           double h_min, double ratio, double max_step) {
  std::sort(singular_points.begin(), singular_points.end());
  std::vector<double> t{lo, hi};
  for (std::size_t i = 0; i < singular_points.size(); ++i) {
    double s = singular_points[i];
    if (s < lo || s > hi) continue;
    t.push_back(s);
    // Grade towards the interval ends, or halfway to a neighbouring singular point.
    double left = i == 0 ? lo : 0.5 * (singular_points[i - 1] + s);
    double right = i + 1 == singular_points.size() ? hi : 0.5 * (s + singular_points[i + 1]);
    for (double off = h_min; s - off > left; off += std::min(off * (ratio - 1.0), max_step))
      t.push_back(s - off);
    for (double off = h_min; s + off < right; off += std::min(off * (ratio - 1.0), max_step))
      t.push_back(s + off);
  }
  std::sort(t.begin(), t.end());
  std::vector<double> kept;
  for (double v : t) {
    if (v < lo || v > hi) continue;
    if (!kept.empty() && v <= kept.back()) continue;
    kept.push_back(v);
  }
  // Fill coarse gaps (far from every singular point).
  std::vector<double> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i > 0) {
      double gap = kept[i] - kept[i - 1];
      if (gap > max_step) {
        auto pieces = static_cast<std::size_t>(std::ceil(gap / max_step));
        for (std::size_t k = 1; k < pieces; ++k)
          out.push_back(kept[i - 1] + gap * static_cast<double>(k) / static_cast<double>(pieces));
      }
    }
    out.push_back(kept[i]);
  }
  return Grid(std::move(out));
}

// ---------------------------------------------------------------------------
// Sampled curves
// ---------------------------------------------------------------------------

/// Callable value oracle t -> C^n.
using CurveOracle = std::function<CVec(double)>;

/// Samples of a curve I -> C^n on a grid.
///
/// `synthetic[i]` marks values produced by interpolation instead of the oracle.
class SampledCurve {
 public:
  SampledCurve(Grid grid, std::vector<CVec> values, std::vector<bool> synthetic = {})
      : grid_(std::move(grid)), values_(std::move(values)), synthetic_(std::move(synthetic)) {
    if (values_.size() != grid_.size())
      throw Error(ErrorCode::LengthMismatch, std::to_string(grid_.size()) + " nodes but " +
                                                 std::to_string(values_.size()) + " values");
    components_ = values_.front().size();
    if (components_ == 0) throw Error(ErrorCode::RaggedComponents, "zero components");
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i].size() != components_)
        throw Error(ErrorCode::RaggedComponents,
                    "sample " + std::to_string(i) + " has " + std::to_string(values_[i].size()) +
                        " components, expected " + std::to_string(components_));
    if (synthetic_.empty()) synthetic_.assign(values_.size(), false);
    if (synthetic_.size() != values_.size())
      throw Error(ErrorCode::LengthMismatch, "synthetic flags do not match sample count");
  }

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t components() const noexcept { return components_; }
  const CVec& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<CVec>& values() const noexcept { return values_; }
  const std::vector<bool>& synthetic() const noexcept { return synthetic_; }
  double t(std::size_t i) const { return grid_[i]; }

  /// Scalar curve of component j.
  SampledCurve component(std::size_t j) const {
    std::vector<CVec> v(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) v[i] = {values_[i].at(j)};
    return SampledCurve(grid_, std::move(v), synthetic_);
  }

  /// Restriction to nodes [lo, hi] (inclusive).
  SampledCurve slice(std::size_t lo, std::size_t hi) const {
    std::vector<double> t(grid_.nodes().begin() + lo, grid_.nodes().begin() + hi + 1);
    std::vector<CVec> v(values_.begin() + lo, values_.begin() + hi + 1);
    std::vector<bool> s(synthetic_.begin() + lo, synthetic_.begin() + hi + 1);
    return SampledCurve(Grid(std::move(t)), std::move(v), std::move(s));
  }

 private:
  Grid grid_;
  std::vector<CVec> values_;
  std::vector<bool> synthetic_;
  std::size_t components_ = 0;
};

inline SampledCurve make_sampled_curve(std::vector<double> nodes, std::vector<CVec> values) {
  if (nodes.size() != values.size() && nodes.size() >= 2) {
    Grid g(std::move(nodes));  // monotonicity is reported first
    throw Error(ErrorCode::LengthMismatch, std::to_string(g.size()) + " nodes but " +
                                               std::to_string(values.size()) + " values");
  }
  return SampledCurve(Grid(std::move(nodes)), std::move(values));
}

inline SampledCurve sample(const Grid& grid, const CurveOracle& oracle) {
  std::vector<CVec> v;
  v.reserve(grid.size());
  for (double t : grid.nodes()) v.push_back(oracle(t));
  return SampledCurve(grid, std::move(v));
}

/// Two-dimensional samples on x_grid × y_grid, stored row-major in x.
///
/// `mask` selects the nodes that belong to the domain; empty means all.
class SampledGrid2D {
 public:
  SampledGrid2D(Grid x, Grid y, std::vector<CVec> values, std::vector<bool> mask = {})
      : x_(std::move(x)), y_(std::move(y)), values_(std::move(values)), mask_(std::move(mask)) {
    if (values_.size() != x_.size() * y_.size())
      throw Error(ErrorCode::ShapeMismatch, "value array does not match grid shape");
    if (mask_.empty()) mask_.assign(values_.size(), true);
    if (mask_.size() != values_.size())
      throw Error(ErrorCode::ShapeMismatch, "mask does not match grid shape");
  }

  const Grid& x_grid() const noexcept { return x_; }
  const Grid& y_grid() const noexcept { return y_; }
  std::size_t nx() const noexcept { return x_.size(); }
  std::size_t ny() const noexcept { return y_.size(); }
  std::size_t index(std::size_t ix, std::size_t iy) const { return iy * x_.size() + ix; }
  const CVec& at(std::size_t ix, std::size_t iy) const { return values_[index(ix, iy)]; }
  bool in_domain(std::size_t ix, std::size_t iy) const { return mask_[index(ix, iy)]; }
  const std::vector<bool>& mask() const noexcept { return mask_; }

 private:
  Grid x_;
  Grid y_;
  std::vector<CVec> values_;
  std::vector<bool> mask_;
};

// ---------------------------------------------------------------------------
// Unordered tuples
// ---------------------------------------------------------------------------

inline bool lex_less(const CVec& a, const CVec& b) {
  for (std::size_t c = 0; c < std::min(a.size(), b.size()); ++c) {
    if (a[c].real() != b[c].real()) return a[c].real() < b[c].real();
    if (a[c].imag() != b[c].imag()) return a[c].imag() < b[c].imag();
  }
  return a.size() < b.size();
}

/// Unordered Q-tuple of points of C^n, kept in canonical (lexicographic) order.
class AQPoint {
 public:
  AQPoint() = default;
  explicit AQPoint(std::vector<CVec> points) : points_(std::move(points)) {
    if (points_.empty()) throw Error(ErrorCode::ShapeMismatch, "empty tuple");
    std::size_t n = points_.front().size();
    if (n == 0) throw Error(ErrorCode::ShapeMismatch, "points of dimension 0");
    for (const auto& p : points_)
      if (p.size() != n) throw Error(ErrorCode::RaggedComponents, "points of mixed dimension");
    std::sort(points_.begin(), points_.end(), lex_less);
  }

  /// Scalar points (n = 1).
  static AQPoint scalars(std::span<const cplx> z) {
    std::vector<CVec> pts;
    for (auto v : z) pts.push_back({v});
    return AQPoint(std::move(pts));
  }

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return points_.empty() ? 0 : points_.front().size(); }
  const CVec& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<CVec>& points() const noexcept { return points_; }

  friend bool operator==(const AQPoint&, const AQPoint&) = default;

 private:
  std::vector<CVec> points_;
};

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

struct Cyclic {
  int d = 1;
};
struct Symmetric {
  int q = 1;
};
struct QTuple {
  int q = 1;
  int n = 1;
};
/// Real orthogonal n×n matrices, row-major.
struct FiniteMatrixGroup {
  int n = 1;
  std::vector<std::vector<double>> elements;
};

using RepresentationKind = std::variant<Cyclic, Symmetric, QTuple, FiniteMatrixGroup>;

/// Number of multisets of size k drawn from n columns.
inline std::size_t multiset_count(std::size_t n, std::size_t k) {
  // C(n + k - 1, k)
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * static_cast<double>(n + i - 1) / static_cast<double>(i);
  return static_cast<std::size_t>(std::llround(r));
}

/// Representation descriptor with the degrees of its basic invariants.
class RepresentationSpec {
 public:
  explicit RepresentationSpec(RepresentationKind kind) : kind_(std::move(kind)) {
    std::visit([this](const auto& k) { init(k); }, kind_);
    if (degrees_.empty()) throw Error(ErrorCode::ShapeMismatch, "no invariants");
    for (int dj : degrees_)
      if (dj < 1) throw Error(ErrorCode::ShapeMismatch, "degree < 1");
    max_degree_ = *std::max_element(degrees_.begin(), degrees_.end());
  }

  static RepresentationSpec cyclic(int d) { return RepresentationSpec(Cyclic{d}); }
  static RepresentationSpec symmetric(int q) { return RepresentationSpec(Symmetric{q}); }
  static RepresentationSpec qtuple(int q, int n) { return RepresentationSpec(QTuple{q, n}); }

  const RepresentationKind& kind() const noexcept { return kind_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int max_degree() const noexcept { return max_degree_; }

  /// d' = d/(d-1); infinite for d = 1.
  double critical_exponent() const {
    return max_degree_ == 1 ? std::numeric_limits<double>::infinity()
                            : static_cast<double>(max_degree_) / (max_degree_ - 1);
  }

  std::string name() const {
    return std::visit(
        [](const auto& k) -> std::string {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, Cyclic>) return "cyclic:" + std::to_string(k.d);
          else if constexpr (std::is_same_v<K, Symmetric>) return "symmetric:" + std::to_string(k.q);
          else if constexpr (std::is_same_v<K, QTuple>)
            return "qtuple:" + std::to_string(k.q) + "," + std::to_string(k.n);
          else return "matrixgroup:" + std::to_string(k.elements.size()) + "x" + std::to_string(k.n);
        },
        kind_);
  }

 private:
  void init(const Cyclic& c) {
    if (c.d < 1) throw Error(ErrorCode::ShapeMismatch, "cyclic order < 1");
    degrees_ = {c.d};
  }
  void init(const Symmetric& s) {
    if (s.q < 1) throw Error(ErrorCode::ShapeMismatch, "Q < 1");
    for (int k = 1; k <= s.q; ++k) degrees_.push_back(k);
  }
  void polarized_degrees(int q, int n) {
    for (int k = 1; k <= q; ++k)
      degrees_.insert(degrees_.end(), multiset_count(static_cast<std::size_t>(n),
                                                     static_cast<std::size_t>(k)),
                      k);
  }
  void init(const QTuple& t) {
    if (t.q < 1 || t.n < 1) throw Error(ErrorCode::ShapeMismatch, "QTuple needs Q, n >= 1");
    polarized_degrees(t.q, t.n);
  }
  void init(const FiniteMatrixGroup& g) {
    if (g.elements.empty() || g.n < 1) throw Error(ErrorCode::ShapeMismatch, "empty group");
    polarized_degrees(static_cast<int>(g.elements.size()), g.n);
  }

  RepresentationKind kind_;
  std::vector<int> degrees_;
  int max_degree_ = 1;
};

// ---------------------------------------------------------------------------
// Divided differences and refinement
// ---------------------------------------------------------------------------

/// s-th derivative estimate at every node from s+1 consecutive nodes.
///
/// The stencil is centred where possible and shifted one-sidedly near the ends,
/// so the output grid equals the input grid. The Newton divided difference is
/// scaled by s!, which reproduces the exact derivative of degree-s polynomials.
inline SampledCurve finite_difference(const SampledCurve& curve, int order) {
  const std::size_t n = curve.size();
  if (order < 1 || static_cast<std::size_t>(order) >= n)
    throw Error(ErrorCode::OrderTooHigh,
                "order " + std::to_string(order) + " needs more than " + std::to_string(n) + " nodes");
  const auto s = static_cast<std::size_t>(order);
  double factorial = 1.0;
  for (std::size_t i = 2; i <= s; ++i) factorial *= static_cast<double>(i);

  const std::size_t comps = curve.components();
  std::vector<CVec> out(n, CVec(comps));
  std::vector<cplx> table(s + 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t start = i >= s / 2 ? i - s / 2 : 0;
    start = std::min(start, n - 1 - s);
    for (std::size_t c = 0; c < comps; ++c) {
      for (std::size_t m = 0; m <= s; ++m) table[m] = curve[start + m][c];
      for (std::size_t level = 1; level <= s; ++level)
        for (std::size_t m = 0; m + level <= s; ++m)
          table[m] = (table[m + 1] - table[m]) / (curve.t(start + m + level) - curve.t(start + m));
      out[i][c] = table[0] * factorial;
    }
  }
  return SampledCurve(curve.grid(), std::move(out));
}

/// Bisect the cells listed in `cells` (cell i spans nodes i, i+1).
///
/// New midpoint values come from `oracle` when given, otherwise from linear
/// interpolation, in which case they are flagged synthetic.
inline SampledCurve refine(const SampledCurve& curve, const std::vector<std::size_t>& cells,
                           const CurveOracle& oracle = nullptr) {
  std::vector<bool> marked(curve.size() - 1, false);
  for (std::size_t c : cells)
    if (c + 1 < curve.size()) marked[c] = true;
  std::vector<double> t;
  std::vector<CVec> v;
  std::vector<bool> syn;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    t.push_back(curve.t(i));
    v.push_back(curve[i]);
    syn.push_back(curve.synthetic()[i]);
    if (i + 1 < curve.size() && marked[i]) {
      double mid = 0.5 * (curve.t(i) + curve.t(i + 1));
      if (oracle) {
        v.push_back(oracle(mid));
        syn.push_back(false);
      } else {
        CVec m(curve.components());
        for (std::size_t c = 0; c < m.size(); ++c) m[c] = 0.5 * (curve[i][c] + curve[i + 1][c]);
        v.push_back(std::move(m));
        syn.push_back(true);
      }
      t.push_back(mid);
    }
  }
  return SampledCurve(Grid(std::move(t)), std::move(v), std::move(syn));
}

}  // namespace orbitlift

#endif  // ORBITLIFT_CORE_HPP
