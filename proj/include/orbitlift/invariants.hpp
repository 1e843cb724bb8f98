#ifndef ORBITLIFT_INVARIANTS_HPP
#define ORBITLIFT_INVARIANTS_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "orbitlift/core.hpp"

namespace orbitlift {

/// σ-image of a point: one value per basic invariant, with its degree.
struct InvariantValue {
  CVec values;
  std::vector<int> degrees;
};

/// z^d by repeated multiplication.
inline cplx power_map(cplx z, int d) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < d; ++i) r *= z;
  return r;
}

/// (e_1, ..., e_Q) of the given points, from the coefficients of Π(X + p_i).
inline CVec elementary_symmetric(std::span<const cplx> points) {
  const std::size_t q = points.size();
  CVec c(q + 1, cplx{0.0, 0.0});
  c[0] = 1.0;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t k = i + 1; k >= 1; --k) c[k] += points[i] * c[k - 1];
  return CVec(c.begin() + 1, c.end());
}

/// Monic polynomial Π(X - λ_i) from e-values: coefficient of X^{Q-k} is (-1)^k e_k.
/// Returned highest degree first, leading 1 included.
inline CVec monic_from_elementary(std::span<const cplx> e) {
  CVec c(e.size() + 1);
  c[0] = 1.0;
  for (std::size_t k = 1; k <= e.size(); ++k) c[k] = (k % 2 == 0 ? 1.0 : -1.0) * e[k - 1];
  return c;
}

/// Inverse of monic_from_elementary.
inline CVec elementary_from_monic(std::span<const cplx> c) {
  CVec e(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) e[k - 1] = (k % 2 == 0 ? 1.0 : -1.0) * c[k] / c[0];
  return e;
}

/// Column multisets (sorted, with repetition) of size k from n columns, in
/// lexicographic order.
inline std::vector<std::vector<std::size_t>> column_multisets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k, 0);
  while (true) {
    out.push_back(cur);
    std::size_t pos = k;
    while (pos > 0 && cur[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    ++cur[pos - 1];
    for (std::size_t i = pos; i < k; ++i) cur[i] = cur[pos - 1];
  }
  return out;
}

/// Σ over pairwise distinct indices i_1..i_k of Π_m args[m][i_m].
///
/// Dynamic programme over subsets of arguments: each tuple entry is assigned to
/// at most one argument, which enforces distinctness. Cost O(Q·k·2^k).
inline cplx distinct_index_sum(const std::vector<std::span<const cplx>>& args) {
  const std::size_t k = args.size();
  const std::size_t q = args.empty() ? 0 : args.front().size();
  std::vector<cplx> dp(std::size_t{1} << k, cplx{0.0, 0.0});
  dp[0] = 1.0;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t mask = dp.size(); mask-- > 1;) {
      cplx add{0.0, 0.0};
      for (std::size_t m = 0; m < k; ++m)
        if (mask & (std::size_t{1} << m)) add += dp[mask ^ (std::size_t{1} << m)] * args[m][i];
      dp[mask] += add;
    }
  }
  return dp.back();
}

/// All polarizations σ_k(x^{c_1}, ..., x^{c_k}), 1 <= k <= Q, of the elementary
/// symmetric functions over the coordinate columns of the tuple.
///
/// Generators are ordered by (k, column multiset). Integer factors are kept:
/// σ_k(u, ..., u) = k! e_k(u).
inline InvariantValue polarized_invariants(const AQPoint& tuple) {
  const std::size_t q = tuple.size(), n = tuple.dim();
  std::vector<CVec> columns(n, CVec(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t c = 0; c < n; ++c) columns[c][i] = tuple[i][c];
  InvariantValue out;
  for (std::size_t k = 1; k <= q; ++k) {
    for (const auto& ms : column_multisets(n, k)) {
      std::vector<std::span<const cplx>> args;
      for (std::size_t c : ms) args.emplace_back(columns[c]);
      out.values.push_back(distinct_index_sum(args));
      out.degrees.push_back(static_cast<int>(k));
    }
  }
  return out;
}

using Matrix = std::vector<double>;  // row-major n×n

inline Matrix mat_mul(const Matrix& a, const Matrix& b, int n) {
  Matrix c(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

inline bool mat_close(const Matrix& a, const Matrix& b, double tol = 1e-9) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

/// Throws NotAGroup unless the matrices are n×n, contain the identity and are
/// closed under products.
inline void check_group(const FiniteMatrixGroup& g) {
  const auto nn = static_cast<std::size_t>(g.n * g.n);
  for (const auto& m : g.elements)
    if (m.size() != nn) throw Error(ErrorCode::NotAGroup, "element is not " + std::to_string(g.n) + "x" + std::to_string(g.n));
  Matrix id(nn, 0.0);
  for (int i = 0; i < g.n; ++i) id[i * g.n + i] = 1.0;
  auto contains = [&](const Matrix& m) {
    for (const auto& e : g.elements)
      if (mat_close(e, m)) return true;
    return false;
  };
  if (!contains(id)) throw Error(ErrorCode::NotAGroup, "identity missing");
  for (const auto& a : g.elements)
    for (const auto& b : g.elements)
      if (!contains(mat_mul(a, b, g.n))) throw Error(ErrorCode::NotAGroup, "not closed under products");
}

template <class Vec>
CVec mat_apply(const Matrix& m, const Vec& p, int n) {
  CVec out(static_cast<std::size_t>(n), cplx{0.0, 0.0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i * n + j] * p[j];
  return out;
}

/// Polarized invariants of the orbit tuple η(p) = (g p)_{g∈G}.
inline InvariantValue noether_invariants(const FiniteMatrixGroup& group, std::span<const cplx> p) {
  check_group(group);
  if (p.size() != static_cast<std::size_t>(group.n))
    throw Error(ErrorCode::ShapeMismatch, "point dimension does not match group");
  std::vector<CVec> orbit;
  for (const auto& g : group.elements) orbit.push_back(mat_apply(g, p, group.n));
  return polarized_invariants(AQPoint(std::move(orbit)));
}

/// σ-image for every supported representation.
///
/// Cyclic(d): x has one entry. Symmetric(Q): Q entries. QTuple(Q, n): Q·n
/// entries, point after point. FiniteMatrixGroup: n entries.
inline InvariantValue evaluate_sigma(const RepresentationSpec& spec, std::span<const cplx> x) {
  return std::visit(
      [&](const auto& k) -> InvariantValue {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Cyclic>) {
          if (x.size() != 1) throw Error(ErrorCode::ShapeMismatch, "cyclic point must be scalar");
          return {{power_map(x[0], k.d)}, spec.degrees()};
        } else if constexpr (std::is_same_v<K, Symmetric>) {
          if (x.size() != static_cast<std::size_t>(k.q))
            throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(k.q) + " points");
          return {elementary_symmetric(x), spec.degrees()};
        } else if constexpr (std::is_same_v<K, QTuple>) {
          if (x.size() != static_cast<std::size_t>(k.q * k.n))
            throw Error(ErrorCode::ShapeMismatch, "expected Q*n coordinates");
          std::vector<CVec> pts;
          for (int i = 0; i < k.q; ++i) pts.emplace_back(x.begin() + i * k.n, x.begin() + (i + 1) * k.n);
          return polarized_invariants(AQPoint(std::move(pts)));
        } else {
          return noether_invariants(k, x);
        }
      },
      spec.kind());
}

inline InvariantValue evaluate_sigma(const RepresentationSpec& spec, const AQPoint& tuple) {
  const auto* t = std::get_if<QTuple>(&spec.kind());
  if (!t || tuple.size() != static_cast<std::size_t>(t->q) || tuple.dim() != static_cast<std::size_t>(t->n)) {
    if (std::holds_alternative<Symmetric>(spec.kind()) && tuple.dim() == 1) {
      CVec z;
      for (const auto& p : tuple.points()) z.push_back(p[0]);
      return evaluate_sigma(spec, z);
    }
    throw Error(ErrorCode::ShapeMismatch, "tuple shape does not match " + spec.name());
  }
  return polarized_invariants(tuple);
}

/// Number of group elements available through `act` for the action of `spec`.
inline std::size_t group_order(const RepresentationSpec& spec) {
  return std::visit(
      [](const auto& k) -> std::size_t {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Cyclic>) return static_cast<std::size_t>(k.d);
        else if constexpr (std::is_same_v<K, FiniteMatrixGroup>) return k.elements.size();
        else {
          std::size_t f = 1;
          for (int i = 2; i <= k.q; ++i) f *= static_cast<std::size_t>(i);
          return f;
        }
      },
      spec.kind());
}

/// Permutation number `index` of {0..q-1} in lexicographic order.
inline std::vector<std::size_t> nth_permutation(std::size_t q, std::size_t index) {
  std::vector<std::size_t> pool(q), out;
  for (std::size_t i = 0; i < q; ++i) pool[i] = i;
  std::vector<std::size_t> fact(q + 1, 1);
  for (std::size_t i = 1; i <= q; ++i) fact[i] = fact[i - 1] * i;
  for (std::size_t i = q; i >= 1; --i) {
    std::size_t pos = index / fact[i - 1];
    index %= fact[i - 1];
    out.push_back(pool[pos]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return out;
}

/// Group element `element` applied to x (layout as in evaluate_sigma).
inline CVec act(const RepresentationSpec& spec, std::size_t element, std::span<const cplx> x) {
  return std::visit(
      [&](const auto& k) -> CVec {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Cyclic>) {
          double angle = 2.0 * std::numbers::pi * static_cast<double>(element) / k.d;
          return {x[0] * std::polar(1.0, angle)};
        } else if constexpr (std::is_same_v<K, FiniteMatrixGroup>) {
          return mat_apply(k.elements.at(element), x, k.n);
        } else {
          std::size_t block = 1;
          if constexpr (std::is_same_v<K, QTuple>) block = static_cast<std::size_t>(k.n);
          auto perm = nth_permutation(static_cast<std::size_t>(k.q), element);
          CVec out(x.size());
          for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t c = 0; c < block; ++c) out[i * block + c] = x[perm[i] * block + c];
          return out;
        }
      },
      spec.kind());
}

}  // namespace orbitlift

#endif  // ORBITLIFT_INVARIANTS_HPP
