#ifndef ORBITLIFT_MATCHING_HPP
#define ORBITLIFT_MATCHING_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "orbitlift/core.hpp"

namespace orbitlift {

/// Result of a square assignment problem: row i is matched to column perm[i].
struct Assignment {
  std::vector<std::size_t> perm;
  double cost = 0.0;
};

/// Minimum-cost assignment for a dense n×n cost matrix (row-major).
///
/// Shortest augmenting path Hungarian method with row/column potentials, O(n^3).
inline Assignment solve_assignment(const std::vector<double>& cost, std::size_t n) {
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based arrays; column 0 is a virtual source.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      std::size_t i0 = p[j0], j1 = 0;
      double delta = inf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Assignment out;
  out.perm.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j)
    if (p[j] != 0) out.perm[p[j] - 1] = j - 1;
  // Recompute the cost from the original matrix, in row order.
  for (std::size_t i = 0; i < n; ++i) out.cost += cost[i * n + out.perm[i]];
  return out;
}

/// Squared Euclidean distances between two point lists.
inline std::vector<double> squared_cost_matrix(const std::vector<CVec>& from, const std::vector<CVec>& to) {
  const std::size_t n = from.size();
  std::vector<double> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < from[i].size(); ++k) s += std::norm(from[i][k] - to[j][k]);
      c[i * n + j] = s;
    }
  return c;
}

/// Optimal matching of `from[i]` to `to[perm[i]]` under squared Euclidean cost.
inline Assignment match_points(const std::vector<CVec>& from, const std::vector<CVec>& to) {
  if (from.size() != to.size()) throw Error(ErrorCode::ShapeMismatch, "tuples of different size");
  if (from.empty()) return {};
  return solve_assignment(squared_cost_matrix(from, to), from.size());
}

/// Metric on unordered Q-tuples: min over permutations of (Σ |p_i - q_σ(i)|²)^{1/2}.
inline double tuple_distance(const AQPoint& a, const AQPoint& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "tuples of different dimension");
  return std::sqrt(std::max(0.0, match_points(a.points(), b.points()).cost));
}

/// Exhaustive minimum over all Q! permutations; used as a cross-check.
inline Assignment brute_force_assignment(const std::vector<double>& cost, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Assignment best;
  best.cost = std::numeric_limits<double>::infinity();
  do {
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += cost[i * n + perm[i]];
    if (c < best.cost) {
      best.cost = c;
      best.perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace orbitlift

#endif  // ORBITLIFT_MATCHING_HPP
