#ifndef ORBITLIFT_POLYROOTS_HPP
#define ORBITLIFT_POLYROOTS_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "orbitlift/core.hpp"

namespace orbitlift {

struct RootSolveResult {
  CVec roots;
  int iterations = 0;
  bool converged = false;
};

/// Roots of the monic polynomial with coefficients `c` (highest degree first,
/// c[0] = 1) by Aberth–Ehrlich simultaneous iteration.
///
/// The polynomial is rescaled so its roots have modulus O(1). `warm_start`
/// seeds the iteration, which is how root curves are continued between samples.
inline RootSolveResult aberth_roots(std::span<const cplx> c, std::span<const cplx> warm_start = {},
                                    int max_iterations = 500) {
  const std::size_t q = c.size() - 1;
  RootSolveResult res;
  res.roots.assign(q, cplx{0.0, 0.0});
  if (q == 0) {
    res.converged = true;
    return res;
  }
  double scale = 0.0;
  for (std::size_t k = 1; k <= q; ++k)
    scale = std::max(scale, std::pow(std::abs(c[k]), 1.0 / static_cast<double>(k)));
  if (scale == 0.0) {  // X^q
    res.converged = true;
    return res;
  }
  CVec a(q + 1);
  double sk = 1.0;
  for (std::size_t k = 0; k <= q; ++k) {
    a[k] = c[k] / sk;
    sk *= scale;
  }
  if (q == 1) {
    res.roots[0] = -a[1] * scale;
    res.converged = true;
    return res;
  }

  CVec w(q);
  if (warm_start.size() == q) {
    for (std::size_t i = 0; i < q; ++i) w[i] = warm_start[i] / scale;
  } else {
    cplx centre = -a[1] / static_cast<double>(q);
    for (std::size_t i = 0; i < q; ++i)
      w[i] = centre + std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / q + 0.4);
  }
  // Aberth needs pairwise distinct starting points.
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(w[i] - w[j]) < 1e-10)
        w[i] += std::polar(1e-6, 0.7 + static_cast<double>(i));

  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 1; it <= max_iterations; ++it) {
    double worst = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
      cplx p = a[0], dp{0.0, 0.0};
      for (std::size_t k = 1; k <= q; ++k) {
        dp = dp * w[i] + p;
        p = p * w[i] + a[k];
      }
      if (p == cplx{0.0, 0.0}) continue;
      cplx sum{0.0, 0.0};
      for (std::size_t j = 0; j < q; ++j)
        if (j != i) sum += 1.0 / (w[i] - w[j]);
      // Aberth correction 1 / (p'/p - Σ 1/(w_i - w_j)); finite even where p' = 0.
      cplx denom = dp / p - sum;
      if (denom == cplx{0.0, 0.0} || !std::isfinite(denom.real()) || !std::isfinite(denom.imag())) {
        w[i] += std::polar(1e-3, 1.3 + static_cast<double>(i));
        worst = std::numeric_limits<double>::infinity();
        continue;
      }
      cplx corr = 1.0 / denom;
      w[i] -= corr;
      double rel = std::abs(corr) / std::max(std::abs(w[i]), 1e-300);
      worst = std::max(worst, std::min(rel, std::abs(corr) / eps));
    }
    res.iterations = it;
    if (worst <= 4.0 * eps) {
      res.converged = true;
      break;
    }
  }
  for (std::size_t i = 0; i < q; ++i) res.roots[i] = w[i] * scale;
  return res;
}

}  // namespace orbitlift

#endif  // ORBITLIFT_POLYROOTS_HPP
