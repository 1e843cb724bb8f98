#ifndef ORBITLIFT_TEST_SUPPORT_HPP
#define ORBITLIFT_TEST_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "orbitlift/core.hpp"

namespace orbitlift::testing {

/// Complex trigonometric polynomial Σ_m c_m e^{i m π t}, m = -order..order.
struct TrigPoly {
  std::vector<cplx> coeffs;
  int order = 0;

  cplx operator()(double t) const {
    cplx s{0.0, 0.0};
    for (int m = -order; m <= order; ++m) s += coeffs[static_cast<std::size_t>(m + order)] * std::polar(1.0, m * std::numbers::pi * t);
    return s;
  }
};

inline TrigPoly random_trig(std::mt19937_64& rng, int order, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, 1.0);
  TrigPoly p;
  p.order = order;
  for (int m = -order; m <= order; ++m)
    p.coeffs.emplace_back(scale * n(rng) / (1.0 + m * m), scale * n(rng) / (1.0 + m * m));
  return p;
}

/// Curve oracle t -> (p_1(t), ..., p_n(t)).
inline CurveOracle trig_oracle(std::vector<TrigPoly> polys) {
  return [polys = std::move(polys)](double t) {
    CVec v;
    for (const auto& p : polys) v.push_back(p(t));
    return v;
  };
}

inline CurveOracle random_trig_curve(std::mt19937_64& rng, std::size_t components, int order) {
  std::vector<TrigPoly> polys;
  for (std::size_t j = 0; j < components; ++j) polys.push_back(random_trig(rng, order));
  return trig_oracle(std::move(polys));
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline CVec random_points(std::mt19937_64& rng, std::size_t count) {
  std::normal_distribution<double> n(0.0, 1.0);
  CVec z;
  for (std::size_t i = 0; i < count; ++i) z.emplace_back(n(rng), n(rng));
  return z;
}

/// Piecewise linear real curve with random slopes on random cell widths.
inline SampledCurve random_step_derivative(std::mt19937_64& rng, std::size_t cells) {
  std::vector<double> t{0.0};
  std::vector<CVec> v{{cplx{0.0, 0.0}}};
  std::exponential_distribution<double> w(1.0);
  std::lognormal_distribution<double> slope(0.0, 1.5);
  for (std::size_t i = 0; i < cells; ++i) {
    double h = 0.01 + w(rng);
    double s = slope(rng) * (rng() % 2 ? 1.0 : -1.0);
    t.push_back(t.back() + h);
    v.push_back({v.back()[0] + s * h});
  }
  return SampledCurve(Grid(std::move(t)), std::move(v));
}

/// Index of the grid node closest to x.
inline std::size_t nearest_node(const Grid& g, double x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < g.size(); ++i)
    if (std::abs(g[i] - x) < std::abs(g[best] - x)) best = i;
  return best;
}

/// Tanh-sinh quadrature of f on (a, b); tolerates integrable endpoint singularities.
template <class F>
double tanh_sinh(F f, double a, double b, int levels = 8) {
  const double c = 0.5 * (a + b), r = 0.5 * (b - a);
  double h = 1.0, sum = 0.0;
  auto term = [&](double k) {
    double u = 0.5 * std::numbers::pi * std::sinh(k);
    double w = 0.5 * std::numbers::pi * std::cosh(k) / (std::cosh(u) * std::cosh(u));
    double s = 0.0;
    // Distance to the ends computed without cancellation.
    double gap = 1.0 / (std::exp(u) * std::cosh(u));
    if (gap > 0.0 && w > 0.0) {
      s += f(b - r * gap) * w;
      s += f(a + r * gap) * w;
    }
    return s;
  };
  sum = 0.5 * std::numbers::pi * f(c);
  for (double k = h; k < 6.0; k += h) sum += term(k);
  double result = h * r * sum;
  for (int level = 1; level <= levels; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double k = h; k < 6.0; k += 2 * h) add += term(k);
    sum += add;
    result = h * r * sum;
  }
  return result;
}

}  // namespace orbitlift::testing

#endif  // ORBITLIFT_TEST_SUPPORT_HPP
