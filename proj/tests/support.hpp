#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "spadapt/basis.hpp"

namespace testing {

// Composite Gauss-Legendre on [lo, hi], 64 panels of 20 points: an
// independent integrator for smooth integrands.
inline double integrate(const std::function<double(double)>& f, double lo, double hi, int panels = 64) {
  static const spadapt::QuadratureRule gl = spadapt::gauss_jacobi(20, 0.0, 0.0);
  double sum = 0.0;
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    for (std::size_t k = 0; k < gl.nodes.size(); ++k) sum += 0.5 * h * gl.weights[k] * f(mid + 0.5 * h * gl.nodes[k]);
  }
  return sum;
}

inline std::vector<double> random_vector(int n, unsigned seed, double scale = 1.0) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace testing
