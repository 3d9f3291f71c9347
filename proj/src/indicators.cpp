#include "spadapt/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spadapt {

namespace {

template <class Scalar>
double abs2(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return v * v;
  } else {
    return std::norm(v);
  }
}

constexpr int kPanelPoints = 16;

const QuadratureRule& panel_rule() {
  static const QuadratureRule rule = gauss_jacobi(kPanelPoints, 0.0, 0.0);
  return rule;
}

// Integration window [lo, hi] of the derivative's space, outside of which the
// basis envelope is below 1e-18 of its peak.
std::pair<double, double> envelope_window(const BasisDescriptor& d) {
  if (d.family == Family::HermiteFn) {
    // turning point of h_N is sqrt(2N+1); past it decay is at least Gaussian
    const double half = std::sqrt(2.0 * d.order + 1.0) + 10.0;
    return {d.x_left - half / d.beta, d.x_left + half / d.beta};
  }
  // l_N oscillates up to y ~ 4N + 2a + 2, then decays like e^{-y/2}
  const double span = 4.0 * d.order + 2.0 * d.a + 2.0 + 90.0;
  return {d.x_left, d.x_left + span / d.beta};
}

}  // namespace

int IndicatorConfig::width(int order) const {
  const int m = tail_width.value_or(order / 3);
  return std::clamp(m, 1, std::max(order, 1));
}

template <class Scalar>
double frequency_indicator(const Expansion<Scalar>& expansion, const IndicatorConfig& config) {
  const int n = expansion.order();
  const std::vector<double> gamma = norms(expansion.descriptor());
  const auto u = expansion.coefficients();
  double total = 0.0;
  for (int i = 0; i <= n; ++i) total += gamma[i] * abs2(u[i]);
  if (total == 0.0) return 0.0;
  if (n == 0) return 1.0;
  const int m = config.width(n);
  double tail = 0.0;
  for (int i = n - m + 1; i <= n; ++i) tail += gamma[i] * abs2(u[i]);
  return std::min(1.0, std::sqrt(tail / total));
}

double frequency_indicator_axis(const Expansion2D& expansion, Axis axis, const IndicatorConfig& config) {
  const std::vector<double> gx = norms(expansion.descriptor_x());
  const std::vector<double> gy = norms(expansion.descriptor_y());
  const Eigen::MatrixXd& u = expansion.coefficients();
  const int n = axis == Axis::x ? expansion.descriptor_x().order : expansion.descriptor_y().order;
  double total = 0.0, tail = 0.0;
  const int m = config.width(n);
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      const double e = gx[i] * gy[j] * u(i, j) * u(i, j);
      total += e;
      const Eigen::Index k = axis == Axis::x ? i : j;
      if (k >= n - m + 1) tail += e;
    }
  }
  if (total == 0.0) return 0.0;
  if (n == 0) return 1.0;
  return std::min(1.0, std::sqrt(tail / total));
}

template <class Scalar>
double exterior_error_indicator(const Expansion<Scalar>& expansion, double x_right) {
  const BasisDescriptor& d0 = expansion.descriptor();
  if (!d0.unbounded()) throw std::invalid_argument("exterior_error_indicator needs a Laguerre or Hermite basis");
  const Expansion<Scalar> du = differentiate(expansion);
  const BasisDescriptor& d = du.descriptor();

  bool all_zero = true;
  for (const auto& c : du.coefficients()) all_zero = all_zero && c == Scalar{};
  if (all_zero) return 0.0;

  const auto [lo, hi] = envelope_window(d);
  // panel breaks: collocation nodes of one order up, plus the window ends
  std::vector<double> breaks;
  breaks.push_back(lo);
  for (double x : nodes_weights(d.with_order(d.order + 1)).nodes) {
    if (x > lo && x < hi) breaks.push_back(x);
  }
  breaks.push_back(hi);
  double widest = 0.0;
  for (std::size_t k = 2; k + 1 < breaks.size(); ++k) widest = std::max(widest, breaks[k] - breaks[k - 1]);
  if (widest == 0.0) widest = (hi - lo) / 16.0;
  std::vector<double> panels{breaks.front()};
  for (std::size_t k = 1; k < breaks.size(); ++k) {
    const double gap = breaks[k] - breaks[k - 1];
    const int pieces = std::max(1, static_cast<int>(std::ceil(gap / widest - 1e-9)));
    for (int p = 1; p <= pieces; ++p) panels.push_back(breaks[k - 1] + gap * p / pieces);
  }

  // Each panel contributes to the total; the panel holding x_R is split.
  const QuadratureRule& gl = panel_rule();
  std::vector<double> points;
  std::vector<double> weights;
  std::vector<char> exterior;
  auto add_panel = [&](double p, double q, bool outside) {
    const double half = 0.5 * (q - p), mid = 0.5 * (q + p);
    for (int k = 0; k < kPanelPoints; ++k) {
      points.push_back(mid + half * gl.nodes[k]);
      weights.push_back(half * gl.weights[k]);
      exterior.push_back(outside ? 1 : 0);
    }
  };
  for (std::size_t k = 1; k < panels.size(); ++k) {
    const double p = panels[k - 1], q = panels[k];
    if (x_right <= p) {
      add_panel(p, q, true);
    } else if (x_right >= q) {
      add_panel(p, q, false);
    } else {
      add_panel(p, x_right, false);
      add_panel(x_right, q, true);
    }
  }
  const std::vector<Scalar> values = to_values(du, points);
  double total = 0.0, outer = 0.0;
  for (std::size_t s = 0; s < points.size(); ++s) {
    double w = weights[s];
    if (d.family == Family::LaguerreFn && d.a != 0.0) w *= std::pow(d.beta * (points[s] - d.x_left), d.a);
    const double e = w * abs2(values[s]);
    total += e;
    if (exterior[s]) outer += e;
  }
  if (total == 0.0) return 0.0;
  return std::clamp(std::sqrt(outer / total), 0.0, 1.0);
}

double default_x_right(const BasisDescriptor& descriptor) {
  if (!descriptor.unbounded()) throw std::invalid_argument("default_x_right is defined for unbounded families only");
  const int n = descriptor.order;
  const int index = descriptor.family == Family::HermiteFn ? (2 * n + 2) / 3 : (n + 2) / 3;
  return nodes_weights(descriptor).nodes.at(std::min(index, n));
}

template <class Scalar>
double relative_error(const Expansion<Scalar>& expansion, const std::function<Scalar(double)>& reference) {
  const BasisDescriptor fine = expansion.descriptor().with_order(2 * expansion.order() + 1);
  const QuadratureRule rule = nodes_weights(fine);
  const std::vector<Scalar> approx = to_values(expansion, rule.nodes);
  double diff = 0.0, norm = 0.0;
  for (std::size_t s = 0; s < rule.nodes.size(); ++s) {
    const Scalar exact = reference(rule.nodes[s]);
    diff += rule.weights[s] * abs2(approx[s] - exact);
    norm += rule.weights[s] * abs2(exact);
  }
  if (!(norm > 0.0)) throw std::domain_error("relative_error: reference has zero norm");
  return std::sqrt(diff / norm);
}

double relative_error_2d(const Expansion2D& expansion, const std::function<double(double, double)>& reference) {
  const QuadratureRule rx = nodes_weights(expansion.descriptor_x().with_order(2 * expansion.descriptor_x().order + 1));
  const QuadratureRule ry = nodes_weights(expansion.descriptor_y().with_order(2 * expansion.descriptor_y().order + 1));
  double diff = 0.0, norm = 0.0;
  for (std::size_t s = 0; s < rx.nodes.size(); ++s) {
    const std::vector<double> bx = evaluate_all(expansion.descriptor_x(), rx.nodes[s]);
    const Eigen::Map<const Eigen::VectorXd> vx(bx.data(), bx.size());
    const Eigen::RowVectorXd row = vx.transpose() * expansion.coefficients();
    for (std::size_t t = 0; t < ry.nodes.size(); ++t) {
      const std::vector<double> by = evaluate_all(expansion.descriptor_y(), ry.nodes[t]);
      const Eigen::Map<const Eigen::VectorXd> vy(by.data(), by.size());
      const double approx = row.dot(vy);
      const double exact = reference(rx.nodes[s], ry.nodes[t]);
      const double w = rx.weights[s] * ry.weights[t];
      diff += w * (approx - exact) * (approx - exact);
      norm += w * exact * exact;
    }
  }
  if (!(norm > 0.0)) throw std::domain_error("relative_error_2d: reference has zero norm");
  return std::sqrt(diff / norm);
}

template double frequency_indicator<double>(const Expansion<double>&, const IndicatorConfig&);
template double frequency_indicator<cplx>(const Expansion<cplx>&, const IndicatorConfig&);
template double exterior_error_indicator<double>(const Expansion<double>&, double);
template double exterior_error_indicator<cplx>(const Expansion<cplx>&, double);
template double relative_error<double>(const Expansion<double>&, const std::function<double(double)>&);
template double relative_error<cplx>(const Expansion<cplx>&, const std::function<cplx(double)>&);

}  // namespace spadapt
