#include "spadapt/expansion.hpp"

#include <cmath>
#include <stdexcept>

#include "spadapt/kernels.hpp"

namespace spadapt {

namespace {

template <class Scalar>
bool is_finite(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

// Analysis matrix A = diag(1/g) B^T W of a bounded descriptor, so that the
// coefficients of nodal values v are A v.
Eigen::MatrixXd analysis_matrix(const BasisDescriptor& d) {
  const auto grid = standard_grid(d);
  Eigen::MatrixXd a(d.size(), d.size());
  for (int i = 0; i < d.size(); ++i) {
    for (int s = 0; s < d.size(); ++s) {
      a(i, s) = grid->rule.weights[s] * grid->basis(s, i) / grid->discrete_norms[i];
    }
  }
  return a;
}

Eigen::MatrixXd basis_at(const BasisDescriptor& d, const std::vector<double>& points) {
  RowMatrix b;
  kernels::basis_matrix(d, points, b);
  return b;
}

}  // namespace

template <class Scalar>
Expansion<Scalar>::Expansion(BasisDescriptor descriptor, std::vector<Scalar> coefficients)
    : descriptor_(descriptor), coefficients_(std::move(coefficients)) {
  descriptor_.validate();
  if (static_cast<int>(coefficients_.size()) != descriptor_.size()) {
    throw std::invalid_argument("coefficient count " + std::to_string(coefficients_.size()) +
                                " does not match N+1 = " + std::to_string(descriptor_.size()));
  }
  for (const auto& c : coefficients_) {
    if (!is_finite(c)) throw std::invalid_argument("non-finite expansion coefficient");
  }
}

template <class Scalar>
Expansion<Scalar> Expansion<Scalar>::zero(const BasisDescriptor& descriptor) {
  return Expansion(descriptor, std::vector<Scalar>(descriptor.size(), Scalar{}));
}

template <class Scalar>
Scalar Expansion<Scalar>::operator()(double x) const {
  const std::vector<double> b = evaluate_all(descriptor_, x);
  Scalar acc{};
  for (int i = 0; i <= descriptor_.order; ++i) acc += b[i] * coefficients_[i];
  return acc;
}

template <class Scalar>
Expansion<Scalar> to_coefficients(std::span<const Scalar> nodal_values, const BasisDescriptor& descriptor) {
  if (static_cast<int>(nodal_values.size()) != descriptor.size()) {
    throw std::invalid_argument("to_coefficients: expected " + std::to_string(descriptor.size()) +
                                " nodal values, got " + std::to_string(nodal_values.size()));
  }
  const auto grid = standard_grid(descriptor);
  std::vector<Scalar> coeffs(descriptor.size());
  kernels::analyze<Scalar>(grid->basis, grid->rule.weights, nodal_values, 1.0 / basis_scale(descriptor), coeffs);
  for (int i = 0; i < descriptor.size(); ++i) coeffs[i] /= grid->discrete_norms[i];
  return Expansion<Scalar>(descriptor, std::move(coeffs));
}

template <class Scalar>
std::vector<Scalar> to_values(const Expansion<Scalar>& expansion, std::span<const double> points) {
  RowMatrix b;
  kernels::basis_matrix(expansion.descriptor(), points, b);
  std::vector<Scalar> values(points.size());
  kernels::synthesize<Scalar>(b, expansion.coefficients(), 1.0, values);
  return values;
}

template <class Scalar>
std::vector<Scalar> nodal_values(const Expansion<Scalar>& expansion) {
  const auto grid = standard_grid(expansion.descriptor());
  std::vector<Scalar> values(expansion.descriptor().size());
  kernels::synthesize<Scalar>(grid->basis, expansion.coefficients(), basis_scale(expansion.descriptor()), values);
  return values;
}

template <class Scalar>
Expansion<Scalar> differentiate(const Expansion<Scalar>& expansion) {
  const BasisDescriptor& d = expansion.descriptor();
  const auto u = expansion.coefficients();
  const int n = d.order;
  switch (d.family) {
    case Family::HermiteFn: {
      std::vector<Scalar> out(n + 2, Scalar{});
      for (int k = 0; k <= n + 1; ++k) {
        Scalar acc{};
        if (k + 1 <= n) acc += std::sqrt(0.5 * (k + 1)) * u[k + 1];
        if (k >= 1) acc -= std::sqrt(0.5 * k) * u[k - 1];
        out[k] = d.beta * acc;
      }
      return Expansion<Scalar>(d.with_order(n + 1), std::move(out));
    }
    case Family::LaguerreFn: {
      // d_k = beta * (-u_k / 2 - (1/c_k) sum_{m>k} c_m u_m)
      std::vector<double> log_c(n + 1);
      for (int k = 0; k <= n; ++k) log_c[k] = 0.5 * (std::lgamma(k + 1.0) - std::lgamma(k + d.a + 1.0));
      std::vector<Scalar> out(n + 1);
      Scalar tail{};
      for (int k = n; k >= 0; --k) {
        out[k] = d.beta * (-0.5 * u[k] - std::exp(-log_c[k]) * tail);
        tail += std::exp(log_c[k]) * u[k];
      }
      return Expansion<Scalar>(d, std::move(out));
    }
    default: {
      // exact: the derivative has degree N-1, so interpolating it on the
      // N+1 collocation nodes recovers it
      const auto grid = standard_grid(d);
      const auto& nodes = grid->rule.nodes;
      std::vector<Scalar> values(n + 1);
      std::vector<double> db(n + 1);
      for (int s = 0; s <= n; ++s) {
        evaluate_derivatives(d, nodes[s], db);
        Scalar acc{};
        for (int i = 0; i <= n; ++i) acc += db[i] * u[i];
        values[s] = acc;
      }
      return to_coefficients<Scalar>(values, d);
    }
  }
}

template <class Scalar>
Expansion<Scalar> resample(const Expansion<Scalar>& expansion, const BasisDescriptor& target) {
  const QuadratureRule rule = nodes_weights(target);
  const std::vector<Scalar> values = to_values(expansion, rule.nodes);
  return to_coefficients<Scalar>(values, target);
}

template class Expansion<double>;
template class Expansion<cplx>;
template Expansion<double> to_coefficients<double>(std::span<const double>, const BasisDescriptor&);
template Expansion<cplx> to_coefficients<cplx>(std::span<const cplx>, const BasisDescriptor&);
template std::vector<double> to_values<double>(const Expansion<double>&, std::span<const double>);
template std::vector<cplx> to_values<cplx>(const Expansion<cplx>&, std::span<const double>);
template std::vector<double> nodal_values<double>(const Expansion<double>&);
template std::vector<cplx> nodal_values<cplx>(const Expansion<cplx>&);
template Expansion<double> differentiate<double>(const Expansion<double>&);
template Expansion<cplx> differentiate<cplx>(const Expansion<cplx>&);
template Expansion<double> resample<double>(const Expansion<double>&, const BasisDescriptor&);
template Expansion<cplx> resample<cplx>(const Expansion<cplx>&, const BasisDescriptor&);

// --- 2D ----------------------------------------------------------------------

Expansion2D::Expansion2D(BasisDescriptor x, BasisDescriptor y, Eigen::MatrixXd coefficients)
    : x_(x), y_(y), coefficients_(std::move(coefficients)) {
  x_.validate();
  y_.validate();
  if (x_.unbounded() || y_.unbounded()) throw std::invalid_argument("Expansion2D supports bounded families only");
  if (coefficients_.rows() != x_.size() || coefficients_.cols() != y_.size()) {
    throw std::invalid_argument("Expansion2D coefficient matrix does not match (N_x+1) x (N_y+1)");
  }
  if (!coefficients_.allFinite()) throw std::invalid_argument("non-finite expansion coefficient");
}

double Expansion2D::operator()(double x, double y) const {
  const std::vector<double> bx = evaluate_all(x_, x);
  const std::vector<double> by = evaluate_all(y_, y);
  const Eigen::Map<const Eigen::VectorXd> vx(bx.data(), x_.size());
  const Eigen::Map<const Eigen::VectorXd> vy(by.data(), y_.size());
  return vx.dot(coefficients_ * vy);
}

Expansion2D interpolate_2d(const BasisDescriptor& x, const BasisDescriptor& y,
                           const std::function<double(double, double)>& f) {
  const QuadratureRule rx = nodes_weights(x);
  const QuadratureRule ry = nodes_weights(y);
  Eigen::MatrixXd values(x.size(), y.size());
  for (int s = 0; s < x.size(); ++s) {
    for (int t = 0; t < y.size(); ++t) values(s, t) = f(rx.nodes[s], ry.nodes[t]);
  }
  Eigen::MatrixXd c = analysis_matrix(x) * values * analysis_matrix(y).transpose();
  return Expansion2D(x, y, std::move(c));
}

Expansion2D resample_2d(const Expansion2D& expansion, const BasisDescriptor& x, const BasisDescriptor& y) {
  const QuadratureRule rx = nodes_weights(x);
  const QuadratureRule ry = nodes_weights(y);
  const Eigen::MatrixXd bx = basis_at(expansion.descriptor_x(), rx.nodes);
  const Eigen::MatrixXd by = basis_at(expansion.descriptor_y(), ry.nodes);
  const Eigen::MatrixXd values = bx * expansion.coefficients() * by.transpose();
  Eigen::MatrixXd c = analysis_matrix(x) * values * analysis_matrix(y).transpose();
  return Expansion2D(x, y, std::move(c));
}

}  // namespace spadapt
