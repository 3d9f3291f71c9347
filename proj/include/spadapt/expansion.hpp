#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "spadapt/basis.hpp"

namespace spadapt {

using cplx = std::complex<double>;

/// U_N(x) = sum_i u_i B_i(x) over a BasisDescriptor. Real for the bounded and
/// function-tracking problems, complex for the Schroedinger solver.
template <class Scalar>
class Expansion {
 public:
  using scalar_type = Scalar;

  Expansion() = default;
  /// Throws std::invalid_argument if the coefficient count is not N+1 or an
  /// entry is not finite.
  Expansion(BasisDescriptor descriptor, std::vector<Scalar> coefficients);

  /// Zero expansion over `descriptor`.
  static Expansion zero(const BasisDescriptor& descriptor);

  [[nodiscard]] const BasisDescriptor& descriptor() const noexcept { return descriptor_; }
  [[nodiscard]] int order() const noexcept { return descriptor_.order; }
  [[nodiscard]] std::span<const Scalar> coefficients() const noexcept { return coefficients_; }
  [[nodiscard]] const std::vector<Scalar>& coefficient_vector() const noexcept { return coefficients_; }

  /// Point evaluation; use to_values for many points.
  [[nodiscard]] Scalar operator()(double x) const;

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  BasisDescriptor descriptor_{};
  std::vector<Scalar> coefficients_{Scalar{}};
};

using RealExpansion = Expansion<double>;
using ComplexExpansion = Expansion<cplx>;

/// Discrete-orthogonality projection of nodal values on the descriptor's own
/// collocation grid. Interpolatory: to_values(result, nodes) reproduces the input.
template <class Scalar>
Expansion<Scalar> to_coefficients(std::span<const Scalar> nodal_values, const BasisDescriptor& descriptor);

/// Evaluate at arbitrary points.
template <class Scalar>
std::vector<Scalar> to_values(const Expansion<Scalar>& expansion, std::span<const double> points);

/// Values at the expansion's own collocation nodes (uses the cached grid).
template <class Scalar>
std::vector<Scalar> nodal_values(const Expansion<Scalar>& expansion);

/// Coefficients of d/dx U_N.
///  - polynomial families: same order (the derivative has degree N-1);
///  - LaguerreFn: same order (the derivative stays in the span);
///  - HermiteFn: order N+1, since h_N' involves h_{N+1}.
template <class Scalar>
Expansion<Scalar> differentiate(const Expansion<Scalar>& expansion);

/// Interpolate f on the descriptor's collocation grid.
template <class Scalar>
Expansion<Scalar> interpolate(const BasisDescriptor& descriptor, const std::function<Scalar(double)>& f) {
  const QuadratureRule rule = nodes_weights(descriptor);
  std::vector<Scalar> values(rule.nodes.size());
  for (std::size_t s = 0; s < values.size(); ++s) values[s] = f(rule.nodes[s]);
  return to_coefficients<Scalar>(values, descriptor);
}

/// Re-fit `expansion` in the space `target` by sampling it at the target's
/// collocation nodes. Shared by refine, coarsen, rescale and translate.
template <class Scalar>
Expansion<Scalar> resample(const Expansion<Scalar>& expansion, const BasisDescriptor& target);

/// Tensor-product expansion on two bounded bases: U(x, y) = sum u_ij B_i(x) B_j(y).
class Expansion2D {
 public:
  Expansion2D(BasisDescriptor x, BasisDescriptor y, Eigen::MatrixXd coefficients);

  [[nodiscard]] const BasisDescriptor& descriptor_x() const noexcept { return x_; }
  [[nodiscard]] const BasisDescriptor& descriptor_y() const noexcept { return y_; }
  [[nodiscard]] const Eigen::MatrixXd& coefficients() const noexcept { return coefficients_; }

  [[nodiscard]] double operator()(double x, double y) const;

 private:
  BasisDescriptor x_;
  BasisDescriptor y_;
  Eigen::MatrixXd coefficients_;
};

/// Interpolate f on the tensor grid of the two descriptors.
Expansion2D interpolate_2d(const BasisDescriptor& x, const BasisDescriptor& y,
                           const std::function<double(double, double)>& f);

/// Re-fit on new descriptors by sampling at their tensor grid.
Expansion2D resample_2d(const Expansion2D& expansion, const BasisDescriptor& x, const BasisDescriptor& y);

}  // namespace spadapt
