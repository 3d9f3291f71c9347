#pragma once

#include <functional>
#include <optional>

#include "spadapt/expansion.hpp"

namespace spadapt {

/// Width M of the high-frequency tail. Default is the 2/3-rule, M = [N/3],
/// clamped to [1, N].
struct IndicatorConfig {
  std::optional<int> tail_width;

  [[nodiscard]] int width(int order) const;
};

/// sqrt(sum_{i>N-M} g_i |u_i|^2 / sum_i g_i |u_i|^2) in [0, 1].
/// All-zero coefficients give 0. Order 0 has no low/high split: the single
/// mode is the tail, so any nonzero expansion gives 1.
template <class Scalar>
double frequency_indicator(const Expansion<Scalar>& expansion, const IndicatorConfig& config = {});

enum class Axis { x, y };

/// Per-axis indicator of a tensor-product expansion.
double frequency_indicator_axis(const Expansion2D& expansion, Axis axis, const IndicatorConfig& config = {});

/// ||dU/dx 1_{(x_R, inf)}||_w / ||dU/dx||_w for Laguerre/Hermite expansions.
///
/// Both norms come from the same composite Gauss-Legendre quadrature of the
/// differentiated expansion, with panel breaks at the collocation nodes of
/// the derivative's space and a cutoff where the basis envelope has fallen
/// below 1e-18 of its peak. Returns 0 for a constant expansion.
template <class Scalar>
double exterior_error_indicator(const Expansion<Scalar>& expansion, double x_right);

/// The collocation node with 0-based index [(2N+2)/3] (Hermite) or
/// [(N+2)/3] (Laguerre). Throws std::invalid_argument for bounded families.
double default_x_right(const BasisDescriptor& descriptor);

/// ||U - u||_w / ||u||_w on the family's rule of order 2N+1 (2N+2 points),
/// same beta and x_L. Throws std::domain_error when ||u||_w vanishes.
template <class Scalar>
double relative_error(const Expansion<Scalar>& expansion, const std::function<Scalar(double)>& reference);

/// Same on the tensor rule of orders (2N_x+1, 2N_y+1).
double relative_error_2d(const Expansion2D& expansion, const std::function<double(double, double)>& reference);

}  // namespace spadapt
