#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace spadapt {

/// Orthogonal families. Bounded families live on [-1, 1]; LaguerreFn on
/// [x_L, inf); HermiteFn on the real line.
enum class Family { Jacobi, Chebyshev, Legendre, LaguerreFn, HermiteFn };

std::string to_string(Family family);

/// Names an approximation space: family, expansion order N (N+1 functions),
/// scaling factor beta and translation x_L.
///
/// `a` and `b` hold the Jacobi parameters (a_J, b_J); `a` doubles as the
/// Laguerre parameter. beta and x_left are pinned to 1 and 0 for bounded
/// families.
struct BasisDescriptor {
  Family family = Family::Chebyshev;
  int order = 0;
  double a = 0.0;
  double b = 0.0;
  double beta = 1.0;
  double x_left = 0.0;

  static BasisDescriptor chebyshev(int order);
  static BasisDescriptor legendre(int order);
  static BasisDescriptor jacobi(int order, double a, double b);
  static BasisDescriptor laguerre(int order, double alpha, double beta, double x_left = 0.0);
  static BasisDescriptor hermite(int order, double beta, double x_left = 0.0);

  [[nodiscard]] bool unbounded() const noexcept {
    return family == Family::LaguerreFn || family == Family::HermiteFn;
  }
  [[nodiscard]] int size() const noexcept { return order + 1; }

  [[nodiscard]] BasisDescriptor with_order(int n) const;
  [[nodiscard]] BasisDescriptor with_beta(double new_beta) const;
  [[nodiscard]] BasisDescriptor with_shift(double new_x_left) const;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  friend bool operator==(const BasisDescriptor&, const BasisDescriptor&) = default;
};

/// Largest order for which nodes are computed.
inline constexpr int kMaxOrder = 4096;

/// Nodes ascending, weights positive. The weights absorb the family weight
/// function, so sum_s w_s f(x_s) g(x_s) approximates the weighted inner
/// product (f, g)_omega directly for basis *functions* (including the
/// exponential envelope of the Laguerre/Hermite functions).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Grid of the unscaled (beta = 1, x_L = 0) basis of a given order: the
/// collocation rule, the basis matrix B(s, i) = B_i(x_s) and the discrete
/// norms sum_s w_s B_i(x_s)^2. Physical grids are affine images of this one.
struct StandardGrid {
  QuadratureRule rule;
  RowMatrix basis;
  std::vector<double> discrete_norms;
};

/// Cached, thread-safe. Bounded families use Gauss-Lobatto, Laguerre
/// Gauss-Radau (node at x_L), Hermite Gauss. Order 0 on a bounded family
/// uses the one-point Gauss rule.
std::shared_ptr<const StandardGrid> standard_grid(const BasisDescriptor& descriptor);

/// Physical collocation rule: nodes x_s = xi_s / beta + x_L, weights w_s / beta.
QuadratureRule nodes_weights(const BasisDescriptor& descriptor);

/// Factor relating physical basis values at the physical nodes to the
/// standard basis matrix (sqrt(beta) for unbounded families, 1 otherwise).
double basis_scale(const BasisDescriptor& descriptor) noexcept;

/// B_0(x) .. B_N(x). Laguerre/Hermite functions are evaluated with a scaled
/// recurrence so large orders neither overflow nor lose the envelope.
std::vector<double> evaluate_all(const BasisDescriptor& descriptor, double x);
void evaluate_all(const BasisDescriptor& descriptor, double x, std::span<double> out);

/// B_i'(x) for i = 0..N.
std::vector<double> evaluate_derivatives(const BasisDescriptor& descriptor, double x);
void evaluate_derivatives(const BasisDescriptor& descriptor, double x, std::span<double> out);

/// gamma_i = int B_i^2 omega dx in closed form.
std::vector<double> norms(const BasisDescriptor& descriptor);

/// Closed-form discrete norms on the collocation grid. They equal the
/// continuous norms except for the top Gauss-Lobatto mode, whose square has
/// degree 2N and so falls outside the rule's exactness:
/// (2 + (a + b + 1) / N) * gamma_N.
std::vector<double> discrete_norms(const BasisDescriptor& descriptor);

/// Gauss rule for the Jacobi weight (1-x)^a (1+x)^b with n nodes, computed by
/// Golub-Welsch plus one Newton step. Exposed for quadrature elsewhere.
QuadratureRule gauss_jacobi(int n, double a, double b);

}  // namespace spadapt
