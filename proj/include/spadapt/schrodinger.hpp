#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "spadapt/adapt.hpp"
#include "spadapt/expm.hpp"

namespace spadapt {

/// i psi_t = -psi_xx + (V(x) + V_ex(x, t)) psi on the real line.
struct SchrodingerProblem {
  std::function<double(double)> potential;          // V; empty means 0
  std::function<double(double, double)> external;   // V_ex(x, t); empty means 0
  std::function<cplx(double)> initial;              // psi(x, 0)
  double dt = 0.005;
  double final_time = 1.0;
  ExpmConfig expm{};

  [[nodiscard]] bool has_potential() const noexcept { return static_cast<bool>(potential) || static_cast<bool>(external); }
  void validate() const;
};

/// S(l, j) = int dH_l/dx dH_j/dx dx for the Hermite functions of `descriptor`:
/// beta^2 (2n+1)/2 on the diagonal, -beta^2 sqrt((n+1)(n+2))/2 two off it.
Eigen::MatrixXd stiffness_matrix(const BasisDescriptor& descriptor);

/// y = S x using the pentadiagonal pattern.
void stiffness_apply(const BasisDescriptor& descriptor, const Eigen::VectorXcd& x, Eigen::VectorXcd& y);

/// Matrix-free time-integrated potential on the collocation nodes:
/// (V~ X)_l = sum_s w_s H_l(x_s) g_s sum_j H_j(x_s) X_j, with
/// g_s = dt V(x_s) + dt sum_q c_q V_ex(x_s, t_n + tau_q dt) (3-point Gauss-Legendre in time).
class PotentialOperator {
 public:
  PotentialOperator(const BasisDescriptor& descriptor, const SchrodingerProblem& problem, double t_n);

  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
  /// Explicit matrix, for testing.
  [[nodiscard]] Eigen::MatrixXd dense() const;

 private:
  BasisDescriptor descriptor_;
  std::vector<double> weighted_;  // w_s g_s on the standard grid
};

Eigen::VectorXcd potential_apply(const BasisDescriptor& descriptor, const SchrodingerProblem& problem, double t_n,
                                 const Eigen::VectorXcd& x);

/// psi(t_n + dt) = exp(-i (S dt + V~)) psi(t_n).
ComplexExpansion propagate_step(const ComplexExpansion& psi, const SchrodingerProblem& problem, double t_n);

struct SchrodingerRunConfig {
  BasisDescriptor initial_basis = BasisDescriptor::hermite(50, 1.0);
  ControllerConfig controllers{};
  OrchestratorOptions options{};
  /// Error of the solution after `step` steps (time t), logged when set.
  std::function<double(int step, double t, const ComplexExpansion&)> error;
  /// Called with the solution after every step, step 0 included.
  std::function<void(int step, const ComplexExpansion&)> observer;
};

struct SchrodingerRun {
  std::vector<TimeSeriesRecord> records;
  ComplexExpansion final_state;
};

/// Full adaptive loop with evolve = propagate_step. The first record is t = 0.
SchrodingerRun adapt_schrodinger_run(const SchrodingerProblem& problem, const SchrodingerRunConfig& config);

/// Free particle: (zeta + i t)^{-1/2} exp[i k (x - k t) - (x - 2 k t)^2 / (4 (zeta + i t))].
cplx free_particle(double x, double t, double zeta, double k);

}  // namespace spadapt
