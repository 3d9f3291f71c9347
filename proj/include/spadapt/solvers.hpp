#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spadapt/adapt.hpp"

namespace spadapt {

/// Right-hand side in collocation form: node values of du/dt for the
/// expansion at time t.
using CollocationRhs = std::function<std::vector<double>(const RealExpansion&, double t)>;

/// Dirichlet value g(t) imposed at the right endpoint node.
using BoundaryValue = std::function<double(double t)>;

/// Raised when a stage produces a non-finite node value.
class SolverDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One Shu-Osher SSP-RK3 step on node values. When `right` is set, the
/// last node is overwritten with g at the stage times t+dt, t+dt/2, t+dt.
RealExpansion rk3_step(const CollocationRhs& rhs, const RealExpansion& expansion, double t, double dt,
                       const std::optional<BoundaryValue>& right = std::nullopt);

/// ((x+2)/(t+1)) dU/dx at the collocation nodes.
std::vector<double> advection_rhs(const RealExpansion& expansion, double t);

/// cos((t+1)(x+2)), the solution of u_t = ((x+2)/(t+1)) u_x with u(1,t) = cos(3(t+1)).
double advection_exact(double x, double t);

struct EvolutionProblem {
  double dt = 1e-3;
  double final_time = 1.0;
  void validate() const;
};

struct TrackConfig {
  ControllerConfig controllers{};
  OrchestratorOptions options{};
};

/// Runs the adaptive loop where evolve re-interpolates u(., t + dt) on the
/// current basis. Records include the relative error against u.
std::vector<TimeSeriesRecord> track_function(const std::function<double(double, double)>& target,
                                             const BasisDescriptor& initial, const EvolutionProblem& problem,
                                             const TrackConfig& config);

/// Tensor-product variant with per-axis p-adaptivity (bounded families).
std::vector<TimeSeriesRecord> track_function_2d(const std::function<double(double, double, double)>& target,
                                                const BasisDescriptor& initial_x, const BasisDescriptor& initial_y,
                                                const EvolutionProblem& problem, const TrackConfig& config);

/// Example 1 driver: RK3 collocation of the advection problem with
/// p-adaptivity (if enabled in the controllers).
std::vector<TimeSeriesRecord> solve_advection(const BasisDescriptor& initial, const EvolutionProblem& problem,
                                              const TrackConfig& config);

}  // namespace spadapt
