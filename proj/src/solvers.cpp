#include "spadapt/solvers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spadapt {

namespace {

void impose(std::vector<double>& values, const std::optional<BoundaryValue>& right, double t) {
  if (right) values.back() = (*right)(t);
}

void check_finite(const std::vector<double>& values, double t, int stage) {
  for (std::size_t s = 0; s < values.size(); ++s) {
    if (!std::isfinite(values[s])) {
      throw SolverDivergence("rk3_step: non-finite value at node " + std::to_string(s) + " in stage " +
                             std::to_string(stage) + " of the step from t = " + std::to_string(t));
    }
  }
}

int step_count(const EvolutionProblem& problem) {
  return static_cast<int>(std::llround(problem.final_time / problem.dt));
}

}  // namespace

void EvolutionProblem::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  if (!(final_time >= 0.0)) throw std::invalid_argument("T must be >= 0");
}

RealExpansion rk3_step(const CollocationRhs& rhs, const RealExpansion& expansion, double t, double dt,
                       const std::optional<BoundaryValue>& right) {
  const BasisDescriptor& d = expansion.descriptor();
  const std::vector<double> u0 = nodal_values(expansion);
  const std::size_t n = u0.size();

  std::vector<double> l = rhs(expansion, t);
  std::vector<double> u1(n);
  for (std::size_t s = 0; s < n; ++s) u1[s] = u0[s] + dt * l[s];
  impose(u1, right, t + dt);
  check_finite(u1, t, 1);
  const RealExpansion e1 = to_coefficients<double>(u1, d);

  l = rhs(e1, t + dt);
  std::vector<double> u2(n);
  for (std::size_t s = 0; s < n; ++s) u2[s] = 0.75 * u0[s] + 0.25 * (u1[s] + dt * l[s]);
  impose(u2, right, t + 0.5 * dt);
  check_finite(u2, t, 2);
  const RealExpansion e2 = to_coefficients<double>(u2, d);

  l = rhs(e2, t + 0.5 * dt);
  std::vector<double> u3(n);
  for (std::size_t s = 0; s < n; ++s) u3[s] = u0[s] / 3.0 + 2.0 / 3.0 * (u2[s] + dt * l[s]);
  impose(u3, right, t + dt);
  check_finite(u3, t, 3);
  return to_coefficients<double>(u3, d);
}

std::vector<double> advection_rhs(const RealExpansion& expansion, double t) {
  const std::vector<double> du = nodal_values(differentiate(expansion));
  const QuadratureRule rule = nodes_weights(expansion.descriptor());
  std::vector<double> out(du.size());
  for (std::size_t s = 0; s < du.size(); ++s) out[s] = (rule.nodes[s] + 2.0) / (t + 1.0) * du[s];
  return out;
}

double advection_exact(double x, double t) { return std::cos((t + 1.0) * (x + 2.0)); }

std::vector<TimeSeriesRecord> track_function(const std::function<double(double, double)>& target,
                                             const BasisDescriptor& initial, const EvolutionProblem& problem,
                                             const TrackConfig& config) {
  problem.validate();
  config.controllers.validate();
  auto at = [&](double t) { return [&target, t](double x) { return target(x, t); }; };
  RealExpansion u = interpolate<double>(initial, at(0.0));
  AdaptiveState state = initial_state(u, config.controllers);

  std::vector<TimeSeriesRecord> records;
  TimeSeriesRecord first;
  first.freq = state.f0;
  if (initial.unbounded() && config.options.log_exterior) first.ext = state.e0;
  first.n = u.order();
  if (initial.unbounded()) {
    first.beta = initial.beta;
    first.x_left = initial.x_left;
  }
  first.error = relative_error<double>(u, at(0.0));
  records.push_back(first);

  const int steps = step_count(problem);
  for (int n = 0; n < steps; ++n) {
    const double t_next = (n + 1) * problem.dt;
    const Evolve<double> evolve = [&](const RealExpansion& current) {
      return interpolate<double>(current.descriptor(), at(t_next));
    };
    TimeSeriesRecord record = orchestrate_step(u, state, config.controllers, evolve, config.options);
    record.t = t_next;
    record.error = relative_error<double>(u, at(t_next));
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<TimeSeriesRecord> track_function_2d(const std::function<double(double, double, double)>& target,
                                                const BasisDescriptor& initial_x, const BasisDescriptor& initial_y,
                                                const EvolutionProblem& problem, const TrackConfig& config) {
  problem.validate();
  config.controllers.validate();
  auto at = [&](double t) { return [&target, t](double x, double y) { return target(x, y, t); }; };
  Expansion2D u = interpolate_2d(initial_x, initial_y, at(0.0));
  AdaptiveState sx, sy;
  sx.f0 = sx.f1 = frequency_indicator_axis(u, Axis::x, config.controllers.indicator);
  sy.f0 = sy.f1 = frequency_indicator_axis(u, Axis::y, config.controllers.indicator);
  sx.eta = sy.eta = config.controllers.eta;

  auto make_record = [&](double t, const Actions& actions) {
    TimeSeriesRecord r;
    r.t = t;
    r.error = relative_error_2d(u, at(t));
    r.freq = frequency_indicator_axis(u, Axis::x, config.controllers.indicator);
    r.freq_y = frequency_indicator_axis(u, Axis::y, config.controllers.indicator);
    r.nx = u.descriptor_x().order;
    r.ny = u.descriptor_y().order;
    r.actions = actions;
    return r;
  };

  std::vector<TimeSeriesRecord> records;
  records.push_back(make_record(0.0, {}));
  const int steps = step_count(problem);
  for (int n = 0; n < steps; ++n) {
    const double t_next = (n + 1) * problem.dt;
    u = interpolate_2d(u.descriptor_x(), u.descriptor_y(), at(t_next));
    Actions actions;
    if (config.controllers.padapt) {
      auto [ax, ay] = p_adapt_step_2d(u, sx, sy, config.controllers);
      actions = ax;
      actions += ay;
    }
    records.push_back(make_record(t_next, actions));
  }
  return records;
}

std::vector<TimeSeriesRecord> solve_advection(const BasisDescriptor& initial, const EvolutionProblem& problem,
                                              const TrackConfig& config) {
  problem.validate();
  config.controllers.validate();
  if (initial.unbounded()) throw std::invalid_argument("solve_advection: bounded basis required");
  RealExpansion u = interpolate<double>(initial, [](double x) { return advection_exact(x, 0.0); });
  AdaptiveState state = initial_state(u, config.controllers);
  const BoundaryValue boundary = [](double t) { return advection_exact(1.0, t); };

  std::vector<TimeSeriesRecord> records;
  TimeSeriesRecord first;
  first.freq = state.f0;
  first.n = u.order();
  first.error = relative_error<double>(u, [](double x) { return advection_exact(x, 0.0); });
  records.push_back(first);

  const int steps = step_count(problem);
  for (int n = 0; n < steps; ++n) {
    const double t_n = n * problem.dt;
    const double t_next = (n + 1) * problem.dt;
    const Evolve<double> evolve = [&](const RealExpansion& current) {
      return rk3_step(advection_rhs, current, t_n, problem.dt, boundary);
    };
    TimeSeriesRecord record = orchestrate_step(u, state, config.controllers, evolve, config.options);
    record.t = t_next;
    record.error = relative_error<double>(u, [t_next](double x) { return advection_exact(x, t_next); });
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace spadapt
