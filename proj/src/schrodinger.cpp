#include "spadapt/schrodinger.hpp"

#include <cmath>
#include <stdexcept>

#include "spadapt/kernels.hpp"

namespace spadapt {

namespace {

void require_hermite(const BasisDescriptor& d) {
  if (d.family != Family::HermiteFn) throw std::invalid_argument("Schroedinger solver needs a Hermite function basis");
}

// 3-point Gauss-Legendre on [0, 1]
constexpr double kTau[3] = {0.5 * (1.0 - 0.7745966692414834), 0.5, 0.5 * (1.0 + 0.7745966692414834)};
constexpr double kTauWeight[3] = {5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0};

}  // namespace

void SchrodingerProblem::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("Schroedinger problem: dt must be > 0");
  if (!(final_time >= 0.0)) throw std::invalid_argument("Schroedinger problem: T must be >= 0");
  if (!initial) throw std::invalid_argument("Schroedinger problem: missing initial condition");
  expm.validate();
}

Eigen::MatrixXd stiffness_matrix(const BasisDescriptor& descriptor) {
  require_hermite(descriptor);
  const int n = descriptor.order;
  const double b2 = descriptor.beta * descriptor.beta;
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int l = 0; l <= n; ++l) {
    s(l, l) = b2 * (2.0 * l + 1.0) / 2.0;
    if (l + 2 <= n) s(l, l + 2) = s(l + 2, l) = -b2 * std::sqrt((l + 1.0) * (l + 2.0)) / 2.0;
  }
  return s;
}

void stiffness_apply(const BasisDescriptor& descriptor, const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
  const int n = descriptor.order;
  const double b2 = descriptor.beta * descriptor.beta;
  y.resize(n + 1);
  for (int l = 0; l <= n; ++l) {
    cplx acc = b2 * (2.0 * l + 1.0) / 2.0 * x[l];
    if (l + 2 <= n) acc -= b2 * std::sqrt((l + 1.0) * (l + 2.0)) / 2.0 * x[l + 2];
    if (l >= 2) acc -= b2 * std::sqrt((l - 1.0) * l) / 2.0 * x[l - 2];
    y[l] = acc;
  }
}

PotentialOperator::PotentialOperator(const BasisDescriptor& descriptor, const SchrodingerProblem& problem, double t_n)
    : descriptor_(descriptor) {
  require_hermite(descriptor);
  const auto grid = standard_grid(descriptor);
  const QuadratureRule rule = nodes_weights(descriptor);
  const double dt = problem.dt;
  weighted_.resize(rule.nodes.size());
  for (std::size_t s = 0; s < rule.nodes.size(); ++s) {
    const double x = rule.nodes[s];
    double g = 0.0;
    if (problem.potential) g += dt * problem.potential(x);
    if (problem.external) {
      double acc = 0.0;
      for (int q = 0; q < 3; ++q) acc += kTauWeight[q] * problem.external(x, t_n + kTau[q] * dt);
      g += dt * acc;
    }
    // physical weight w/beta times physical basis sqrt(beta) B, squared
    weighted_[s] = grid->rule.weights[s] * g;
  }
}

void PotentialOperator::apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
  const auto grid = standard_grid(descriptor_);
  std::vector<cplx> values(weighted_.size());
  kernels::synthesize<cplx>(grid->basis, std::span<const cplx>(x.data(), x.size()), 1.0, values);
  y.resize(x.size());
  kernels::analyze<cplx>(grid->basis, weighted_, values, 1.0, std::span<cplx>(y.data(), y.size()));
}

Eigen::MatrixXd PotentialOperator::dense() const {
  const auto grid = standard_grid(descriptor_);
  const Eigen::Map<const Eigen::VectorXd> w(weighted_.data(), weighted_.size());
  return grid->basis.transpose() * w.asDiagonal() * grid->basis;
}

Eigen::VectorXcd potential_apply(const BasisDescriptor& descriptor, const SchrodingerProblem& problem, double t_n,
                                 const Eigen::VectorXcd& x) {
  Eigen::VectorXcd y;
  PotentialOperator(descriptor, problem, t_n).apply(x, y);
  return y;
}

ComplexExpansion propagate_step(const ComplexExpansion& psi, const SchrodingerProblem& problem, double t_n) {
  const BasisDescriptor& d = psi.descriptor();
  require_hermite(d);
  const double dt = problem.dt;
  const cplx minus_i(0.0, -1.0);
  Eigen::VectorXcd x = Eigen::Map<const Eigen::VectorXcd>(psi.coefficients().data(), d.size());
  Eigen::VectorXcd out;
  if (problem.has_potential()) {
    const PotentialOperator potential(d, problem, t_n);
    Eigen::VectorXcd tmp;
    out = expm_action(
        [&](const Eigen::VectorXcd& in, Eigen::VectorXcd& y) {
          stiffness_apply(d, in, y);
          potential.apply(in, tmp);
          y = minus_i * (dt * y + tmp);
        },
        x, problem.expm);
  } else {
    out = expm_action(
        [&](const Eigen::VectorXcd& in, Eigen::VectorXcd& y) {
          stiffness_apply(d, in, y);
          y *= minus_i * dt;
        },
        x, problem.expm);
  }
  return ComplexExpansion(d, std::vector<cplx>(out.data(), out.data() + out.size()));
}

SchrodingerRun adapt_schrodinger_run(const SchrodingerProblem& problem, const SchrodingerRunConfig& config) {
  problem.validate();
  config.controllers.validate();
  require_hermite(config.initial_basis);
  ComplexExpansion psi = interpolate<cplx>(config.initial_basis, problem.initial);
  AdaptiveState state = initial_state(psi, config.controllers);

  SchrodingerRun run;
  auto log = [&](int step, double t, TimeSeriesRecord record) {
    record.t = t;
    if (config.error) record.error = config.error(step, t, psi);
    run.records.push_back(std::move(record));
    if (config.observer) config.observer(step, psi);
  };
  TimeSeriesRecord first;
  first.freq = state.f0;
  first.ext = exterior_error_indicator(psi, state.x_right);
  first.n = psi.order();
  first.beta = psi.descriptor().beta;
  first.x_left = psi.descriptor().x_left;
  log(0, 0.0, first);

  const int steps = static_cast<int>(std::llround(problem.final_time / problem.dt));
  for (int n = 0; n < steps; ++n) {
    const double t_n = n * problem.dt;
    const Evolve<cplx> evolve = [&](const ComplexExpansion& u) { return propagate_step(u, problem, t_n); };
    TimeSeriesRecord record = orchestrate_step(psi, state, config.controllers, evolve, config.options);
    log(n + 1, (n + 1) * problem.dt, std::move(record));
  }
  run.final_state = psi;
  return run;
}

cplx free_particle(double x, double t, double zeta, double k) {
  const cplx z(zeta, t);
  const double d = x - 2.0 * k * t;
  return std::exp(cplx(0.0, k * (x - k * t)) - d * d / (4.0 * z)) / std::sqrt(z);
}

}  // namespace spadapt
