#include "spadapt/adapt.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spadapt {

void ControllerConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("controller config: ") + what);
  };
  require(eta > 1.0, "eta must be > 1");
  require(eta0 > 1.0, "eta0 must be > 1");
  require(gamma >= 1.0, "gamma must be >= 1");
  require(n_max >= 0, "n_max must be >= 0");
  require(n_min >= 0, "n_min must be >= 0");
  require(!n_abs || *n_abs >= n_min, "n_abs must be >= n_min");
  require(q > 0.0 && q < 1.0, "q must lie in (0, 1)");
  require(nu > 1.0, "nu must be > 1");
  require(beta_lo > 0.0 && beta_lo < beta_hi, "need 0 < beta_lo < beta_hi");
  require(mu > 1.0, "mu must be > 1");
  require(delta > 0.0, "delta must be > 0");
  require(d_max >= 0.0, "d_max must be >= 0");
}

std::string Actions::to_string() const {
  std::ostringstream out;
  const char* sep = "";
  auto put = [&](const char* name, int count) {
    if (count == 0) return;
    out << sep << name << ':' << count;
    sep = "|";
  };
  put("move", moved);
  put("scale_down", scaled_down);
  put("scale_up", scaled_up);
  put("refine", refined);
  put("coarsen", coarsened);
  const std::string s = out.str();
  return s.empty() ? "-" : s;
}

Actions& Actions::operator+=(const Actions& other) {
  refined += other.refined;
  coarsened += other.coarsened;
  scaled_down += other.scaled_down;
  scaled_up += other.scaled_up;
  moved += other.moved;
  return *this;
}

template <class Scalar>
Expansion<Scalar> refine(const Expansion<Scalar>& expansion) {
  return resample(expansion, expansion.descriptor().with_order(expansion.order() + 1));
}

template <class Scalar>
Expansion<Scalar> coarsen(const Expansion<Scalar>& expansion) {
  if (expansion.order() < 1) throw std::invalid_argument("coarsen: order 0 cannot be reduced");
  return resample(expansion, expansion.descriptor().with_order(expansion.order() - 1));
}

template <class Scalar>
Expansion<Scalar> rescale(const Expansion<Scalar>& expansion, double beta_new) {
  if (!expansion.descriptor().unbounded()) throw std::invalid_argument("rescale: bounded family");
  if (!(beta_new > 0.0)) throw std::invalid_argument("rescale: beta must be positive");
  if (beta_new == expansion.descriptor().beta) return expansion;
  return resample(expansion, expansion.descriptor().with_beta(beta_new));
}

template <class Scalar>
Expansion<Scalar> translate(const Expansion<Scalar>& expansion, double d) {
  if (!expansion.descriptor().unbounded()) throw std::invalid_argument("translate: bounded family");
  if (d == 0.0) return expansion;
  return resample(expansion, expansion.descriptor().with_shift(expansion.descriptor().x_left + d));
}

template <class Scalar>
AdaptiveState initial_state(const Expansion<Scalar>& expansion, const ControllerConfig& config) {
  AdaptiveState state;
  state.f0 = state.f1 = frequency_indicator(expansion, config.indicator);
  state.eta = config.eta;
  if (expansion.descriptor().unbounded()) {
    state.x_right = default_x_right(expansion.descriptor());
    state.e0 = exterior_error_indicator(expansion, state.x_right);
  }
  return state;
}

template <class Scalar>
Actions p_adapt_step(Expansion<Scalar>& expansion, AdaptiveState& state, const ControllerConfig& config) {
  Actions actions;
  double f = frequency_indicator(expansion, config.indicator);
  if (f > state.eta * state.f0) {
    int l = 0;
    while (f > state.eta * state.f0 && l < config.n_max && (!config.n_abs || expansion.order() < *config.n_abs)) {
      ++l;
      expansion = refine(expansion);
      f = frequency_indicator(expansion, config.indicator);
    }
    actions.refined = l;
    state.f0 = f;
    state.eta *= config.gamma;
  } else if (f < state.f0 / config.eta0 && expansion.order() > config.n_min) {
    Expansion<Scalar> trial = coarsen(expansion);
    const double ft = frequency_indicator(trial, config.indicator);
    if (ft < state.f0) {
      expansion = std::move(trial);
      state.f0 = ft;
      actions.coarsened = 1;
    }
  }
  return actions;
}

namespace {

// New order along one axis, decided with the other axis frozen.
int decide_axis(const Expansion2D& input, Axis axis, AdaptiveState& state, const ControllerConfig& config,
                Actions& actions) {
  const BasisDescriptor& dx = input.descriptor_x();
  const BasisDescriptor& dy = input.descriptor_y();
  const BasisDescriptor& self = axis == Axis::x ? dx : dy;
  auto at_order = [&](int n) {
    return axis == Axis::x ? resample_2d(input, dx.with_order(n), dy) : resample_2d(input, dx, dy.with_order(n));
  };
  int n = self.order;
  double f = frequency_indicator_axis(input, axis, config.indicator);
  if (f > state.eta * state.f0) {
    int l = 0;
    while (f > state.eta * state.f0 && l < config.n_max && (!config.n_abs || n < *config.n_abs)) {
      ++l;
      ++n;
      f = frequency_indicator_axis(at_order(n), axis, config.indicator);
    }
    actions.refined = l;
    state.f0 = f;
    state.eta *= config.gamma;
  } else if (f < state.f0 / config.eta0 && n > config.n_min) {
    const double ft = frequency_indicator_axis(at_order(n - 1), axis, config.indicator);
    if (ft < state.f0) {
      --n;
      state.f0 = ft;
      actions.coarsened = 1;
    }
  }
  return n;
}

}  // namespace

std::pair<Actions, Actions> p_adapt_step_2d(Expansion2D& expansion, AdaptiveState& state_x, AdaptiveState& state_y,
                                            const ControllerConfig& config) {
  std::pair<Actions, Actions> actions;
  const int nx = decide_axis(expansion, Axis::x, state_x, config, actions.first);
  const int ny = decide_axis(expansion, Axis::y, state_y, config, actions.second);
  if (nx != expansion.descriptor_x().order || ny != expansion.descriptor_y().order) {
    expansion = resample_2d(expansion, expansion.descriptor_x().with_order(nx), expansion.descriptor_y().with_order(ny));
  }
  return actions;
}

template <class Scalar>
Actions scale_step(Expansion<Scalar>& expansion, AdaptiveState& state, const ControllerConfig& config) {
  if (!expansion.descriptor().unbounded()) throw std::invalid_argument("scale_step: bounded family");
  Actions actions;
  double f = frequency_indicator(expansion, config.indicator);
  const double beta = expansion.descriptor().beta;
  auto sweep = [&](double factor, bool down) {
    double beta_trial = expansion.descriptor().beta * factor;
    Expansion<Scalar> trial = rescale(expansion, beta_trial);
    double ft = frequency_indicator(trial, config.indicator);
    while (ft <= f && (down ? beta_trial >= config.beta_lo : beta_trial <= config.beta_hi)) {
      expansion = std::move(trial);
      state.f1 = ft;
      f = ft;
      (down ? actions.scaled_down : actions.scaled_up) += 1;
      beta_trial = expansion.descriptor().beta * factor;
      trial = rescale(expansion, beta_trial);
      ft = frequency_indicator(trial, config.indicator);
    }
  };
  if (f > config.nu * state.f1) {
    sweep(config.q, true);
  } else if (f < state.f1) {
    sweep(1.0 / config.q, false);
  }
  if (expansion.descriptor().beta != beta) state.x_right = default_x_right(expansion.descriptor());
  return actions;
}

template <class Scalar>
Actions move_step(Expansion<Scalar>& expansion, AdaptiveState& state, const ControllerConfig& config) {
  if (!expansion.descriptor().unbounded()) throw std::invalid_argument("move_step: bounded family");
  Actions actions;
  const int k_max = static_cast<int>(std::floor(config.d_max / config.delta + 1e-9));
  if (k_max == 0) return actions;
  const double threshold = config.mu * state.e0;
  if (exterior_error_indicator(expansion, state.x_right) <= threshold) return actions;
  // every trial translates the original expansion, so rounding does not
  // accumulate over the k increments
  const Expansion<Scalar> original = expansion;
  double e = 0.0;
  int k = 0;
  do {
    ++k;
    expansion = translate(original, k * config.delta);
    e = exterior_error_indicator(expansion, state.x_right + k * config.delta);
  } while (e > threshold && k < k_max);
  actions.moved = k;
  state.x_right = default_x_right(expansion.descriptor());
  state.e0 = exterior_error_indicator(expansion, state.x_right);
  return actions;
}

template <class Scalar>
TimeSeriesRecord orchestrate_step(Expansion<Scalar>& expansion, AdaptiveState& state, const ControllerConfig& config,
                                  const Evolve<Scalar>& evolve, const OrchestratorOptions& options) {
  expansion = evolve(expansion);
  const bool unbounded = expansion.descriptor().unbounded();
  TimeSeriesRecord record;
  if (unbounded && config.moving && config.d_max > 0.0) record.actions += move_step(expansion, state, config);
  if (unbounded && config.scaling) record.actions += scale_step(expansion, state, config);
  if (config.padapt) {
    const int before = expansion.order();
    record.actions += p_adapt_step(expansion, state, config);
    if (expansion.order() != before) {
      state.f1 = state.f0;
      if (unbounded) {
        state.x_right = default_x_right(expansion.descriptor());
        state.e0 = exterior_error_indicator(expansion, state.x_right);
      }
    }
  }
  record.freq = frequency_indicator(expansion, config.indicator);
  if (unbounded && (options.log_exterior || (config.moving && config.d_max > 0.0))) {
    record.ext = exterior_error_indicator(expansion, state.x_right);
  }
  record.n = expansion.order();
  if (unbounded) {
    record.beta = expansion.descriptor().beta;
    record.x_left = expansion.descriptor().x_left;
  }
  return record;
}

#define SPADAPT_INSTANTIATE(S)                                                                       \
  template Expansion<S> refine<S>(const Expansion<S>&);                                              \
  template Expansion<S> coarsen<S>(const Expansion<S>&);                                             \
  template Expansion<S> rescale<S>(const Expansion<S>&, double);                                     \
  template Expansion<S> translate<S>(const Expansion<S>&, double);                                   \
  template AdaptiveState initial_state<S>(const Expansion<S>&, const ControllerConfig&);             \
  template Actions p_adapt_step<S>(Expansion<S>&, AdaptiveState&, const ControllerConfig&);          \
  template Actions scale_step<S>(Expansion<S>&, AdaptiveState&, const ControllerConfig&);            \
  template Actions move_step<S>(Expansion<S>&, AdaptiveState&, const ControllerConfig&);             \
  template TimeSeriesRecord orchestrate_step<S>(Expansion<S>&, AdaptiveState&, const ControllerConfig&, \
                                                const Evolve<S>&, const OrchestratorOptions&);

SPADAPT_INSTANTIATE(double)
SPADAPT_INSTANTIATE(cplx)

#undef SPADAPT_INSTANTIATE

}  // namespace spadapt
