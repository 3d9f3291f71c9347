#pragma once

#include <functional>
#include <optional>
#include <string>

#include "spadapt/expansion.hpp"
#include "spadapt/indicators.hpp"

namespace spadapt {

/// Parameters of the three controllers.
struct ControllerConfig {
  // p-adaptivity
  double eta = 1.5;    // initial refine multiplier
  double eta0 = 1.5;   // coarsen threshold f0 / eta0
  double gamma = 1.0;  // eta <- gamma * eta after each refinement
  int n_max = 3;       // max order increment per step
  int n_min = 0;
  std::optional<int> n_abs;  // optional absolute cap on N

  // scaling
  double q = 0.95;
  double nu = 1.0 / 0.95;
  double beta_lo = 0.3;
  double beta_hi = 10.0;

  // moving
  double mu = 1.0002;
  double delta = 0.005;
  double d_max = 0.0;

  bool padapt = true;
  bool scaling = true;
  bool moving = true;

  IndicatorConfig indicator{};

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

/// Controller memory.
struct AdaptiveState {
  double f0 = 0.0;       // last accepted frequency indicator
  double f1 = 0.0;       // scaling reference indicator
  double e0 = 0.0;       // moving reference exterior indicator
  double eta = 1.5;      // current refine multiplier
  double x_right = 0.0;  // exterior boundary x_R (unbounded families)
};

/// What a controller call did.
struct Actions {
  int refined = 0;
  int coarsened = 0;
  int scaled_down = 0;  // beta <- q beta
  int scaled_up = 0;    // beta <- beta / q
  int moved = 0;        // displacement in units of delta

  [[nodiscard]] bool any() const noexcept { return refined || coarsened || scaled_down || scaled_up || moved; }
  /// "refine:2|scale_down:1", or "-" when nothing happened.
  [[nodiscard]] std::string to_string() const;
  Actions& operator+=(const Actions& other);
};

/// Expansion of the same function one order up. Lossless.
template <class Scalar>
Expansion<Scalar> refine(const Expansion<Scalar>& expansion);

/// Interpolant one order down. Throws std::invalid_argument for N = 0.
template <class Scalar>
Expansion<Scalar> coarsen(const Expansion<Scalar>& expansion);

/// Same N, new beta: refit at the new nodes. Unbounded families only.
template <class Scalar>
Expansion<Scalar> rescale(const Expansion<Scalar>& expansion, double beta_new);

/// Same N, x_L + d: refit at the shifted nodes. Unbounded families only.
template <class Scalar>
Expansion<Scalar> translate(const Expansion<Scalar>& expansion, double d);

/// f0 = f1 = F(U), eta = config.eta, x_R = default_x_right and e0 = E(U, x_R)
/// for unbounded families.
template <class Scalar>
AdaptiveState initial_state(const Expansion<Scalar>& expansion, const ControllerConfig& config);

/// One pass of the refine/coarsen controller. At most n_max refinements, at
/// most one coarsening, never below n_min.
template <class Scalar>
Actions p_adapt_step(Expansion<Scalar>& expansion, AdaptiveState& state, const ControllerConfig& config);

/// Per-axis p-adaptivity: both decisions are taken from the input expansion
/// (the other axis frozen), then applied together.
std::pair<Actions, Actions> p_adapt_step_2d(Expansion2D& expansion, AdaptiveState& state_x, AdaptiveState& state_y,
                                            const ControllerConfig& config);

/// Frequency-dependent scaling. Renews f1 on each accepted trial and x_R if
/// beta changed.
template <class Scalar>
Actions scale_step(Expansion<Scalar>& expansion, AdaptiveState& state, const ControllerConfig& config);

/// Rightward moving. When E(U, x_R) > mu e0 the basis is translated by
/// k delta, k = 1, 2, ..., until the exterior indicator drops to mu e0 or
/// k delta reaches d_max. On a move, e0 and x_R are renewed.
template <class Scalar>
Actions move_step(Expansion<Scalar>& expansion, AdaptiveState& state, const ControllerConfig& config);

/// One CSV row. Fields that do not apply to a run are left empty.
struct TimeSeriesRecord {
  double t = 0.0;
  std::optional<double> error;
  std::optional<double> freq;    // F, or F_x in 2D
  std::optional<double> freq_y;  // F_y in 2D
  std::optional<double> ext;
  std::optional<int> n;
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<double> beta;
  std::optional<double> x_left;
  Actions actions{};
};

struct OrchestratorOptions {
  /// Compute E for the record even when moving is off.
  bool log_exterior = true;
};

template <class Scalar>
using Evolve = std::function<Expansion<Scalar>(const Expansion<Scalar>&)>;

/// evolve -> move -> scale -> refine/coarsen. Moving and scaling apply to
/// unbounded families only. After an order change e0, f1 and x_R are renewed
/// (f0 and eta are handled by p_adapt_step). The record's t and error are
/// left for the caller.
template <class Scalar>
TimeSeriesRecord orchestrate_step(Expansion<Scalar>& expansion, AdaptiveState& state, const ControllerConfig& config,
                                  const Evolve<Scalar>& evolve, const OrchestratorOptions& options = {});

}  // namespace spadapt
