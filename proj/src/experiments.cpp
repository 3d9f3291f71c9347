#include "spadapt/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "spadapt/schrodinger.hpp"
#include "spadapt/solvers.hpp"

namespace spadapt {

namespace {

// Example 6 potentials. The external one integrates a Gaussian from -inf:
// (50/sqrt(pi)) sin(10t) int_{-inf}^x e^{-z^2} dz = 25 sin(10t) erfc(-x).
double well_potential(double x) {
  return -10.0 * (std::exp(-10.0 * (x - 1.0) * (x - 1.0)) + std::exp(-10.0 * (x + 1.0) * (x + 1.0)));
}
double driving_potential(double x, double t) { return 25.0 * std::sin(10.0 * t) * std::erfc(-x); }

SchrodingerProblem schrodinger_problem(const ExperimentConfig& c) {
  SchrodingerProblem p;
  const double zeta = c.zeta, k = c.k;
  p.initial = [zeta, k](double x) { return free_particle(x, 0.0, zeta, k); };
  p.dt = c.dt;
  p.final_time = c.final_time;
  if (c.example == 6) {
    p.potential = well_potential;
    p.external = driving_potential;
  }
  return p;
}

// Largest orders push the spectral radius of (S dt)/m past what 40 Taylor
// terms resolve.
ExpmConfig expm_for(int order) {
  ExpmConfig e;
  if (order > 1000) e.max_terms = 100;
  return e;
}

std::function<double(double, double)> laguerre_target(const ExperimentConfig& c) {
  const double a = c.a, b = c.b;
  if (c.example == 3) return [a, b](double x, double t) { return std::exp(-x / (b * t + a)) * std::cos(x); };
  return [a, b](double x, double t) { return std::exp(-(b * t + a) * x) * std::cos(x); };
}

// y^p for non-integer p is taken as |y|^p, the continuous choice that agrees
// with y^10 at t = 5/2 and with 1 at t = 0 and t = 5.
double example2_target(double x, double y, double t) {
  const double s = 5.0 - 2.0 * std::abs(t - 2.5);
  return std::cos(x * y * s) + std::pow(std::abs(y), 10.0 - 4.0 * std::abs(t - 2.5)) * std::sin(4.0 * x * s);
}

void put(std::ostream& out, const std::optional<double>& v) {
  if (!v) return;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  out << buf;
}

void put(std::ostream& out, const std::optional<int>& v) {
  if (v) out << *v;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (example < 1 || example > 6) throw std::invalid_argument("example must be 1..6");
  controllers.validate();
  if (order < 0 || order > kMaxOrder) throw std::invalid_argument("initial order out of range");
  if (!(beta0 > 0.0)) throw std::invalid_argument("beta0 must be > 0");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  if (!(final_time >= 0.0)) throw std::invalid_argument("T must be >= 0");
  if (example == 3 || example == 4) {
    if (!(a > 0.0) || !(b >= 0.0)) throw std::invalid_argument("need a > 0 and b >= 0");
  }
  if (example >= 5 && !(zeta > 0.0)) throw std::invalid_argument("zeta must be > 0");
  if (example == 6 && (reference_order < 1 || reference_order > kMaxOrder)) {
    throw std::invalid_argument("reference order out of range");
  }
}

ExperimentConfig default_config(int example) {
  ExperimentConfig c;
  c.example = example;
  ControllerConfig& k = c.controllers;
  k.n_min = 0;
  switch (example) {
    case 1:
      c.order = 10;
      c.dt = 1e-3;
      c.final_time = 2.0;
      k.eta = k.eta0 = 1.5;
      k.gamma = 1.1;
      k.n_max = 3;
      break;
    case 2:
      c.order = 36;
      c.dt = 0.01;
      c.final_time = 5.0;
      k.eta = k.eta0 = 1.1;
      k.gamma = 1.1;
      k.n_max = 3;
      break;
    case 3:
    case 4:
      c.order = 50;
      c.beta0 = 4.0;
      c.dt = 1e-3;
      c.final_time = 5.0;
      c.a = example == 3 ? 2.0 : 0.5;
      c.b = example == 3 ? 0.7 : 0.5;
      k.eta = k.eta0 = example == 3 ? 1.2 : 4.0;
      k.gamma = 1.05;
      k.n_max = 3;
      k.q = 0.95;
      k.nu = 1.0 / 0.95;
      k.beta_lo = 0.3;
      k.beta_hi = 10.0;
      k.d_max = 0.0;
      k.moving = false;
      break;
    case 5:
      c.order = 50;
      c.beta0 = 1.3;
      c.dt = 0.005;
      c.final_time = 1.0;
      k.eta = k.eta0 = 1.1;
      k.gamma = 1.05;
      k.n_max = 6;
      k.q = 0.95;
      k.nu = 1.0 / 0.95;
      k.mu = 1.0002;
      k.delta = 0.005;
      k.d_max = 0.1;
      k.beta_lo = 0.3;
      k.beta_hi = 2.0;
      break;
    case 6:
      c.order = 200;
      c.beta0 = 1.3;
      c.dt = 0.01;
      c.final_time = 1.0;
      k.eta = k.eta0 = 1.025;
      k.gamma = 1.0;
      k.n_max = 20;
      k.q = 0.95;
      k.nu = 1.0 / 0.95;
      k.beta_lo = 0.3;
      k.beta_hi = 2.0;
      k.d_max = 0.0;
      k.moving = false;
      break;
    default:
      throw std::invalid_argument("example must be 1..6");
  }
  return c;
}

std::string ExperimentResult::summary() const {
  if (records.empty()) return "no records";
  const TimeSeriesRecord& r = records.back();
  std::ostringstream out;
  out << "t=" << r.t;
  if (r.error) out << " error=" << *r.error;
  if (r.n) out << " N=" << *r.n;
  if (r.nx) out << " Nx=" << *r.nx << " Ny=" << *r.ny;
  if (r.beta) out << " beta=" << *r.beta;
  return out.str();
}

Trajectory schrodinger_reference(const ExperimentConfig& config) {
  SchrodingerProblem problem = schrodinger_problem(config);
  problem.expm = expm_for(config.reference_order);
  SchrodingerRunConfig rc;
  rc.initial_basis = BasisDescriptor::hermite(config.reference_order, config.beta0);
  rc.controllers = config.controllers;
  rc.controllers.padapt = false;
  rc.controllers.scaling = true;
  rc.controllers.moving = false;
  rc.options.log_exterior = false;
  Trajectory trajectory;
  rc.observer = [&](int, const ComplexExpansion& u) { trajectory.push_back(u); };
  adapt_schrodinger_run(problem, rc);
  return trajectory;
}

ExperimentResult run(const ExperimentConfig& config, const Trajectory* reference) {
  config.validate();
  ExperimentResult result;
  TrackConfig track;
  track.controllers = config.controllers;
  EvolutionProblem evolution{config.dt, config.final_time};

  switch (config.example) {
    case 1:
      track.options.log_exterior = false;
      result.records = solve_advection(BasisDescriptor::chebyshev(config.order), evolution, track);
      break;
    case 2:
      result.records = track_function_2d(example2_target, BasisDescriptor::legendre(config.order),
                                         BasisDescriptor::legendre(config.order), evolution, track);
      break;
    case 3:
    case 4:
      track.options.log_exterior = config.controllers.moving && config.controllers.d_max > 0.0;
      result.records = track_function(laguerre_target(config), BasisDescriptor::laguerre(config.order, 0.0, config.beta0),
                                      evolution, track);
      break;
    case 5:
    case 6: {
      SchrodingerProblem problem = schrodinger_problem(config);
      SchrodingerRunConfig rc;
      rc.initial_basis = BasisDescriptor::hermite(config.order, config.beta0);
      rc.controllers = config.controllers;
      Trajectory own;
      if (config.example == 5) {
        const double zeta = config.zeta, k = config.k;
        rc.error = [zeta, k](int, double t, const ComplexExpansion& u) {
          return relative_error<cplx>(u, [=](double x) { return free_particle(x, t, zeta, k); });
        };
      } else {
        // the order may not pass the reference's
        const int cap = config.reference_order;
        rc.controllers.n_abs = rc.controllers.n_abs ? std::min(*rc.controllers.n_abs, cap) : cap;
        problem.expm = expm_for(cap);
        rc.options.log_exterior = false;
        if (!reference) {
          own = schrodinger_reference(config);
          reference = &own;
        }
        rc.error = [reference](int step, double, const ComplexExpansion& u) {
          const ComplexExpansion& r = reference->at(static_cast<std::size_t>(step));
          return relative_error<cplx>(u, [&r](double x) { return r(x); });
        };
      }
      result.records = adapt_schrodinger_run(problem, rc).records;
      break;
    }
  }

  if (!config.out.empty()) {
    std::ofstream file(config.out);
    if (!file) throw std::runtime_error("cannot open " + config.out);
    write_csv(file, result.records);
  }
  return result;
}

void write_csv(std::ostream& out, const std::vector<TimeSeriesRecord>& records) {
  out << kCsvHeader << '\n';
  for (const TimeSeriesRecord& r : records) {
    put(out, std::optional<double>(r.t));
    out << ',';
    put(out, r.error);
    out << ',';
    put(out, r.freq);
    out << ',';
    put(out, r.nx ? r.freq_y : r.ext);
    out << ',';
    put(out, r.n);
    out << ',';
    put(out, r.nx);
    out << ',';
    put(out, r.ny);
    out << ',';
    put(out, r.beta);
    out << ',';
    put(out, r.x_left);
    out << ',' << r.actions.to_string() << '\n';
  }
}

SweepGrid table_grid(int table) {
  SweepGrid grid;
  grid.etas = {1.2, 1.5, 2.0, 4.0};
  switch (table) {
    case 2:
    case 3:
      for (double g : {1.05, 1.1, 1.2, 1.5}) {
        std::ostringstream label;
        label << "gamma=" << g;
        grid.rows.push_back({label.str(), g, table == 2});
      }
      break;
    case 4:
      grid.rows.push_back({"scaled", std::nullopt, true});
      grid.rows.push_back({"unscaled", std::nullopt, false});
      break;
    default:
      throw std::invalid_argument("table must be 2, 3 or 4");
  }
  return grid;
}

ExperimentConfig table_config(int table) {
  if (table < 2 || table > 4) throw std::invalid_argument("table must be 2, 3 or 4");
  return default_config(table == 4 ? 4 : 3);
}

std::vector<SweepCell> sweep(const ExperimentConfig& base, const SweepGrid& grid) {
  if (grid.etas.empty() || grid.rows.empty()) throw std::invalid_argument("sweep: empty grid");
  const long cols = static_cast<long>(grid.etas.size());
  const long total = cols * static_cast<long>(grid.rows.size());
  std::vector<SweepCell> cells(total);
#pragma omp parallel for schedule(dynamic, 1)
  for (long idx = 0; idx < total; ++idx) {
    const SweepRow& row = grid.rows[idx / cols];
    SweepCell& cell = cells[idx];
    cell.row = row.label;
    cell.eta = grid.etas[idx % cols];
    try {
      ExperimentConfig c = base;
      c.out.clear();
      c.controllers.eta = c.controllers.eta0 = cell.eta;
      if (row.gamma) c.controllers.gamma = *row.gamma;
      if (row.scaling) c.controllers.scaling = *row.scaling;
      const ExperimentResult r = run(c);
      const TimeSeriesRecord& last = r.final_record();
      cell.error = last.error.value_or(NAN);
      cell.beta = last.beta.value_or(NAN);
      cell.order = last.n.value_or(-1);
      cell.ok = true;
    } catch (const std::exception& e) {
      cell.failure = e.what();
      for (char& ch : cell.failure) {
        if (ch == ',' || ch == '\n') ch = ';';
      }
    }
  }
  return cells;
}

void write_sweep(std::ostream& out, const SweepGrid& grid, const std::vector<SweepCell>& cells) {
  char buf[64];
  out << "row\\eta";
  for (double e : grid.etas) {
    std::snprintf(buf, sizeof buf, "%g", e);
    out << ',' << buf;
  }
  out << '\n';
  std::size_t idx = 0;
  for (const SweepRow& row : grid.rows) {
    out << row.label;
    for (std::size_t j = 0; j < grid.etas.size(); ++j, ++idx) {
      const SweepCell& c = cells.at(idx);
      if (c.ok) {
        std::snprintf(buf, sizeof buf, "%.4e;%.4g;%d", c.error, c.beta, c.order);
        out << ',' << buf;
      } else {
        out << ",FAILED: " << c.failure;
      }
    }
    out << '\n';
  }
}

}  // namespace spadapt
