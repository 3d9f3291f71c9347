// Command-line front end: `spadapt run` for one example, `spadapt sweep` for
// the eta/gamma tables. Any option may also come from a key=value file given
// with --config; flags on the command line win.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "spadapt/experiments.hpp"

namespace {

struct Overrides {
  std::optional<double> eta, eta0, gamma, q, nu, mu, dmax, delta, beta0, dt, T;
  std::optional<int> nmax, nmin, nabs, order, reference_order;
  bool no_scaling = false, no_moving = false, no_padapt = false, no_adapt = false;
  std::string out;
  std::string config;
};

void add_controller_flags(CLI::App& app, Overrides& o) {
  app.add_option("--eta", o.eta, "Initial refine multiplier eta (> 1); also sets eta0 unless given");
  app.add_option("--eta0", o.eta0, "Coarsen threshold eta0 (> 1); also sets eta unless given");
  app.add_option("--gamma", o.gamma, "Refine-threshold growth gamma (>= 1)");
  app.add_option("--q", o.q, "Scaling ratio q in (0,1)");
  app.add_option("--nu", o.nu, "Scaling threshold nu (> 1)");
  app.add_option("--mu", o.mu, "Moving threshold mu (> 1)");
  app.add_option("--dmax", o.dmax, "Maximal displacement per step");
  app.add_option("--delta", o.delta, "Minimal displacement");
  app.add_option("--nmax", o.nmax, "Maximal order increment per step");
  app.add_option("--nmin", o.nmin, "Minimal order");
  app.add_option("--nabs", o.nabs, "Absolute order cap");
  app.add_option("--order", o.order, "Initial order N");
  app.add_option("--beta0", o.beta0, "Initial scaling factor");
  app.add_option("--dt", o.dt, "Time step");
  app.add_option("--T", o.T, "Final time");
  app.add_option("--reference-order", o.reference_order, "Example 6 reference order (default 600)");
  app.add_flag("--no-scaling", o.no_scaling, "Disable scaling");
  app.add_flag("--no-moving", o.no_moving, "Disable moving");
  app.add_flag("--no-padapt", o.no_padapt, "Disable refine/coarsen");
  app.add_flag("--no-adapt", o.no_adapt, "Disable all controllers");
  app.add_option("--out", o.out, "Output file");
  app.add_option("--config", o.config, "key=value configuration file; command-line flags win")->check(CLI::ExistingFile);
}

void apply(const Overrides& o, spadapt::ExperimentConfig& c) {
  auto& k = c.controllers;
  if (o.eta) k.eta = *o.eta;
  if (o.eta0) k.eta0 = *o.eta0;
  if (o.eta && !o.eta0) k.eta0 = *o.eta;
  if (o.eta0 && !o.eta) k.eta = *o.eta0;
  if (o.gamma) k.gamma = *o.gamma;
  if (o.q) {
    k.q = *o.q;
    if (!o.nu) k.nu = 1.0 / *o.q;
  }
  if (o.nu) k.nu = *o.nu;
  if (o.mu) k.mu = *o.mu;
  if (o.dmax) k.d_max = *o.dmax;
  if (o.delta) k.delta = *o.delta;
  if (o.nmax) k.n_max = *o.nmax;
  if (o.nmin) k.n_min = *o.nmin;
  if (o.nabs) k.n_abs = *o.nabs;
  if (o.order) c.order = *o.order;
  if (o.beta0) c.beta0 = *o.beta0;
  if (o.dt) c.dt = *o.dt;
  if (o.T) c.final_time = *o.T;
  if (o.reference_order) c.reference_order = *o.reference_order;
  if (o.no_scaling || o.no_adapt) k.scaling = false;
  if (o.no_moving || o.no_adapt) k.moving = false;
  if (o.no_padapt || o.no_adapt) k.padapt = false;
  c.out = o.out;
}

// CLI11 only reads config files for the top-level app, so subcommand files
// are applied by hand. Keys already given on the command line are skipped.
void load_config(CLI::App& sub, const std::string& path) {
  for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(path)) {
    CLI::Option* opt = sub.get_option_no_throw("--" + item.name);
    if (opt == nullptr) throw CLI::ConfigError::Extras(item.fullname());
    if (opt->count() > 0) continue;
    opt->add_result(item.inputs);
    opt->run_callback();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive spectral methods: examples and parameter sweeps"};
  app.require_subcommand(1);

  int example = 1;
  Overrides run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one example and write its time series as CSV");
  run_cmd->add_option("--example", example, "Example number 1..6")->check(CLI::Range(1, 6));
  add_controller_flags(*run_cmd, run_flags);

  int table = 2;
  std::optional<int> sweep_example;
  std::vector<double> etas, gammas;
  Overrides sweep_flags;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run an eta/gamma grid and write a table");
  sweep_cmd->add_option("--table", table, "Preset grid: 2, 3 or 4")->check(CLI::IsMember({2, 3, 4}));
  sweep_cmd->add_option("--example", sweep_example, "Base example for a custom grid (3 or 4)");
  sweep_cmd->add_option("--etas", etas, "Custom eta columns")->delimiter(',');
  sweep_cmd->add_option("--gammas", gammas, "Custom gamma rows")->delimiter(',');
  add_controller_flags(*sweep_cmd, sweep_flags);

  CLI11_PARSE(app, argc, argv);

  CLI::App* active = run_cmd->parsed() ? run_cmd : sweep_cmd;
  const std::string& config_file = run_cmd->parsed() ? run_flags.config : sweep_flags.config;
  if (!config_file.empty()) {
    try {
      load_config(*active, config_file);
    } catch (const CLI::Error& e) {
      return app.exit(e);
    }
  }

  try {
    if (run_cmd->parsed()) {
      spadapt::ExperimentConfig config = spadapt::default_config(example);
      apply(run_flags, config);
      const spadapt::ExperimentResult result = spadapt::run(config);
      if (config.out.empty()) spadapt::write_csv(std::cout, result.records);
      std::cerr << "example " << example << ": " << result.summary() << '\n';
      return 0;
    }
    spadapt::ExperimentConfig config =
        sweep_example ? spadapt::default_config(*sweep_example) : spadapt::table_config(table);
    apply(sweep_flags, config);
    const std::string out = config.out;
    spadapt::SweepGrid grid = spadapt::table_grid(table);
    if (!etas.empty()) grid.etas = etas;
    if (!gammas.empty()) {
      grid.rows.clear();
      for (double g : gammas) grid.rows.push_back({"gamma=" + std::to_string(g), g, std::nullopt});
    }
    const auto cells = spadapt::sweep(config, grid);
    if (out.empty()) {
      spadapt::write_sweep(std::cout, grid, cells);
    } else {
      std::ofstream file(out);
      if (!file) throw std::runtime_error("cannot open " + out);
      spadapt::write_sweep(file, grid, cells);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
