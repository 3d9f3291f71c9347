#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spadapt/adapt.hpp"

namespace spadapt {

/// Everything needed to reproduce one of Examples 1-6. Start from
/// default_config(example) and override.
struct ExperimentConfig {
  int example = 1;
  ControllerConfig controllers{};
  int order = 10;        // initial N (N_x = N_y in Example 2)
  double beta0 = 1.0;    // initial scaling factor (unbounded examples)
  double dt = 1e-3;
  double final_time = 2.0;

  // Examples 3 and 4: u = exp(-x / (b t + a)) cos x, resp. exp(-(b t + a) x) cos x
  double a = 2.0;
  double b = 0.7;
  // Examples 5 and 6 initial wave packet
  double zeta = 0.3;
  double k = 1.0;
  // Example 6 reference: fixed order, scaling only
  int reference_order = 600;

  std::string out;  // CSV path; empty means no file

  /// Throws std::invalid_argument.
  void validate() const;
};

ExperimentConfig default_config(int example);

struct ExperimentResult {
  std::vector<TimeSeriesRecord> records;
  [[nodiscard]] const TimeSeriesRecord& final_record() const { return records.back(); }
  /// "t=5 error=1.2e-05 N=67 beta=1.434"
  [[nodiscard]] std::string summary() const;
};

using Trajectory = std::vector<ComplexExpansion>;

/// Example 6 reference: fixed order `reference_order`, scaling only. One
/// entry per step, step 0 included.
Trajectory schrodinger_reference(const ExperimentConfig& config);

/// Runs the configured example. For Example 6 the reference trajectory is
/// computed unless one is passed in.
ExperimentResult run(const ExperimentConfig& config, const Trajectory* reference = nullptr);

inline constexpr const char* kCsvHeader = "t,error,freq,ext,N,Nx,Ny,beta,xL,actions";

/// Header plus one row per record, 17 significant digits, empty fields for
/// quantities that do not apply. In 2D runs freq holds F_x and ext holds F_y.
void write_csv(std::ostream& out, const std::vector<TimeSeriesRecord>& records);

/// One row of a sweep table: label plus the overrides it applies.
struct SweepRow {
  std::string label;
  std::optional<double> gamma;
  std::optional<bool> scaling;
};

/// Columns are eta values; each cell sets eta = eta0 to the column value.
struct SweepGrid {
  std::vector<double> etas;
  std::vector<SweepRow> rows;
};

/// Tables 2 (Example 3, scaling), 3 (Example 3, no scaling) and 4
/// (Example 4, scaled vs unscaled). Throws std::invalid_argument otherwise.
SweepGrid table_grid(int table);
ExperimentConfig table_config(int table);

struct SweepCell {
  std::string row;
  double eta = 0.0;
  bool ok = false;
  std::string failure;
  double error = 0.0;
  double beta = 0.0;
  int order = 0;
};

/// Runs every cell (in parallel when OpenMP is available); a failing cell is
/// recorded and the rest continue. Cells are returned row-major.
std::vector<SweepCell> sweep(const ExperimentConfig& base, const SweepGrid& grid);

/// Table layout: a header of eta values, one line per row, cells
/// "error;beta;N" (or "FAILED: reason").
void write_sweep(std::ostream& out, const SweepGrid& grid, const std::vector<SweepCell>& cells);

}  // namespace spadapt
