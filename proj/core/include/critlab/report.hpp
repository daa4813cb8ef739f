#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "critlab/ball.hpp"
#include "critlab/schwarzschild.hpp"
#include "critlab/solution.hpp"

namespace critlab {

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(const std::string& s);

/// Run-wide configuration. Precedence: command-line flags over config file
/// over defaults; the config file path itself may come from CRITLAB_CONFIG.
struct RunConfig {
  double tol_closed_form = 1e-9;
  double tol_bvp = 1e-6;
  std::size_t grid_size = 2048;
  double f_floor_fraction = 0.02;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::json;
  /// Derivative-based identity checks run on a refined resample of the
  /// solution (factor identity_refine and twice that, for the measured
  /// convergence order).
  std::size_t identity_refine = 4;
  std::size_t workers = 1;
  double inner_radius_window = 0.25;

  void validate() const;
};

/// Parse simple "key = value" lines; '#' starts a comment.
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// One serialized verification row (identity checks and estimates share this
/// shape; estimate rows carry the optional fields).
struct SuiteRow {
  std::string name;
  std::string paper_anchor;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tol = 0.0;
  CheckStatus status = CheckStatus::informational;
  std::optional<double> margin;
  std::optional<bool> equality;
  std::optional<bool> hypothesis_ok;
};

struct SuiteReport {
  RunConfig config;
  SolutionInfo solution;
  double f_max = 0.0;
  std::string max_locus_kind;
  std::vector<BoundaryComponent> boundary;
  std::vector<SuiteRow> checks;
  bool overall_pass = false;
};

using SolutionSpec = std::variant<BallSpec, SchwarzschildSpec>;

/// Construct the requested solution and run the complete verification suite
/// (fundamental system, identities, estimates, level-set functional).
SuiteReport run_suite(const SolutionSpec& spec, const RunConfig& config);

std::string serialize(const SuiteReport& report, OutputFormat format);

/// Scan result: one summary row per parameter value.
struct ScanRow {
  double parameter = 0.0;
  bool constructed = false;
  std::string error;  // construction error text when !constructed
  bool overall_pass = false;
  double f_max = 0.0;
  double min_margin = 0.0;  // mean-curvature margin
  std::size_t failed_checks = 0;
};

struct ScanReport {
  RunConfig config;
  std::string parameter_name;
  std::vector<ScanRow> rows;
  bool overall_pass = false;
  bool any_construction_error = false;
};

/// Evaluate a family of suites over a parameter range, concurrently up to
/// config.workers, with deterministic row order.
ScanReport run_scan(const std::function<SolutionSpec(double)>& make_spec,
                    const std::vector<double>& parameters,
                    const std::string& parameter_name, const RunConfig& config);

std::string serialize(const ScanReport& report, OutputFormat format);

/// 17-significant-digit decimal rendering used by the CSV writers.
std::string csv_number(double v);

}  // namespace critlab
