#pragma once

#include <string>
#include <vector>

namespace ultragrowth {

/// Log-spaced evaluation grid for weight functions on [t_min, t_max].
struct GridSpec {
  double t_min = 1e-2;
  double t_max = 1e6;
  int points_per_decade = 512;

  /// Samples t_min * 10^(i / points_per_decade) up to and including t_max.
  std::vector<double> log_grid() const;
  /// Same grid restricted to [lo, hi] (clipped to the spec range).
  std::vector<double> log_grid(double lo, double hi) const;
  /// Spacing of the grid in log t.
  double log_step() const;
};

struct Tolerances {
  double log_tol = 1e-9;
  double roundtrip_tol = 1e-6;
  double stability = 0.05;
  /// Slope margin around -1 for the integral-test tail classification.
  double nqa_delta = 0.1;
};

enum class OutputFormat { json, tsv };

struct RunConfig {
  int truncation = 4096;
  GridSpec grid;
  std::vector<double> lambdas = {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  Tolerances tol;
  OutputFormat format = OutputFormat::json;

  /// Throws std::invalid_argument on nonpositive tolerances or empty grids.
  void validate() const;

  /// `lambdas` plus every 2*lambda needed by the splitting property checks,
  /// sorted and deduplicated.
  std::vector<double> lambdas_with_doubles() const;
};

/// Reads the JSON file named by ULTRAGROWTH_CONFIG when set; defaults
/// otherwise. Unknown keys are rejected.
RunConfig load_run_config();
RunConfig parse_run_config(const std::string& json_text);

}  // namespace ultragrowth
