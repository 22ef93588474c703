#pragma once

#include "gtau/orthopoly.hpp"
#include "gtau/spectra.hpp"
#include "gtau/tau_operator.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gtau {

/// Ordinary least squares fit of log10(y) against log10(x).
struct SlopeFit {
  std::string label;
  double slope = 0.0;
  double intercept = 0.0;
  double ci_low = 0.0;   // 95% confidence interval for the slope
  double ci_high = 0.0;
  int points = 0;
  double x_min = 0.0;
  double x_max = 0.0;
};

/// Throws std::invalid_argument for fewer than three points or non-positive data.
SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y, std::string label = {});

/// One row per grid point: `grid[i]` holds the parameter tuple (aligned with
/// grid_keys) and `values[i]` the measurements (aligned with value_keys).
struct SweepResult {
  std::string name;
  std::vector<std::string> grid_keys;
  std::vector<std::string> value_keys;
  std::vector<nlohmann::ordered_json> grid;
  std::vector<std::vector<double>> values;
  std::vector<SlopeFit> fits;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  /// Column of value_keys[key] across all rows.
  std::vector<double> column(const std::string& key) const;
};

inline constexpr double kPrecisionThreshold = 1e-8;

/// Per-mode comparison of the integration spectrum against the exact one,
/// paired by ascending |lambda|. Grid key: k. Values: lambda_re, lambda_im,
/// lambda_exact, rel_err. meta: fraction_below_threshold, threshold,
/// max_abs_lambda and the parameters.
SweepResult spectrum_error_report(int m, GegenbauerIndex idx, Parity parity,
                                  BoundaryCondition bc = BoundaryCondition::dirichlet,
                                  double threshold = kPrecisionThreshold);

/// Same comparison for an arbitrary even-mode pencil spectrum.
SweepResult spectrum_error_report(const Spectrum& spectrum, Parity parity, BoundaryCondition bc,
                                  double threshold = kPrecisionThreshold);

struct ConditioningOptions {
  /// Points with m >= tail_start enter the slope fit of differentiation variants.
  int tail_start = 32;
};

/// Relative error of the smallest-|lambda| even eigenvalue against -pi^2/4 for
/// every (variant, m). Grid keys: variant, m. Values: rel_err, lambda.
/// One slope fit per differentiation variant.
SweepResult conditioning_sweep(GegenbauerIndex idx, const std::vector<int>& m_grid,
                               const std::vector<PencilVariant>& variants, ConditioningOptions options = {});

/// Per-gamma counts of non-real eigenvalues (|Im| > tol |lambda|). Grid key:
/// gamma. Values: complex_modes, complex_pairs, max_imag_ratio, max_abs_lambda.
SweepResult gamma_scan(int m, const std::vector<double>& gamma_grid, Parity parity, double tol = 1e-6);

std::vector<int> default_conditioning_grid();

}  // namespace gtau
