#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relosc/core.hpp"
#include "relosc/oracle.hpp"

namespace relosc {

struct EnergySample {
  double t = 0.0;
  double x = 0.0;
  double kinetic = 0.0;
  double potential = 0.0;
  double total = 0.0;
};

/// Kinetic, potential and total energy sampled uniformly along one solution.
struct EnergySeries {
  Beta beta;
  std::string label;
  double freq_ratio_used = 0.0;
  std::vector<EnergySample> samples;
};

/// Samples the energy split over [0, span]. The potential uses the
/// producer's own frequency ratio unless freq_override supplies another one.
/// Propagates SuperluminalError if the handle ever yields |xdot| >= 1.
EnergySeries energy_series(const Solution& solution, double span,
                           int n_samples,
                           std::optional<double> freq_override = std::nullopt);

/// Accuracy record for one (method, beta) pair. Energy flatness is measured
/// against the mechanical energy; period and amplitude are measured from the
/// trajectory itself and compared against the quadrature period and the
/// first-integral amplitude sqrt(2 (gamma0 - 1)).
struct MethodReport {
  double beta = 0.0;
  std::string method;
  double mean_total = 0.0;
  double max_abs_deviation = 0.0;
  double peak_to_peak = 0.0;
  double period_estimate = 0.0;
  double period_error_vs_oracle = 0.0;
  double amplitude_estimate = 0.0;
  double amplitude_error_vs_oracle = 0.0;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

struct EvaluateOptions {
  int min_samples = 2000;
  double min_periods = 2.0;
  std::optional<double> freq_override;  // frequency ratio for the potential
  double rel_tol = 1e-12;               // numeric-oracle handle tolerances
  double abs_tol = 1e-12;
};

/// Time span used to measure periods and amplitudes: several single-harmonic
/// periods, which bounds the true period from above across the whole beta
/// range.
double measurement_span(Beta beta);

/// Canonical method label for a CLI token (trial | hbm | ode and synonyms).
std::string canonical_method_label(const std::string& token);

/// Builds the solution handle for a method label. Numeric handles integrate
/// to t_end_hint (defaults to measurement_span).
std::unique_ptr<Solution> make_solution(const std::string& method, Beta beta,
                                        double t_end_hint = 0.0,
                                        const EvaluateOptions& opts = {});

MethodReport evaluate_method(const Solution& solution, Beta beta,
                             const EvaluateOptions& opts = {});

/// Cartesian product of evaluate_method over betas and methods, beta-major.
/// A failure in one cell is recorded in that report's error field and the
/// sweep continues. Deterministic: identical inputs give identical reports.
std::vector<MethodReport> sweep(const std::vector<Beta>& betas,
                                const std::vector<std::string>& methods,
                                const EvaluateOptions& opts = {});

}  // namespace relosc
