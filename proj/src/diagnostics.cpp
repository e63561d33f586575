#include "relosc/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "relosc/analytic.hpp"
#include "relosc/dynamics.hpp"
#include "relosc/hbm.hpp"

namespace relosc {

EnergySeries energy_series(const Solution& solution, double span,
                           int n_samples, std::optional<double> freq_override) {
  if (n_samples < 2 || !(span > 0.0)) {
    throw InvalidRequestError(
        "energy series needs a positive span and at least two samples");
  }
  const Beta beta = solution.beta();
  const double w = freq_override.value_or(solution.energy_freq_ratio());
  EnergySeries series{beta, std::string(solution.label()), w, {}};
  series.samples.reserve(static_cast<size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double t = span * static_cast<double>(i) / (n_samples - 1);
    const Eval e = solution.eval(t);
    const EnergyBreakdown split = energy_at(beta, e.x, e.xdot, w);
    series.samples.push_back({t, e.x, split.kinetic, split.potential,
                              split.total});
  }
  return series;
}

double measurement_span(Beta beta) {
  return 3.5 * 2.0 * std::numbers::pi * period_ratio(beta);
}

std::string canonical_method_label(const std::string& token) {
  if (token == "trial" || token == kLabelTrial) return kLabelTrial;
  if (token == "hbm" || token == kLabelHbm) return kLabelHbm;
  if (token == "ode" || token == "numeric" || token == kLabelNumeric) {
    return kLabelNumeric;
  }
  throw InvalidRequestError("unknown method '" + token +
                            "' (expected trial, hbm or ode)");
}

std::unique_ptr<Solution> make_solution(const std::string& method, Beta beta,
                                        double t_end_hint,
                                        const EvaluateOptions& opts) {
  const std::string label = canonical_method_label(method);
  if (label == kLabelTrial) return std::make_unique<TrialSolution>(beta);
  if (label == kLabelHbm) return std::make_unique<HbmSolution>(beta);
  IntegratorConfig config;
  config.rel_tol = opts.rel_tol;
  config.abs_tol = opts.abs_tol;
  config.t_end = t_end_hint > 0.0 ? t_end_hint : measurement_span(beta);
  return std::make_unique<NumericSolution>(beta, config);
}

MethodReport evaluate_method(const Solution& solution, Beta beta,
                             const EvaluateOptions& opts) {
  MethodReport report;
  report.beta = beta.value();
  report.method = std::string(solution.label());

  const double span = measurement_span(beta);
  const Trajectory traj = sample_trajectory(solution, span, 8001);
  report.period_estimate = measure_period(traj);
  report.amplitude_estimate = measure_amplitude(solution, span, 8001);

  const int n = std::max(opts.min_samples, 2000);
  const double window = std::max(opts.min_periods, 2.0) * report.period_estimate;
  const EnergySeries series =
      energy_series(solution, window, n, opts.freq_override);

  const double reference = mechanical_energy(beta);
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (const EnergySample& s : series.samples) {
    sum += s.total;
    lo = std::min(lo, s.total);
    hi = std::max(hi, s.total);
    dev = std::max(dev, std::abs(s.total - reference));
  }
  report.mean_total = sum / static_cast<double>(series.samples.size());
  report.max_abs_deviation = dev;
  report.peak_to_peak = hi - lo;

  const double t_exact = exact_period(beta);
  const double a_exact = exact_amplitude(beta);
  report.period_error_vs_oracle =
      std::abs(report.period_estimate - t_exact) / t_exact;
  report.amplitude_error_vs_oracle =
      std::abs(report.amplitude_estimate - a_exact) / a_exact;
  return report;
}

std::vector<MethodReport> sweep(const std::vector<Beta>& betas,
                                const std::vector<std::string>& methods,
                                const EvaluateOptions& opts) {
  if (betas.empty() || methods.empty()) {
    throw InvalidRequestError("sweep needs at least one beta and one method");
  }
  // Validate every method token up front so a typo aborts before any work.
  for (const std::string& m : methods) canonical_method_label(m);

  std::vector<MethodReport> reports;
  reports.reserve(betas.size() * methods.size());
  for (const Beta& beta : betas) {
    for (const std::string& method : methods) {
      MethodReport report;
      report.beta = beta.value();
      report.method = canonical_method_label(method);
      try {
        const auto solution = make_solution(method, beta, 0.0, opts);
        report = evaluate_method(*solution, beta, opts);
      } catch (const Error& e) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        report.mean_total = nan;
        report.max_abs_deviation = nan;
        report.peak_to_peak = nan;
        report.period_estimate = nan;
        report.period_error_vs_oracle = nan;
        report.amplitude_estimate = nan;
        report.amplitude_error_vs_oracle = nan;
        report.error = e.what();
      }
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace relosc
