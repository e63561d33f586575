#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>

#include "relosc/analytic.hpp"
#include "relosc/diagnostics.hpp"
#include "relosc/dynamics.hpp"
#include "relosc/hbm.hpp"

using namespace relosc;

namespace {

double peak_to_peak_hbm(double beta_value, int samples) {
  const Beta beta{beta_value};
  const HbmSolution hbm{beta};
  const EnergySeries series =
      energy_series(hbm, 2.0 * hbm.period(), samples);
  double lo = series.samples.front().total;
  double hi = lo;
  for (const EnergySample& s : series.samples) {
    lo = std::min(lo, s.total);
    hi = std::max(hi, s.total);
  }
  return hi - lo;
}

}  // namespace

TEST_CASE("trial-solution energy total is flat to 1e-12") {
  for (double b : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const Beta beta{b};
    const TrialSolution trial{beta};
    const EnergySeries series =
        energy_series(trial, 2.0 * trial.period(), 2000);
    const double e0 = mechanical_energy(beta);
    for (const EnergySample& s : series.samples) {
      CHECK(std::abs(s.total - e0) <= 1e-12);
      CHECK(s.total == s.kinetic + s.potential);
      CHECK(s.kinetic >= 0.0);
    }
  }
}

TEST_CASE("harmonic-balance energy degrades with beta") {
  const double pp005 = peak_to_peak_hbm(0.05, 2000);
  const double pp01 = peak_to_peak_hbm(0.1, 2000);
  const double pp04 = peak_to_peak_hbm(0.4, 2000);
  const double pp08 = peak_to_peak_hbm(0.8, 2000);
  CHECK(pp005 <= 1e-3);
  CHECK(pp08 > 1e-3);
  CHECK(pp01 < pp04);
  CHECK(pp04 < pp08);
}

TEST_CASE("energy metrics are resolution-independent at 2000 samples") {
  for (double b : {0.4, 0.8}) {
    const double coarse = peak_to_peak_hbm(b, 2000);
    const double fine = peak_to_peak_hbm(b, 4000);
    CHECK(std::abs(fine - coarse) / fine < 0.01);
  }
}

TEST_CASE("energy series validates its request") {
  const TrialSolution trial{Beta{0.5}};
  CHECK_THROWS_AS(energy_series(trial, 0.0, 100), InvalidRequestError);
  CHECK_THROWS_AS(energy_series(trial, 10.0, 1), InvalidRequestError);
}

TEST_CASE("superluminal harmonic-balance handles are rejected, not hidden") {
  const HbmSolution hbm{Beta{0.95}};
  CHECK_THROWS_AS(energy_series(hbm, 2.0 * hbm.period(), 500),
                  SuperluminalError);
}

TEST_CASE("evaluate_method fills the full report for the trial solution") {
  const Beta beta{0.8};
  const TrialSolution trial{beta};
  const MethodReport r = evaluate_method(trial, beta);
  CHECK(r.ok());
  CHECK(r.method == kLabelTrial);
  CHECK(r.max_abs_deviation <= 1e-12);
  CHECK(std::abs(r.mean_total - 2.0 / 3.0) <= 1e-12);
  // Period of the single-harmonic solution, 2 pi (1 - beta^2)^(-3/4).
  CHECK(r.period_estimate ==
        doctest::Approx(13.519262253245373).epsilon(1e-9));
  // Its amplitude disagrees with the true turning point at high beta; the
  // report keeps that gap as data.
  CHECK(r.amplitude_estimate ==
        doctest::Approx(amplitude(beta)).epsilon(1e-9));
  CHECK(r.amplitude_error_vs_oracle > 0.4);
  CHECK(r.max_abs_deviation >= r.peak_to_peak / 2.0 - 1e-15);
}

TEST_CASE("evaluate_method on the harmonic-balance solution") {
  const Beta beta{0.8};
  const HbmSolution hbm{beta};
  const MethodReport r = evaluate_method(hbm, beta);
  CHECK(r.ok());
  CHECK(r.period_estimate ==
        doctest::Approx(7.3659958755307808).epsilon(1e-9));
  CHECK(r.peak_to_peak > 1e-3);
  CHECK(r.max_abs_deviation >= r.peak_to_peak / 2.0 - 1e-15);
}

TEST_CASE("evaluate_method on the numeric oracle is self-consistent") {
  const Beta beta{0.8};
  const auto numeric = make_solution("ode", beta);
  const MethodReport r = evaluate_method(*numeric, beta);
  CHECK(r.ok());
  CHECK(r.period_error_vs_oracle <= 1e-8);
  CHECK(r.amplitude_error_vs_oracle <= 1e-6);
}

TEST_CASE("sweep walks the grid beta-major and keeps the energy law") {
  std::vector<Beta> betas;
  for (int i = 1; i <= 9; ++i) betas.push_back(Beta{0.1 * i});
  const auto reports = sweep(betas, {"trial"});
  REQUIRE(reports.size() == 9);
  double prev = -1.0;
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].beta == doctest::Approx(0.1 * (i + 1)).epsilon(1e-12));
    CHECK(reports[i].ok());
    CHECK(std::isfinite(reports[i].period_error_vs_oracle));
    CHECK(std::isfinite(reports[i].amplitude_error_vs_oracle));
    CHECK(std::isfinite(reports[i].peak_to_peak));
    CHECK(reports[i].max_abs_deviation <= 1e-12);
    CHECK(std::abs(reports[i].mean_total -
                   mechanical_energy(Beta{reports[i].beta})) <= 1e-12);
    CHECK(reports[i].mean_total > prev);
    prev = reports[i].mean_total;
  }
}

TEST_CASE("sweep orders method-minor and ranks the trial solution flattest") {
  const auto reports = sweep({Beta{0.8}}, {"trial", "hbm", "ode"});
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].method == kLabelTrial);
  CHECK(reports[1].method == kLabelHbm);
  CHECK(reports[2].method == kLabelNumeric);
  CHECK(reports[0].max_abs_deviation < reports[1].max_abs_deviation);
  CHECK(reports[0].max_abs_deviation < reports[2].max_abs_deviation);
}

TEST_CASE("sweep rejects empty inputs and unknown methods") {
  CHECK_THROWS_AS(sweep({Beta{0.5}}, {}), InvalidRequestError);
  CHECK_THROWS_AS(sweep({}, {"trial"}), InvalidRequestError);
  CHECK_THROWS_AS(sweep({Beta{0.5}}, {"simplex"}), InvalidRequestError);
}

TEST_CASE("a failing cell is recorded without aborting the sweep") {
  // Beyond beta ~ 0.94 the harmonic-balance handle goes superluminal; its
  // cell carries the error while the trial cell still succeeds.
  const auto reports = sweep({Beta{0.95}}, {"trial", "hbm"});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].ok());
  CHECK_FALSE(reports[1].ok());
  CHECK(reports[1].error.find("speed of light") != std::string::npos);
  CHECK(std::isnan(reports[1].peak_to_peak));
}

TEST_CASE("sweeps are deterministic") {
  const std::vector<Beta> betas{Beta{0.2}, Beta{0.8}};
  const std::vector<std::string> methods{"trial", "hbm", "ode"};
  const auto a = sweep(betas, methods);
  const auto b = sweep(betas, methods);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(std::memcmp(&a[i].mean_total, &b[i].mean_total, sizeof(double)) == 0);
    CHECK(std::memcmp(&a[i].period_estimate, &b[i].period_estimate,
                      sizeof(double)) == 0);
    CHECK(std::memcmp(&a[i].amplitude_estimate, &b[i].amplitude_estimate,
                      sizeof(double)) == 0);
    CHECK(a[i].error == b[i].error);
  }
}

TEST_CASE("frequency override reproduces either reading of the potential") {
  const Beta beta{0.8};
  const HbmSolution hbm{beta};
  EvaluateOptions with_eq10;
  with_eq10.freq_override = freq_ratio(beta);
  const MethodReport r10 = evaluate_method(hbm, beta, with_eq10);
  const MethodReport r22 = evaluate_method(hbm, beta);
  CHECK(r10.ok());
  CHECK(r22.ok());
  // The two readings disagree visibly at beta = 0.8.
  CHECK(std::abs(r10.mean_total - r22.mean_total) > 1e-3);
}
