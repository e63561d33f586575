#pragma once

#include <vector>

#include "relosc/core.hpp"
#include "relosc/ode.hpp"

namespace relosc {

/// Tolerances and span for the ground-truth integrator.
struct IntegratorConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
  double max_step = 0.1;
  double t_end = 0.0;  // must be set > 0 by the caller
};

void validate(const IntegratorConfig& config);

/// Right side of the equation of motion as a first-order system:
/// (x, v)' = (v, -(1 - v^2)^(3/2) x).
State2 equation_of_motion(double t, const State2& y);

/// Integrates the equation of motion from (x, xdot) = (0, beta) and returns
/// the accepted steps. The run is validated against the exact first integral
/// gamma(v) - 1 + x^2/2 (conserved along true solutions); see
/// first_integral_drift. Throws SuperluminalError if an accepted state ever
/// reaches |xdot| >= 1, which the dynamics cannot produce and therefore
/// indicates integrator malfunction.
Trajectory integrate(Beta beta, const IntegratorConfig& config);

/// Same integrator from an arbitrary initial state; used for symmetry checks.
OdeNodes integrate_from(double x0, double v0, const IntegratorConfig& config);

/// Max deviation of gamma(v) - 1 + x^2/2 from its initial value E(beta) over
/// the trajectory samples.
double first_integral_drift(const Trajectory& traj, Beta beta);

/// Turning-point amplitude from the first integral, sqrt(2 (gamma0 - 1)).
double exact_amplitude(Beta beta);

/// Exact oscillation period by quadrature of the first integral,
///   T = 4 * integral over [0, x_max] of dx / v(x),
/// with gamma(x) = gamma0 - x^2/2 and v = sqrt(gamma^2 - 1) / gamma. The
/// substitution x = x_max sin(theta) removes the turning-point singularity
/// and leaves the smooth integrand gamma sqrt(2 / (1 + gamma)). Strictly
/// increasing in beta; tends to 2 pi as beta -> 0.
double exact_period(Beta beta);

/// Mean spacing of successive upward zero crossings of x after t = 0. Each
/// crossing is refined by root-finding on the local cubic Hermite
/// interpolant built from the (x, xdot) samples. Throws
/// InsufficientSpanError when fewer than two such crossings exist.
double measure_period(const Trajectory& traj);

/// Largest |x| attained by a solution over [0, span]: scans a uniform grid
/// for turning points and refines each zero of xdot by bisection.
double measure_amplitude(const Solution& solution, double span,
                         int scan_samples = 8001);

/// Dense-output view of one integration run, exposed through the common
/// solution contract. Position and velocity are interpolated between
/// accepted steps with two-point quintic Hermite polynomials (value, first
/// and second derivative at both nodes), which keeps resampled trajectories
/// within the first-integral drift budget of the run itself; acceleration is
/// recovered from the equation of motion at the interpolated state.
class NumericSolution final : public Solution {
 public:
  NumericSolution(Beta beta, const IntegratorConfig& config);

  Eval eval(double t) const override;
  std::string_view label() const override { return kLabelNumeric; }
  Beta beta() const override { return beta_; }
  double energy_freq_ratio() const override { return energy_freq_ratio_; }
  double initial_state_tolerance() const override;

  double t_end() const { return t_end_; }
  const Trajectory& nodes() const { return nodes_; }

 private:
  Beta beta_;
  double t_end_;
  double energy_freq_ratio_;
  double rel_tol_;
  Trajectory nodes_;
  std::vector<double> accel_;  // xddot at nodes
  std::vector<double> jerk_;   // d(xddot)/dt at nodes
};

/// Summary of the two independent ground-truth routes for one beta.
struct OracleReport {
  double exact_period = 0.0;
  double exact_amplitude = 0.0;
  double invariant_drift = 0.0;
};

OracleReport oracle_report(Beta beta, const IntegratorConfig& config);

}  // namespace relosc
