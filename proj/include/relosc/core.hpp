#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relosc/errors.hpp"

namespace relosc {

// 1 - v^2 evaluated as (1 - v)(1 + v); keeps full precision when |v| -> 1.
inline double one_minus_sq(double v) { return (1.0 - v) * (1.0 + v); }

/// Initial velocity as a fraction of the speed of light. The single control
/// parameter of the oscillator; construction enforces 0 < beta < 1.
class Beta {
 public:
  explicit Beta(double value);
  double value() const { return value_; }

 private:
  double value_;
};

/// One phase-space sample in dimensionless coordinates.
struct OscState {
  double t = 0.0;
  double x = 0.0;
  double xdot = 0.0;
};

/// Position, velocity and acceleration at one instant.
struct Eval {
  double x = 0.0;
  double xdot = 0.0;
  double xddot = 0.0;
};

inline constexpr char kLabelTrial[] = "analytic-trial";
inline constexpr char kLabelHbm[] = "hbm";
inline constexpr char kLabelNumeric[] = "numeric-oracle";

/// Common evaluation contract for every solution producer: the analytic trial
/// solution, the harmonic-balance solution and interpolated numerical
/// trajectories all answer position/velocity/acceleration at any time.
/// Evaluation is deterministic and implementations are immutable after
/// construction, so a handle may be shared across threads freely.
class Solution {
 public:
  virtual ~Solution() = default;

  virtual Eval eval(double t) const = 0;
  virtual std::string_view label() const = 0;
  virtual Beta beta() const = 0;

  /// Frequency ratio this producer pairs with the closed-form potential when
  /// its trajectory is pushed through the energy diagnostics.
  virtual double energy_freq_ratio() const = 0;

  /// Worst-case deviation of eval(0) from the exact initial state (0, beta).
  /// Zero for closed-form producers that satisfy the initial conditions
  /// exactly.
  virtual double initial_state_tolerance() const { return 0.0; }
};

/// Ordered samples of one producer's motion; t strictly increasing, first
/// sample at t = 0.
struct Trajectory {
  Beta beta;
  std::string label;
  std::vector<OscState> samples;
};

/// Uniform sampling of a solution over [0, t_end] with n_samples points.
Trajectory sample_trajectory(const Solution& solution, double t_end,
                             int n_samples);

struct DimensionlessPoint {
  double x = 0.0;
  double t = 0.0;
};

struct PhysicalPoint {
  double position = 0.0;
  double time = 0.0;
};

// Conversion boundary between lab units and the dimensionless variables used
// everywhere else: x = omega0 * X / c, t = omega0 * tau.
DimensionlessPoint to_dimensionless(double position, double time,
                                    double omega0, double light_speed);
PhysicalPoint from_dimensionless(double x, double t, double omega0,
                                 double light_speed);

}  // namespace relosc
