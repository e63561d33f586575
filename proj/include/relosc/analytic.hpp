#pragma once

#include "relosc/core.hpp"

namespace relosc {

/// Frequency ratio of the single-harmonic solution, (1 - beta^2)^(3/4).
/// Strictly decreasing; tends to 1 as beta -> 0 and to 0 as beta -> 1.
double freq_ratio(Beta beta);

/// Oscillation amplitude of the single-harmonic solution,
/// beta * (1 - beta^2)^(-3/4). Satisfies amplitude * freq_ratio = beta.
double amplitude(Beta beta);

/// Period relative to the nonrelativistic period, (1 - beta^2)^(-3/4).
/// Diverges as beta -> 1 (time dilation).
double period_ratio(Beta beta);

/// The closed-form single-harmonic solution
///   x(t) = A sin(W t),  xdot(t) = beta cos(W t),  xddot(t) = -A W^2 sin(W t)
/// with W = freq_ratio(beta) and A = amplitude(beta). Satisfies the initial
/// conditions (x, xdot)(0) = (0, beta) exactly.
class TrialSolution final : public Solution {
 public:
  explicit TrialSolution(Beta beta);

  Eval eval(double t) const override;
  std::string_view label() const override { return kLabelTrial; }
  Beta beta() const override { return beta_; }
  double energy_freq_ratio() const override { return freq_ratio_; }

  double freq_ratio() const { return freq_ratio_; }
  double amplitude() const { return amplitude_; }
  double period() const;

  /// Residual of the equation of motion, xddot + (1 - xdot^2)^(3/2) x,
  /// along this solution. Zero at t = 0 and at every zero of x; nonzero at
  /// generic times because the single-harmonic form is an approximation, not
  /// an exact solution. Exposed as a diagnostic probe.
  double residual(double t) const;

 private:
  Beta beta_;
  double freq_ratio_;
  double amplitude_;
};

}  // namespace relosc
