#pragma once

#include "relosc/core.hpp"

namespace relosc {

/// Harmonic-balance frequency ratio, ((2 - 2 beta^2) / (2 - beta^2))^(1/4).
double hbm_omega(Beta beta);

/// Mickens's three-harmonic solution
///   x(t) = c1 sin(w t) + c3 sin(3 w t) + c5 sin(5 w t)
/// with w = hbm_omega(beta) and
///   c1 =  (beta / w) (1 + beta^2/8 + 3 beta^4/64)
///   c3 = -(beta^3 / (24 w)) (1 + 3 beta^2/128)
///   c5 =   3 beta^5 / (640 w)
///
/// x(0) = 0 holds exactly; xdot(0) only approximates beta, and the mismatch
/// grows with beta (it crosses the speed of light near beta ~ 0.945, at
/// which point energy evaluation rejects the handle as superluminal). The
/// mismatch is reported, not corrected, since the published coefficients are
/// what the diagnostics are meant to judge.
class HbmSolution final : public Solution {
 public:
  explicit HbmSolution(Beta beta);

  Eval eval(double t) const override;
  std::string_view label() const override { return kLabelHbm; }
  Beta beta() const override { return beta_; }
  double energy_freq_ratio() const override { return omega_; }
  double initial_state_tolerance() const override;

  double omega() const { return omega_; }
  double c1() const { return c1_; }
  double c3() const { return c3_; }
  double c5() const { return c5_; }
  double period() const;

  /// xdot(0) = w (c1 + 3 c3 + 5 c5) = beta + (69/1024) beta^5.
  double initial_velocity() const;
  double initial_velocity_deviation() const;

 private:
  Beta beta_;
  double omega_;
  double c1_;
  double c3_;
  double c5_;
};

}  // namespace relosc
