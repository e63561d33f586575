#include "relosc/hbm.hpp"

#include <cmath>
#include <numbers>

namespace relosc {

double hbm_omega(Beta beta) {
  const double b2 = beta.value() * beta.value();
  return std::pow((2.0 - 2.0 * b2) / (2.0 - b2), 0.25);
}

HbmSolution::HbmSolution(Beta beta)
    : beta_(beta), omega_(hbm_omega(beta)) {
  const double b = beta.value();
  const double b2 = b * b;
  c1_ = (b / omega_) * (1.0 + b2 / 8.0 + 3.0 * b2 * b2 / 64.0);
  c3_ = -(b * b2 / (24.0 * omega_)) * (1.0 + 3.0 * b2 / 128.0);
  c5_ = 3.0 * b2 * b2 * b / (640.0 * omega_);
}

Eval HbmSolution::eval(double t) const {
  const double u = omega_ * t;
  Eval e;
  e.x = c1_ * std::sin(u) + c3_ * std::sin(3.0 * u) + c5_ * std::sin(5.0 * u);
  e.xdot = omega_ * (c1_ * std::cos(u) + 3.0 * c3_ * std::cos(3.0 * u) +
                     5.0 * c5_ * std::cos(5.0 * u));
  e.xddot = -omega_ * omega_ *
            (c1_ * std::sin(u) + 9.0 * c3_ * std::sin(3.0 * u) +
             25.0 * c5_ * std::sin(5.0 * u));
  return e;
}

double HbmSolution::period() const { return 2.0 * std::numbers::pi / omega_; }

double HbmSolution::initial_velocity() const {
  return omega_ * (c1_ + 3.0 * c3_ + 5.0 * c5_);
}

double HbmSolution::initial_velocity_deviation() const {
  return initial_velocity() - beta_.value();
}

double HbmSolution::initial_state_tolerance() const {
  return std::abs(initial_velocity_deviation());
}

}  // namespace relosc
