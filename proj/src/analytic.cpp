#include "relosc/analytic.hpp"

#include <cmath>
#include <numbers>

namespace relosc {

double freq_ratio(Beta beta) {
  return std::pow(one_minus_sq(beta.value()), 0.75);
}

double amplitude(Beta beta) { return beta.value() / freq_ratio(beta); }

double period_ratio(Beta beta) { return 1.0 / freq_ratio(beta); }

TrialSolution::TrialSolution(Beta beta)
    : beta_(beta),
      freq_ratio_(relosc::freq_ratio(beta)),
      amplitude_(relosc::amplitude(beta)) {}

Eval TrialSolution::eval(double t) const {
  const double phase = freq_ratio_ * t;
  const double s = std::sin(phase);
  const double c = std::cos(phase);
  // xdot written as beta * cos so that eval(0) returns beta exactly.
  return {amplitude_ * s, beta_.value() * c,
          -amplitude_ * freq_ratio_ * freq_ratio_ * s};
}

double TrialSolution::period() const {
  return 2.0 * std::numbers::pi / freq_ratio_;
}

double TrialSolution::residual(double t) const {
  const Eval e = eval(t);
  return e.xddot + std::pow(one_minus_sq(e.xdot), 1.5) * e.x;
}

}  // namespace relosc
