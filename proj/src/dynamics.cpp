#include "relosc/dynamics.hpp"

#include <cmath>
#include <string>

#include "relosc/analytic.hpp"
#include "relosc/quadrature.hpp"

namespace relosc {

namespace {

void require_subluminal(double xdot) {
  if (!(std::abs(xdot) < 1.0)) {
    throw SuperluminalError("velocity " + std::to_string(xdot) +
                            " is at or above the speed of light");
  }
}

}  // namespace

double lorentz_gamma(double xdot) {
  require_subluminal(xdot);
  return 1.0 / std::sqrt(one_minus_sq(xdot));
}

double gamma0(Beta beta) { return 1.0 / std::sqrt(one_minus_sq(beta.value())); }

double momentum(double xdot) {
  require_subluminal(xdot);
  return xdot / std::sqrt(one_minus_sq(xdot));
}

double force_general(double xdot, double xddot) {
  require_subluminal(xdot);
  return xddot / std::pow(one_minus_sq(xdot), 1.5);
}

double hook_force(Beta beta, double x, std::optional<double> freq_override) {
  const double w = freq_override.value_or(freq_ratio(beta));
  const double w2 = w * w;
  const double bracket = one_minus_sq(beta.value()) + w2 * x * x;
  return -w2 * x / std::pow(bracket, 1.5);
}

double kinetic_energy(double xdot) { return lorentz_gamma(xdot) - 1.0; }

double potential_energy(Beta beta, double x,
                        std::optional<double> freq_override) {
  const double w = freq_override.value_or(freq_ratio(beta));
  const double c = one_minus_sq(beta.value());
  return 1.0 / std::sqrt(c) - 1.0 / std::sqrt(c + w * w * x * x);
}

double potential_from_force(Beta beta, double x,
                            std::optional<double> freq_override) {
  if (x == 0.0) return 0.0;
  const double w = freq_override.value_or(freq_ratio(beta));
  return -integrate_adaptive(
      [beta, w](double xi) { return hook_force(beta, xi, w); }, 0.0, x,
      {1e-12, 2000});
}

double mechanical_energy(Beta beta) { return gamma0(beta) - 1.0; }

EnergyBreakdown energy_at(Beta beta, double x, double xdot,
                          std::optional<double> freq_override) {
  EnergyBreakdown e;
  e.kinetic = kinetic_energy(xdot);
  e.potential = potential_energy(beta, x, freq_override);
  e.total = e.kinetic + e.potential;
  return e;
}

}  // namespace relosc
