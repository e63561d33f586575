#pragma once

#include <optional>

#include "relosc/core.hpp"

namespace relosc {

/// Lorentz factor (1 - xdot^2)^(-1/2). Throws SuperluminalError for
/// |xdot| >= 1.
double lorentz_gamma(double xdot);

/// Lorentz factor at the initial instant, where |xdot| = beta.
double gamma0(Beta beta);

/// Linear momentum in units of m0 c: xdot (1 - xdot^2)^(-1/2).
double momentum(double xdot);

/// Force in units of m0 omega0 c for arbitrary kinematics:
/// (1 - xdot^2)^(-3/2) xddot.
double force_general(double xdot, double xddot);

/// Restoring force of the oscillator in units of m0 omega0 c:
///   -W^2 x (1 - beta^2 + W^2 x^2)^(-3/2)
/// where W defaults to freq_ratio(beta). Pass freq_override to evaluate the
/// same functional form with another method's frequency ratio.
double hook_force(Beta beta, double x,
                  std::optional<double> freq_override = std::nullopt);

/// Kinetic energy in units of m0 c^2: (1 - xdot^2)^(-1/2) - 1.
double kinetic_energy(double xdot);

/// Potential energy in units of m0 c^2, zero at the origin:
///   (1 - beta^2)^(-1/2) - (1 - beta^2 + W^2 x^2)^(-1/2).
double potential_energy(Beta beta, double x,
                        std::optional<double> freq_override = std::nullopt);

/// Potential recovered by adaptive quadrature of the restoring force,
/// -integral of hook_force from 0 to x. Exists as an independent check of
/// the closed form; the two agree to better than 1e-9 over the oscillation
/// range.
double potential_from_force(Beta beta, double x,
                            std::optional<double> freq_override = std::nullopt);

/// Total mechanical energy fixed by the initial conditions:
/// (1 - beta^2)^(-1/2) - 1.
double mechanical_energy(Beta beta);

/// Kinetic/potential/total split at one phase-space point. total is always
/// the exact sum of the other two fields.
struct EnergyBreakdown {
  double kinetic = 0.0;
  double potential = 0.0;
  double total = 0.0;
};

EnergyBreakdown energy_at(Beta beta, double x, double xdot,
                          std::optional<double> freq_override = std::nullopt);

}  // namespace relosc
