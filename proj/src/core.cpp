#include "relosc/core.hpp"

#include <string>

namespace relosc {

Beta::Beta(double value) : value_(value) {
  if (!(value > 0.0 && value < 1.0)) {
    if (value >= 1.0) {
      throw OutOfRangeError(
          "beta = " + std::to_string(value) +
          " is superluminal: initial velocities at or above the speed of "
          "light (beta >= 1) are forbidden");
    }
    throw OutOfRangeError(
        "beta = " + std::to_string(value) +
        " is the degenerate rest case: beta <= 0 produces no oscillation");
  }
}

Trajectory sample_trajectory(const Solution& solution, double t_end,
                             int n_samples) {
  if (!(t_end > 0.0) || n_samples < 2) {
    throw InvalidRequestError(
        "trajectory sampling needs t_end > 0 and at least two samples");
  }
  Trajectory traj{solution.beta(), std::string(solution.label()), {}};
  traj.samples.reserve(static_cast<size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double t = t_end * static_cast<double>(i) / (n_samples - 1);
    const Eval e = solution.eval(t);
    traj.samples.push_back({t, e.x, e.xdot});
  }
  return traj;
}

namespace {

void check_scales(double omega0, double light_speed) {
  if (!(light_speed > 0.0)) {
    throw InvalidScaleError("light speed must be positive");
  }
  if (!(omega0 > 0.0)) {
    throw InvalidScaleError("natural frequency must be positive");
  }
}

}  // namespace

DimensionlessPoint to_dimensionless(double position, double time,
                                    double omega0, double light_speed) {
  check_scales(omega0, light_speed);
  return {omega0 * position / light_speed, omega0 * time};
}

PhysicalPoint from_dimensionless(double x, double t, double omega0,
                                 double light_speed) {
  check_scales(omega0, light_speed);
  return {light_speed * x / omega0, t / omega0};
}

}  // namespace relosc
