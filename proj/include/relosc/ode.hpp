#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "relosc/errors.hpp"

namespace relosc {

using State2 = std::array<double, 2>;

struct OdeOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
  double max_step = 0.1;
};

/// Accepted integration nodes: time, state and state derivative at every
/// accepted step, endpoints included.
struct OdeNodes {
  std::vector<double> t;
  std::vector<State2> y;
  std::vector<State2> f;
};

namespace detail {

// Dormand-Prince 5(4) tableau.
inline constexpr double kC2 = 1.0 / 5.0, kC3 = 3.0 / 10.0, kC4 = 4.0 / 5.0,
                        kC5 = 8.0 / 9.0;
inline constexpr double kA21 = 1.0 / 5.0;
inline constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
inline constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0,
                        kA43 = 32.0 / 9.0;
inline constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                        kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
inline constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                        kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                        kA65 = -5103.0 / 18656.0;
inline constexpr double kA71 = 35.0 / 384.0, kA73 = 500.0 / 1113.0,
                        kA74 = 125.0 / 192.0, kA75 = -2187.0 / 6784.0,
                        kA76 = 11.0 / 84.0;
// Difference between the 5th- and embedded 4th-order weights.
inline constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0,
                        kE4 = 71.0 / 1920.0, kE5 = -17253.0 / 339200.0,
                        kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;

}  // namespace detail

/// Explicit Dormand-Prince 5(4) pair with a proportional-integral step-size
/// controller and FSAL reuse. Integrates y' = rhs(t, y) from t0 to t1 and
/// returns every accepted node. Throws StepSizeUnderflowError when the
/// controller cannot meet the tolerance with a representable step.
template <class Rhs>
OdeNodes integrate_dopri5(const Rhs& rhs, State2 y0, double t0, double t1,
                          const OdeOptions& opts = {}) {
  if (!(opts.rel_tol > 0.0) || !(opts.abs_tol > 0.0) || !(opts.max_step > 0.0)) {
    throw InvalidRequestError("integrator tolerances and max step must be positive");
  }
  if (!(t1 > t0)) {
    throw InvalidRequestError("integration span must be positive");
  }

  constexpr double kSafety = 0.9;
  constexpr double kMinShrink = 0.2;   // largest allowed step reduction
  constexpr double kMaxGrow = 10.0;    // largest allowed step growth
  constexpr double kBetaPi = 0.04;
  constexpr double kExpo = 0.2 - kBetaPi * 0.75;

  OdeNodes nodes;
  double t = t0;
  State2 y = y0;
  State2 k1 = rhs(t, y);
  nodes.t.push_back(t);
  nodes.y.push_back(y);
  nodes.f.push_back(k1);

  double h = std::min(opts.max_step, std::min(1e-2, t1 - t0));
  double err_old = 1e-4;
  bool rejected = false;

  while (t < t1) {
    h = std::min(h, t1 - t);
    if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
      throw StepSizeUnderflowError(
          "step size underflow at t = " + std::to_string(t));
    }

    State2 k2, k3, k4, k5, k6, k7, yt, y_next;
    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * detail::kA21 * k1[i];
    k2 = rhs(t + detail::kC2 * h, yt);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (detail::kA31 * k1[i] + detail::kA32 * k2[i]);
    k3 = rhs(t + detail::kC3 * h, yt);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (detail::kA41 * k1[i] + detail::kA42 * k2[i] +
                          detail::kA43 * k3[i]);
    k4 = rhs(t + detail::kC4 * h, yt);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (detail::kA51 * k1[i] + detail::kA52 * k2[i] +
                          detail::kA53 * k3[i] + detail::kA54 * k4[i]);
    k5 = rhs(t + detail::kC5 * h, yt);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (detail::kA61 * k1[i] + detail::kA62 * k2[i] +
                          detail::kA63 * k3[i] + detail::kA64 * k4[i] +
                          detail::kA65 * k5[i]);
    k6 = rhs(t + h, yt);
    for (int i = 0; i < 2; ++i)
      y_next[i] = y[i] + h * (detail::kA71 * k1[i] + detail::kA73 * k3[i] +
                              detail::kA74 * k4[i] + detail::kA75 * k5[i] +
                              detail::kA76 * k6[i]);
    k7 = rhs(t + h, y_next);

    double err_sq = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double e = h * (detail::kE1 * k1[i] + detail::kE3 * k3[i] +
                            detail::kE4 * k4[i] + detail::kE5 * k5[i] +
                            detail::kE6 * k6[i] + detail::kE7 * k7[i]);
      const double scale =
          opts.abs_tol +
          opts.rel_tol * std::max(std::abs(y[i]), std::abs(y_next[i]));
      err_sq += (e / scale) * (e / scale);
    }
    // Steer to a quarter of the requested tolerance. The headroom absorbs
    // the gamma^3 amplification of velocity error in the first integral on
    // long high-beta runs.
    const double err = 4.0 * std::sqrt(0.5 * err_sq);

    const double fac11 = std::pow(std::max(err, 1e-32), kExpo);
    if (err <= 1.0) {
      t += h;
      y = y_next;
      k1 = k7;  // first-same-as-last
      nodes.t.push_back(t);
      nodes.y.push_back(y);
      nodes.f.push_back(k1);

      double fac = fac11 / std::pow(err_old, kBetaPi);
      fac = std::clamp(fac / kSafety, 1.0 / kMaxGrow, 1.0 / kMinShrink);
      double h_new = h / fac;
      if (rejected) h_new = std::min(h_new, h);
      h = std::min(h_new, opts.max_step);
      err_old = std::max(err, 1e-4);
      rejected = false;
    } else {
      h = h / std::min(1.0 / kMinShrink, fac11 / kSafety);
      rejected = true;
    }
  }
  return nodes;
}

}  // namespace relosc
