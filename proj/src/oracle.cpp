#include "relosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "relosc/analytic.hpp"
#include "relosc/dynamics.hpp"
#include "relosc/quadrature.hpp"

namespace relosc {

namespace {

// Cubic Hermite value on [0, h] in local time s, from endpoint values and
// first derivatives.
double hermite3(double s, double h, double y0, double d0, double y1,
                double d1) {
  const double u = s / h;
  const double u2 = u * u;
  const double u3 = u2 * u;
  return y0 * (2.0 * u3 - 3.0 * u2 + 1.0) + d0 * h * (u3 - 2.0 * u2 + u) +
         y1 * (-2.0 * u3 + 3.0 * u2) + d1 * h * (u3 - u2);
}

double hermite3_deriv(double s, double h, double y0, double d0, double y1,
                      double d1) {
  const double u = s / h;
  const double u2 = u * u;
  return (y0 * (6.0 * u2 - 6.0 * u) + d0 * h * (3.0 * u2 - 4.0 * u + 1.0) +
          y1 * (-6.0 * u2 + 6.0 * u) + d1 * h * (3.0 * u2 - 2.0 * u)) /
         h;
}

// Quintic Hermite value on [0, h] from value, first and second derivative at
// both endpoints.
double hermite5(double s, double h, double y0, double d0, double c0, double y1,
                double d1, double c1) {
  const double u = s / h;
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double u4 = u3 * u;
  const double u5 = u4 * u;
  const double h0 = 1.0 - 10.0 * u3 + 15.0 * u4 - 6.0 * u5;
  const double h1 = u - 6.0 * u3 + 8.0 * u4 - 3.0 * u5;
  const double h2 = 0.5 * u2 - 1.5 * u3 + 1.5 * u4 - 0.5 * u5;
  const double h3 = 10.0 * u3 - 15.0 * u4 + 6.0 * u5;
  const double h4 = -4.0 * u3 + 7.0 * u4 - 3.0 * u5;
  const double h5 = 0.5 * u3 - u4 + 0.5 * u5;
  return y0 * h0 + d0 * h * h1 + c0 * h * h * h2 + y1 * h3 + d1 * h * h4 +
         c1 * h * h * h5;
}

double jerk_at(double x, double v, double a) {
  const double root = std::sqrt(one_minus_sq(v));
  return 3.0 * v * a * x * root - root * root * root * v;
}

}  // namespace

void validate(const IntegratorConfig& config) {
  if (!(config.rel_tol > 0.0) || !(config.abs_tol > 0.0) ||
      !(config.max_step > 0.0)) {
    throw InvalidRequestError("integrator tolerances must be positive");
  }
  if (!(config.t_end > 0.0)) {
    throw InvalidRequestError("integration span t_end must be positive");
  }
}

State2 equation_of_motion(double /*t*/, const State2& y) {
  const double v = y[1];
  return {v, -std::pow(one_minus_sq(v), 1.5) * y[0]};
}

OdeNodes integrate_from(double x0, double v0, const IntegratorConfig& config) {
  validate(config);
  OdeNodes nodes =
      integrate_dopri5(equation_of_motion, {x0, v0}, 0.0, config.t_end,
                       {config.rel_tol, config.abs_tol, config.max_step});
  for (const State2& y : nodes.y) {
    if (!(std::abs(y[1]) < 1.0)) {
      throw SuperluminalError(
          "integrator produced a superluminal state, |xdot| = " +
          std::to_string(std::abs(y[1])));
    }
  }
  return nodes;
}

Trajectory integrate(Beta beta, const IntegratorConfig& config) {
  OdeNodes nodes = integrate_from(0.0, beta.value(), config);
  Trajectory traj{beta, kLabelNumeric, {}};
  traj.samples.reserve(nodes.t.size());
  for (size_t i = 0; i < nodes.t.size(); ++i) {
    traj.samples.push_back({nodes.t[i], nodes.y[i][0], nodes.y[i][1]});
  }
  return traj;
}

double first_integral_drift(const Trajectory& traj, Beta beta) {
  const double e0 = mechanical_energy(beta);
  double worst = 0.0;
  for (const OscState& s : traj.samples) {
    const double invariant =
        lorentz_gamma(s.xdot) - 1.0 + 0.5 * s.x * s.x;
    worst = std::max(worst, std::abs(invariant - e0));
  }
  return worst;
}

double exact_amplitude(Beta beta) {
  return std::sqrt(2.0 * (gamma0(beta) - 1.0));
}

double exact_period(Beta beta) {
  const double g0 = gamma0(beta);
  const auto integrand = [g0](double theta) {
    const double c = std::cos(theta);
    const double g = 1.0 + (g0 - 1.0) * c * c;
    return g * std::sqrt(2.0 / (1.0 + g));
  };
  return 4.0 * integrate_adaptive(integrand, 0.0, std::numbers::pi / 2.0,
                                  {1e-12, 2000});
}

double measure_period(const Trajectory& traj) {
  const auto& s = traj.samples;
  if (s.size() < 2) {
    throw InsufficientSpanError("trajectory holds fewer than two samples");
  }
  for (size_t i = 1; i < s.size(); ++i) {
    if (!(s[i].t > s[i - 1].t)) {
      throw InvalidRequestError("trajectory times must be strictly increasing");
    }
  }

  std::vector<double> crossings;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    const double x0 = s[i].x;
    const double x1 = s[i + 1].x;
    if (!(x0 < 0.0 && x1 >= 0.0)) continue;
    const double h = s[i + 1].t - s[i].t;
    // Bisect the cubic Hermite interpolant; x0 < 0 <= x1 brackets the root.
    double lo = 0.0, hi = h;
    for (int it = 0; it < 100 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double val = hermite3(mid, h, x0, s[i].xdot, x1, s[i + 1].xdot);
      if (val < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double root = 0.5 * (lo + hi);
    if (hermite3_deriv(root, h, x0, s[i].xdot, x1, s[i + 1].xdot) <= 0.0) {
      continue;  // tangency or downward slope, not an upward crossing
    }
    crossings.push_back(s[i].t + root);
  }

  if (crossings.size() < 2) {
    throw InsufficientSpanError(
        "trajectory spans fewer than two upward zero crossings after t = 0");
  }
  return (crossings.back() - crossings.front()) /
         static_cast<double>(crossings.size() - 1);
}

double measure_amplitude(const Solution& solution, double span,
                         int scan_samples) {
  if (!(span > 0.0) || scan_samples < 3) {
    throw InvalidRequestError("amplitude scan needs span > 0 and >= 3 samples");
  }
  const double h = span / (scan_samples - 1);
  double best = 0.0;
  double t_prev = 0.0;
  Eval prev = solution.eval(0.0);
  best = std::abs(prev.x);
  for (int i = 1; i < scan_samples; ++i) {
    const double t = h * i;
    const Eval cur = solution.eval(t);
    best = std::max(best, std::abs(cur.x));
    if ((prev.xdot > 0.0 && cur.xdot < 0.0) ||
        (prev.xdot < 0.0 && cur.xdot > 0.0)) {
      // Bisect xdot to locate the turning point.
      double lo = t_prev, hi = t;
      double f_lo = prev.xdot;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = solution.eval(mid).xdot;
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      best = std::max(best, std::abs(solution.eval(0.5 * (lo + hi)).x));
    }
    t_prev = t;
    prev = cur;
  }
  return best;
}

NumericSolution::NumericSolution(Beta beta, const IntegratorConfig& config)
    : beta_(beta),
      t_end_(config.t_end),
      energy_freq_ratio_(freq_ratio(beta)),
      rel_tol_(config.rel_tol),
      nodes_{beta, kLabelNumeric, {}} {
  validate(config);
  OdeNodes raw = integrate_from(0.0, beta.value(), config);
  nodes_.samples.reserve(raw.t.size());
  accel_.reserve(raw.t.size());
  jerk_.reserve(raw.t.size());
  for (size_t i = 0; i < raw.t.size(); ++i) {
    nodes_.samples.push_back({raw.t[i], raw.y[i][0], raw.y[i][1]});
    accel_.push_back(raw.f[i][1]);
    jerk_.push_back(jerk_at(raw.y[i][0], raw.y[i][1], raw.f[i][1]));
  }
}

Eval NumericSolution::eval(double t) const {
  const auto& s = nodes_.samples;
  const double slack = 1e-9 * std::max(1.0, t_end_);
  if (t < -slack || t > t_end_ + slack) {
    throw InvalidRequestError("evaluation time " + std::to_string(t) +
                              " lies outside the integrated span [0, " +
                              std::to_string(t_end_) + "]");
  }
  t = std::clamp(t, s.front().t, s.back().t);

  const auto it = std::upper_bound(
      s.begin(), s.end(), t,
      [](double value, const OscState& st) { return value < st.t; });
  size_t j = static_cast<size_t>(std::distance(s.begin(), it));
  j = std::clamp<size_t>(j, 1, s.size() - 1);
  const size_t i = j - 1;

  const double h = s[j].t - s[i].t;
  const double local = t - s[i].t;
  Eval e;
  e.x = hermite5(local, h, s[i].x, s[i].xdot, accel_[i], s[j].x, s[j].xdot,
                 accel_[j]);
  e.xdot = hermite5(local, h, s[i].xdot, accel_[i], jerk_[i], s[j].xdot,
                    accel_[j], jerk_[j]);
  e.xddot = -std::pow(one_minus_sq(e.xdot), 1.5) * e.x;
  return e;
}

double NumericSolution::initial_state_tolerance() const {
  return 100.0 * rel_tol_;
}

OracleReport oracle_report(Beta beta, const IntegratorConfig& config) {
  OracleReport report;
  report.exact_period = exact_period(beta);
  report.exact_amplitude = exact_amplitude(beta);
  report.invariant_drift = first_integral_drift(integrate(beta, config), beta);
  return report;
}

}  // namespace relosc
