#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "relosc/errors.hpp"

namespace relosc {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  int max_segments = 2000;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes.
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
struct GkEstimate {
  double value = 0.0;
  double error = 0.0;
};

template <class F>
GkEstimate<F> gk15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f_mid = f(mid);
  double kronrod = kKronrodWeights[7] * f_mid;
  double gauss = kGaussWeights[3] * f_mid;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGk15Nodes[i];
    const double pair = f(mid - dx) + f(mid + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;

  // QUADPACK-style sharpened estimate of the Kronrod error.
  double err = std::abs(kronrod - gauss);
  err = std::min(err, 200.0 * err * std::sqrt(200.0 * err));
  return {kronrod, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 integration of f over [a, b] to an
/// absolute tolerance. The worst segment is bisected until the summed error
/// estimate meets the tolerance. Throws QuadratureError when the segment
/// budget runs out first.
template <class F>
double integrate_adaptive(const F& f, double a, double b,
                          QuadratureOptions opts = {}) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }

  struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
  };

  std::priority_queue<Segment> queue;
  auto first = detail::gk15(f, a, b);
  queue.push({a, b, first.value, first.error});
  double total_value = first.value;
  double total_error = first.error;
  int segments = 1;

  while (total_error > opts.abs_tol) {
    if (segments >= opts.max_segments) {
      throw QuadratureError(
          "adaptive quadrature did not reach the requested tolerance within " +
          std::to_string(opts.max_segments) + " segments");
    }
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      throw QuadratureError(
          "adaptive quadrature stalled on an unresolvable interval");
    }
    auto left = detail::gk15(f, worst.a, mid);
    auto right = detail::gk15(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push({worst.a, mid, left.value, left.error});
    queue.push({mid, worst.b, right.value, right.error});
    ++segments;
  }
  return sign * total_value;
}

}  // namespace relosc
