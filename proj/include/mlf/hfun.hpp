#pragma once

#include <algorithm>
#include <cmath>

#include "mlf/gamma.hpp"
#include "mlf/params.hpp"

namespace mlf {

// F(x, y) = log 2 + 2 log Gamma(x+y) - log Gamma(y) - log Gamma(2x+y).
// For fixed x > 0 it is strictly increasing in y with a unique root y = h(x).
inline double h_defining_fn(double x, double y) {
  return std::log(2.0) + 2.0 * std::lgamma(x + y) - std::lgamma(y) - std::lgamma(2.0 * x + y);
}

inline double h_defining_fn_dy(double x, double y) {
  return 2.0 * digamma(x + y) - digamma(y) - digamma(2.0 * x + y);
}

struct HSample {
  double x;
  double h;
  double residual;  // F(x, h) at the returned point
};

// Solve F(x, y) = 0 for y by bisection. The achievable residual is limited by
// rounding in the log-gamma terms, so the stop test uses
// max(tol, rounding floor of F at the current point).
inline HSample solve_h(double x, double tol = 1e-12) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_h: tol must be > 0");
  if (!std::isfinite(x) || x < 0.0) {
    throw std::invalid_argument("solve_h: x must be finite and >= 0");
  }
  if (x == 0.0) return HSample{0.0, 0.0, 0.0};

  double lo = std::min(1e-12, x * 1e-6);
  double hi = 10.0 * std::max(x, x * x) + 1.0;
  double flo = h_defining_fn(x, lo);
  double fhi = h_defining_fn(x, hi);
  if (!(flo < 0.0) || !(fhi > 0.0)) {
    throw BracketFailureError("solve_h: initial interval does not bracket the root");
  }

  const auto noise_floor = [&](double y) {
    const double s = std::fabs(std::lgamma(y)) + 2.0 * std::fabs(std::lgamma(x + y)) +
                     std::fabs(std::lgamma(2.0 * x + y)) + 1.0;
    return 8.0 * detail::kEps * s;
  };

  double mid = 0.5 * (lo + hi);
  double fmid = h_defining_fn(x, mid);
  for (int it = 0; it < 300; ++it) {
    if (std::fabs(fmid) <= std::max(tol, noise_floor(mid))) break;
    if (fmid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    const double next = 0.5 * (lo + hi);
    if (next == lo || next == hi) break;  // interval at ulp resolution
    mid = next;
    fmid = h_defining_fn(x, mid);
  }
  return HSample{x, mid, fmid};
}

// Derivative of h along the curve F(x, h(x)) = 0 (implicit differentiation).
inline double h_prime(double x, double tol = 1e-12) {
  if (!(x > 0.0)) throw std::invalid_argument("h_prime: x must be > 0");
  const double y = solve_h(x, tol).h;
  const double num = 2.0 * (digamma(2.0 * x + y) - digamma(x + y));
  const double den = h_defining_fn_dy(x, y);
  return num / den;
}

// h(x) - (x^2 / log 2 - x): the residual of the quadratic large-x profile.
inline double asymptote_gap(double x, double tol = 1e-12) {
  if (!(x >= 2.0)) throw std::invalid_argument("asymptote_gap: x must be >= 2");
  return solve_h(x, tol).h - (x * x / std::log(2.0) - x);
}

// Transverse curvature form used to study convexity of F along directions
// (z+1, z) in the (x, y) plane.
inline double curvature_form(double x, double y, double z) {
  const double s = z + 1.0;
  const double t = z + 2.0;
  return 2.0 * s * s * trigamma(x + y) - z * z * trigamma(y) - t * t * trigamma(2.0 * x + y);
}

}  // namespace mlf
