#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "mlf/gamma.hpp"
#include "mlf/params.hpp"
#include "mlf/series.hpp"

namespace mlf {

// Radius above which the large-|z| expansion is the preferred backend.
inline double switch_radius(double alpha) {
  return std::max(10.0, 0.5 * std::pow(38.0 * alpha, alpha));
}

// Default number of algebraic tail terms for the fixed-length public entry point.
inline int default_asym_terms(double alpha) {
  return static_cast<int>(std::ceil(2.0 * alpha)) + 5;
}

namespace detail {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Large-|z| expansion: a sum of exponential branches
//   (1/alpha) * w^{(1-beta)/alpha} * exp(w^{1/alpha}),  w = |z| e^{i(arg z + 2 pi m)}
// over branch indices m whose rotated argument lies inside the growth/transition
// sector, minus the algebraic tail sum_{k>=1} z^{-k} / Gamma(beta - alpha k).
//
// max_terms caps the tail length. With stop_at_min the tail is truncated at its
// smallest term (optimal truncation) and the first omitted term joins the error
// estimate; otherwise exactly max_terms terms are used.
inline EvalResult asym_impl(const Params& p, complex z, int max_terms, bool stop_at_min) {
  const double rz = std::abs(z);
  if (rz == 0.0) {
    throw DomainTooSmallError("asymptotic evaluation undefined at z = 0");
  }
  const double th = std::arg(z);
  const double lre = std::log(rz);
  const double a = p.alpha;

  // --- exponential branches ---
  // Keep every branch whose rotated argument lies strictly inside (-a pi, a pi):
  // those are the genuine exponential contributions (dominant or decaying).
  // Branches exactly on the boundary rays alias one another (the rotated
  // exponent wraps), so they are excluded from the value and their magnitudes
  // feed the error bound instead.
  const double include_cut = a * kPi * (1.0 - 1e-9);
  const double account_cut = a * kPi;
  const int mmax = static_cast<int>(std::ceil((account_cut + kPi) / (2.0 * kPi))) + 1;

  complex expo(0.0, 0.0);
  double expo_abs = 0.0;
  double expo_err = 0.0;
  double dropped_mag = 0.0;
  for (int m = -mmax; m <= mmax; ++m) {
    const double thm = th + 2.0 * kPi * m;
    const double athm = std::fabs(thm);
    if (athm > account_cut) continue;

    const complex L(lre, thm);                       // log w on branch m
    const complex root = std::exp(L / a);            // w^{1/alpha}
    const complex ex = ((1.0 - p.beta) / a) * L + root;
    if (athm <= include_cut) {
      if (ex.real() > detail::kLogOverflow) {
        throw NonFiniteError("asymptotic evaluation: exponential branch overflows");
      }
      const complex val = std::exp(ex) / a;
      const double mag = std::abs(val);
      expo += val;
      expo_abs += mag;
      // exp(ex) carries relative error ~ eps * (|Re ex| + |Im ex|).
      expo_err += mag * (std::fabs(ex.real()) + std::fabs(ex.imag()) + 4.0) * detail::kEps;
    } else {
      // Boundary-ray branch: excluded from the value, charged to the error.
      dropped_mag += std::exp(std::min(ex.real(), detail::kLogOverflow)) / a;
    }
  }

  // --- algebraic tail ---
  complex alg(0.0, 0.0);
  double alg_abs = 0.0;
  double alg_round = 0.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  double omitted = 0.0;
  int k = 1;
  for (; k <= max_terms; ++k) {
    const double g = p.beta - a * k;
    if (is_nonpositive_integer(g)) continue;  // 1/Gamma vanishes
    const double lt = -k * lre - std::lgamma(g);
    if (lt > detail::kLogOverflow) {
      throw NonFiniteError("asymptotic evaluation: algebraic term overflows");
    }
    const double mag = std::exp(lt);
    if (stop_at_min && mag > prev_mag && k > 2) {
      omitted = mag;  // divergence onset: truncate before this term
      break;
    }
    const int sg = gamma_sign(g);
    const double ang = -k * th;
    alg += complex(sg * mag * std::cos(ang), sg * mag * std::sin(ang));
    alg_abs += mag;
    alg_round += mag * (std::fabs(lt) + std::fabs(ang) + 4.0) * detail::kEps;
    prev_mag = mag;
  }
  if (k > max_terms) {
    // Estimate the first omitted nonzero term (skip 1/Gamma zeros).
    for (int j = max_terms + 1; j <= max_terms + 8; ++j) {
      const double g = p.beta - a * j;
      if (is_nonpositive_integer(g)) continue;
      const double lt = -j * lre - std::lgamma(g);
      omitted = std::exp(std::min(lt, detail::kLogOverflow));
      break;
    }
  }

  const complex value = expo - alg;
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw NonFiniteError("asymptotic evaluation: result is not finite");
  }
  const double err = expo_err + alg_round + 2.0 * omitted + dropped_mag +
                     4.0 * detail::kEps * (expo_abs + alg_abs);
  return EvalResult{value, err, Method::asymptotic};
}

}  // namespace detail

// Public fixed-length entry point; requires |z| at or above the switch radius.
inline EvalResult eval_asymptotic(const Params& p, complex z, int n_terms = -1) {
  if (n_terms < 0) n_terms = default_asym_terms(p.alpha);
  if (std::abs(z) < switch_radius(p.alpha)) {
    throw DomainTooSmallError("eval_asymptotic: |z| below the validity radius for this alpha");
  }
  return detail::asym_impl(p, z, n_terms, /*stop_at_min=*/false);
}

}  // namespace mlf
