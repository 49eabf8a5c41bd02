#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

#include "mlf/gamma.hpp"
#include "mlf/params.hpp"

namespace mlf {

namespace detail {
constexpr int kSeriesMaxTerms = 200000;
}  // namespace detail

// Power series sum_{k>=0} z^k / Gamma(alpha k + beta), summed term-by-term in
// log space so individual terms never overflow intermediately. Converges for
// every finite z; accuracy on the negative half-plane degrades with |z| due to
// cancellation, which abs_err_est tracks via the summed term magnitudes.
inline EvalResult eval_series(const Params& p, complex z, double tol = 1e-14) {
  if (!(tol > 0.0)) throw std::invalid_argument("eval_series: tol must be > 0");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("eval_series: z must be finite");
  }

  const double rz = std::abs(z);
  const double lz = std::log(rz);  // -inf when z == 0
  const double th = std::arg(z);

  complex sum(0.0, 0.0);
  double abs_sum = 0.0;      // sum of |t_k|
  double round_err = 0.0;    // accumulated per-term rounding error
  double tail_bound = std::numeric_limits<double>::infinity();
  double prev_mag = -1.0;    // last nonzero |t_k|
  bool done = false;

  for (int k = 0; k <= detail::kSeriesMaxTerms; ++k) {
    const double g = p.alpha * k + p.beta;
    double mag = 0.0;
    int sg = 0;
    double lt = -std::numeric_limits<double>::infinity();
    if (!is_nonpositive_integer(g)) {
      const double lgam = std::lgamma(g);
      lt = (k == 0 ? 0.0 : k * lz) - lgam;
      if (lt > detail::kLogOverflow) {
        throw NonFiniteError("eval_series: term magnitude overflows double range");
      }
      mag = std::exp(lt);
      sg = gamma_sign(g);
    }

    if (mag > 0.0) {
      const double ang = k * th;
      sum += complex(sg * mag * std::cos(ang), sg * mag * std::sin(ang));
      abs_sum += mag;
      // exp/lgamma/angle rounding scales with the log-magnitude of the term.
      round_err += mag * (std::fabs(lt) + std::fabs(ang) + 4.0) * detail::kEps;

      if (prev_mag > 0.0) {
        const double r = mag / prev_mag;
        if (r < 1.0) {
          // Term ratios are eventually decreasing, so a geometric majorant
          // with the current ratio bounds the remaining tail.
          tail_bound = mag * r / (1.0 - r);
          const double noise = 0.25 * detail::kEps * abs_sum;
          if (tail_bound <= std::max({tol * std::abs(sum), noise, DBL_MIN})) {
            done = true;
          }
        }
      }
      prev_mag = mag;
    } else if (k > 0 && rz == 0.0) {
      tail_bound = 0.0;
      done = true;  // z == 0: only the k = 0 term survives
    }
    if (done) break;
  }
  if (!done) {
    throw NoConvergenceError("eval_series: did not converge within the term budget");
  }
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
    throw NonFiniteError("eval_series: sum is not finite");
  }
  return EvalResult{sum, round_err + tail_bound, Method::series};
}

}  // namespace mlf
