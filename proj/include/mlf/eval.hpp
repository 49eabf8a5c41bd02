#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "mlf/asymptotic.hpp"
#include "mlf/closed_form.hpp"
#include "mlf/params.hpp"
#include "mlf/series.hpp"

namespace mlf {

namespace detail {

// Smallest |z| at which the large-|z| expansion is worth trying as a fallback.
constexpr double kAsymFallbackRadius = 2.0;

inline std::optional<EvalResult> try_series(const Params& p, complex z, double tol) {
  try {
    return eval_series(p, z, tol);
  } catch (const NonFiniteError&) {
  } catch (const NoConvergenceError&) {
  }
  return std::nullopt;
}

inline std::optional<EvalResult> try_asym(const Params& p, complex z) {
  if (std::abs(z) < kAsymFallbackRadius) return std::nullopt;
  try {
    return asym_impl(p, z, 256, /*stop_at_min=*/true);
  } catch (const NonFiniteError&) {
  } catch (const DomainTooSmallError&) {
  }
  return std::nullopt;
}

inline bool good_enough(const EvalResult& r, double tol) {
  return r.abs_err_est <= 10.0 * tol * (std::abs(r.value) + 1e-290);
}

}  // namespace detail

// Evaluate E_{alpha,beta}(z): closed form when available, otherwise the series
// below the switch radius and the large-|z| expansion above it. When the primary
// backend's error estimate is poor (cancellation), the other backend is also
// tried and the smaller-error result wins.
inline EvalResult eval(const Params& p, complex z, double tol = 1e-14) {
  if (!(tol > 0.0)) throw std::invalid_argument("eval: tol must be > 0");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("eval: z must be finite");
  }

  if (auto cf = detail::closed_form_impl(p, z)) return *cf;

  if (p.beta == 0.0) {
    // E_{a,0}(z) = z * E_{a,a}(z)
    const EvalResult r = eval(Params(p.alpha, p.alpha), z, tol);
    const complex v = z * r.value;
    const double err = std::abs(z) * r.abs_err_est + 2.0 * detail::kEps * std::abs(v);
    return EvalResult{v, err, r.method};
  }

  const bool series_first = std::abs(z) <= switch_radius(p.alpha);
  std::optional<EvalResult> primary =
      series_first ? detail::try_series(p, z, tol) : detail::try_asym(p, z);
  if (primary && detail::good_enough(*primary, tol)) return *primary;

  std::optional<EvalResult> secondary =
      series_first ? detail::try_asym(p, z) : detail::try_series(p, z, tol);
  if (primary && secondary) {
    return primary->abs_err_est <= secondary->abs_err_est ? *primary : *secondary;
  }
  if (primary) return *primary;
  if (secondary) return *secondary;
  throw NonFiniteError("eval: value exceeds double range for this argument");
}

}  // namespace mlf
