#pragma once

#include <cmath>
#include <optional>

#include "mlf/params.hpp"
#include "mlf/series.hpp"

namespace mlf {

namespace detail {

// Closed forms for the special parameter pairs, with their own error bounds.
// (2, 2..4) switch to short Taylor polynomials near z = 0 where the quotient
// forms lose digits to cancellation.
inline std::optional<EvalResult> closed_form_impl(const Params& p, complex z) {
  const double a = p.alpha, b = p.beta;
  const double eps = kEps;

  if (a == 1.0 && (b == 1.0 || b == 0.0)) {
    const complex e = std::exp(z);
    const double m = std::abs(e);
    const double scale = std::fabs(z.real()) + std::fabs(z.imag()) + 4.0;
    if (b == 1.0) return EvalResult{e, m * scale * eps, Method::closed_form};
    const complex v = z * e;
    return EvalResult{v, std::abs(v) * (scale + 2.0) * eps, Method::closed_form};
  }
  if (a == 2.0 && (b == 1.0 || b == 2.0 || b == 3.0 || b == 4.0)) {
    if (b != 1.0 && std::abs(z) < 0.1) {
      // Degree-6 Taylor polynomials: at |z| = 0.1 the omitted term is below
      // 2e-16 of the leading one, so the quotient forms' eps/|z| cancellation
      // never enters.
      complex v;
      if (b == 2.0) {
        v = 1.0 +
            z * (1.0 / 6.0 +
                 z * (1.0 / 120.0 +
                      z * (1.0 / 5040.0 +
                           z * (1.0 / 362880.0 +
                                z * (1.0 / 39916800.0 + z / 6227020800.0)))));
      } else if (b == 3.0) {
        v = 0.5 +
            z * (1.0 / 24.0 +
                 z * (1.0 / 720.0 +
                      z * (1.0 / 40320.0 +
                           z * (1.0 / 3628800.0 +
                                z * (1.0 / 479001600.0 + z / 87178291200.0)))));
      } else {
        v = 1.0 / 6.0 +
            z * (1.0 / 120.0 +
                 z * (1.0 / 5040.0 +
                      z * (1.0 / 362880.0 +
                           z * (1.0 / 39916800.0 +
                                z * (1.0 / 6227020800.0 + z / 1307674368000.0)))));
      }
      return EvalResult{v, 8.0 * eps * std::abs(v), Method::closed_form};
    }
    const complex w = std::sqrt(z);
    const double inter = std::exp(std::fabs(w.real())) * 0.5 + 1.0;  // ~|cosh w|, |sinh w|
    const double scale = std::fabs(w.real()) + std::fabs(w.imag()) + 6.0;
    if (b == 1.0) {
      const complex v = std::cosh(w);
      return EvalResult{v, inter * scale * eps, Method::closed_form};
    }
    if (b == 2.0) {
      const complex v = std::sinh(w) / w;
      return EvalResult{v, inter / std::abs(w) * scale * eps, Method::closed_form};
    }
    if (b == 3.0) {
      const complex v = (std::cosh(w) - 1.0) / z;
      return EvalResult{v, (inter + 1.0) / std::abs(z) * scale * eps, Method::closed_form};
    }
    const complex v = (std::sinh(w) / w - 1.0) / z;
    return EvalResult{v, (inter / std::abs(w) + 1.0) / std::abs(z) * scale * eps,
                      Method::closed_form};
  }
  return std::nullopt;
}

}  // namespace detail

// Closed-form value when (alpha, beta) is one of the six special pairs.
inline std::optional<complex> closed_form(const Params& p, complex z) {
  if (auto r = detail::closed_form_impl(p, z)) return r->value;
  return std::nullopt;
}

}  // namespace mlf
