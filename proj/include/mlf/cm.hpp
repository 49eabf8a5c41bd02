#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "mlf/derivatives.hpp"
#include "mlf/params.hpp"

namespace mlf {

// Which function of x > 0 the sign probe targets.
enum class CmTarget { e_of_minus_x, reciprocal_e };

inline const char* cm_target_name(CmTarget t) {
  return t == CmTarget::e_of_minus_x ? "e_of_minus_x" : "reciprocal_e";
}

// Taylor coefficients of 1/f from those of f (formal series inversion), with
// first-order error propagation.
inline TaylorJet reciprocal_jet(const TaylorJet& jet) {
  const std::size_t n = jet.coeffs.size();
  if (n == 0) throw std::invalid_argument("reciprocal_jet: empty jet");
  const double c0 = jet.coeffs[0];
  if (c0 == 0.0) throw NonFiniteError("reciprocal_jet: leading coefficient is zero");

  TaylorJet out{jet.x, std::vector<double>(n), std::vector<double>(n)};
  out.coeffs[0] = 1.0 / c0;
  out.coeff_errs[0] = jet.coeff_errs[0] / (c0 * c0) + detail::kEps * std::fabs(out.coeffs[0]);
  for (std::size_t k = 1; k < n; ++k) {
    double acc = 0.0;
    double err = 0.0;
    double abs_acc = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      const double term = jet.coeffs[i] * out.coeffs[k - i];
      acc += term;
      abs_acc += std::fabs(term);
      err += std::fabs(jet.coeffs[i]) * out.coeff_errs[k - i] +
             jet.coeff_errs[i] * std::fabs(out.coeffs[k - i]);
    }
    out.coeffs[k] = -acc / c0;
    out.coeff_errs[k] = (err + detail::kEps * abs_acc) / std::fabs(c0) +
                        std::fabs(out.coeffs[k]) *
                            (jet.coeff_errs[0] / std::fabs(c0) + detail::kEps);
  }
  return out;
}

// One signed derivative sample: value of (-1)^n f^{(n)}(x), its error bound,
// and whether the bound is too large (>10% of the magnitude) to trust the sign.
struct SignedTerm {
  double value;
  double abs_err_est;
  bool numerical_doubt;
};

// Signed derivative sequence s_n = (-1)^n f^{(n)}(x), n = 0..order, where f is
// the selected target. Complete monotonicity requires every s_n >= 0.
inline std::vector<SignedTerm> cm_signs(const Params& p, CmTarget target, double x, int order,
                                        double tol = 1e-14) {
  if (!(x > 0.0)) throw std::invalid_argument("cm_signs: x must be > 0");
  if (order < 0) throw std::invalid_argument("cm_signs: order must be >= 0");

  std::vector<SignedTerm> out(static_cast<std::size_t>(order) + 1);
  if (target == CmTarget::e_of_minus_x) {
    // f(x) = E(-x): f^{(n)}(x) = (-1)^n E^{(n)}(-x), so s_n = E^{(n)}(-x).
    const DerivCoeffTable t = deriv_coeffs(p, order);
    for (int n = 0; n <= order; ++n) {
      const RealResult d = eval_derivative_with(t, -x, n, tol);
      out[n] = SignedTerm{d.value, d.abs_err_est,
                          d.abs_err_est > 0.1 * std::fabs(d.value)};
    }
    return out;
  }

  // f(x) = 1/E(x): s_n = (-1)^n n! * [y^n] (1/E)(x + y).
  const TaylorJet jet = taylor_jet(p, x, order, tol);
  const TaylorJet inv = reciprocal_jet(jet);
  double fact = 1.0;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) fact *= n;
    const double sgn = (n % 2) ? -1.0 : 1.0;
    const double v = sgn * fact * inv.coeffs[n];
    const double e = fact * inv.coeff_errs[n];
    out[n] = SignedTerm{v, e, e > 0.1 * std::fabs(v)};
  }
  return out;
}

struct CmFailure {
  double x;
  int order;
  double value;
};

struct CmVerdict {
  bool pass;
  std::optional<CmFailure> first_failure;
  bool numerical_doubt;  // any probed term had an untrustworthy sign
};

// Sampled complete-monotonicity probe: at each x, every signed derivative up
// to the order must stay above -1e-9 relative to the running magnitude scale.
// Terms whose error estimate swamps their value cannot certify a violation
// (their sign is meaningless); they only raise the numerical_doubt flag.
inline CmVerdict is_cm_sampled(const Params& p, CmTarget target, const std::vector<double>& xs,
                               int order, double tol = 1e-14) {
  constexpr double kRelTol = 1e-9;
  CmVerdict v{true, std::nullopt, false};
  for (const double x : xs) {
    const auto signs = cm_signs(p, target, x, order, tol);
    double scale = 0.0;
    for (int n = 0; n < static_cast<int>(signs.size()); ++n) {
      const auto& s = signs[static_cast<std::size_t>(n)];
      if (s.numerical_doubt) {
        v.numerical_doubt = true;
        continue;
      }
      scale = std::max(scale, std::fabs(s.value));
      if (s.value < -kRelTol * scale) {
        if (v.pass) {
          v.pass = false;
          v.first_failure = CmFailure{x, n, s.value};
        }
      }
    }
    if (!v.pass) break;
  }
  return v;
}

}  // namespace mlf
