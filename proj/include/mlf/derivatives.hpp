#pragma once

#include <cmath>
#include <vector>

#include "mlf/eval.hpp"
#include "mlf/params.hpp"

namespace mlf {

// Coefficients a[i][j] expressing the i-th derivative as
//   E^{(i)}(z) = alpha^{-i} * sum_{j=0..i} a[i][j] * E_{alpha, i(alpha-1)+beta+j}(z).
// Row 0 is {1}; each next row follows the two-term recurrence below.
struct DerivCoeffTable {
  double alpha;
  double beta;
  std::vector<std::vector<double>> a;
};

inline DerivCoeffTable deriv_coeffs(const Params& p, int max_order) {
  if (max_order < 0) throw std::invalid_argument("deriv_coeffs: order must be >= 0");
  DerivCoeffTable t{p.alpha, p.beta, {}};
  t.a.resize(static_cast<std::size_t>(max_order) + 1);
  t.a[0] = {1.0};
  for (int i = 0; i < max_order; ++i) {
    const auto& cur = t.a[i];
    auto& nxt = t.a[i + 1];
    nxt.assign(static_cast<std::size_t>(i) + 2, 0.0);
    for (int j = 0; j <= i + 1; ++j) {
      const double keep = (j <= i) ? cur[j] : 0.0;
      const double carry = (j >= 1) ? cur[j - 1] : 0.0;
      nxt[j] = keep + (2.0 - p.beta + i * (1.0 - p.alpha) - j) * carry;
    }
  }
  return t;
}

// i-th derivative at real x using a prebuilt coefficient table (table must have
// been built for the same parameters with max_order >= order).
inline RealResult eval_derivative_with(const DerivCoeffTable& t, double x, int order,
                                       double tol = 1e-14) {
  if (order < 0 || order >= static_cast<int>(t.a.size())) {
    throw std::invalid_argument("eval_derivative_with: order out of table range");
  }
  const auto& row = t.a[order];
  const double shift = order * (t.alpha - 1.0) + t.beta;
  double acc = 0.0;
  double err = 0.0;
  for (int j = 0; j <= order; ++j) {
    const double c = row[j];
    if (c == 0.0) continue;
    const EvalResult e = eval(Params(t.alpha, shift + j), complex(x, 0.0), tol);
    const double term = c * e.value.real();
    acc += term;
    err += std::fabs(c) * e.abs_err_est + detail::kEps * std::fabs(term);
  }
  const double scale = std::pow(t.alpha, -order);
  return RealResult{scale * acc, scale * err * (1.0 + 8.0 * detail::kEps) +
                                     detail::kEps * std::fabs(scale * acc)};
}

// i-th derivative of E_{alpha,beta} at real x.
inline RealResult eval_derivative_r(const Params& p, double x, int order, double tol = 1e-14) {
  const DerivCoeffTable t = deriv_coeffs(p, order);
  return eval_derivative_with(t, x, order, tol);
}

// Truncated Taylor expansion around x: coeffs[i] = E^{(i)}(x) / i!.
struct TaylorJet {
  double x;
  std::vector<double> coeffs;
  std::vector<double> coeff_errs;
};

inline TaylorJet taylor_jet(const Params& p, double x, int order, double tol = 1e-14) {
  if (order < 0) throw std::invalid_argument("taylor_jet: order must be >= 0");
  const DerivCoeffTable t = deriv_coeffs(p, order);
  TaylorJet jet{x, {}, {}};
  jet.coeffs.resize(static_cast<std::size_t>(order) + 1);
  jet.coeff_errs.resize(static_cast<std::size_t>(order) + 1);
  double fact = 1.0;
  for (int i = 0; i <= order; ++i) {
    if (i > 0) fact *= i;
    const RealResult d = eval_derivative_with(t, x, i, tol);
    jet.coeffs[static_cast<std::size_t>(i)] = d.value / fact;
    jet.coeff_errs[static_cast<std::size_t>(i)] = d.abs_err_est / fact;
  }
  return jet;
}

}  // namespace mlf
