#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "mlf/derivatives.hpp"
#include "mlf/eval.hpp"
#include "mlf/gamma.hpp"
#include "mlf/hfun.hpp"
#include "mlf/params.hpp"
#include "mlf/threading.hpp"

namespace mlf {

// Rectangular lattice of sample points, endpoints included.
struct GridSpec {
  double re_min, re_max;
  int n_re;
  double im_min, im_max;
  int n_im;
};

// One certified counterexample: the measured gap exceeds three times the
// summed evaluation error bounds, so it cannot be numerical noise.
struct ViolationRecord {
  complex z;
  double lhs;     // |E(z)|
  double rhs;     // comparison value at the same point
  double margin;  // lhs - rhs
};

enum class IneqKind { le, ge, two_sided };

namespace detail {

inline double grid_coord(double lo, double hi, int n, int i) {
  if (n <= 1) return lo;
  return lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
}

template <class PointFn>
std::vector<ViolationRecord> collect_grid(const GridSpec& g, PointFn&& fn) {
  if (g.n_re < 1 || g.n_im < 1) {
    throw std::invalid_argument("grid: need at least one point per axis");
  }
  const std::size_t total = static_cast<std::size_t>(g.n_re) * g.n_im;
  std::vector<std::optional<ViolationRecord>> slots(total);
  parallel_for(total, [&](std::size_t idx) {
    const int i = static_cast<int>(idx % g.n_re);
    const int j = static_cast<int>(idx / g.n_re);
    const complex z(grid_coord(g.re_min, g.re_max, g.n_re, i),
                    grid_coord(g.im_min, g.im_max, g.n_im, j));
    slots[idx] = fn(z);
  });
  std::vector<ViolationRecord> out;
  for (const auto& s : slots) {
    if (s) out.push_back(*s);
  }
  return out;
}

}  // namespace detail

// Check |E(z)| <= E(Re z) over the grid; returns certified violations.
inline std::vector<ViolationRecord> check_le(const Params& p, const GridSpec& g,
                                             double tol = 1e-14) {
  return detail::collect_grid(g, [&](complex z) -> std::optional<ViolationRecord> {
    const EvalResult l = eval(p, z, tol);
    const EvalResult r = eval(p, complex(z.real(), 0.0), tol);
    const double lhs = std::abs(l.value);
    const double rhs = r.value.real();
    const double margin = lhs - rhs;
    if (margin > 3.0 * (l.abs_err_est + r.abs_err_est)) {
      return ViolationRecord{z, lhs, rhs, margin};
    }
    return std::nullopt;
  });
}

// Check |E(z)| >= E(Re z) over the grid; returns certified violations.
inline std::vector<ViolationRecord> check_ge(const Params& p, const GridSpec& g,
                                             double tol = 1e-14) {
  return detail::collect_grid(g, [&](complex z) -> std::optional<ViolationRecord> {
    const EvalResult l = eval(p, z, tol);
    const EvalResult r = eval(p, complex(z.real(), 0.0), tol);
    const double lhs = std::abs(l.value);
    const double rhs = r.value.real();
    const double margin = lhs - rhs;
    if (-margin > 3.0 * (l.abs_err_est + r.abs_err_est)) {
      return ViolationRecord{z, lhs, rhs, margin};
    }
    return std::nullopt;
  });
}

// Check E(Re z) <= |E(z)| <= E((Re z^{1/alpha})^alpha) over the grid.
// Domain: Re z >= 0 for alpha in [1,2); for alpha = 2 the whole plane minus
// the negative real axis. Out-of-domain grid points are skipped.
inline std::vector<ViolationRecord> check_two_sided(const Params& p, const GridSpec& g,
                                                    double tol = 1e-14) {
  return detail::collect_grid(g, [&](complex z) -> std::optional<ViolationRecord> {
    if (p.alpha < 2.0) {
      if (z.real() < 0.0) return std::nullopt;
    } else {
      if (z.imag() == 0.0 && z.real() < 0.0) return std::nullopt;
    }
    const EvalResult l = eval(p, z, tol);
    const double lhs = std::abs(l.value);

    const EvalResult lo = eval(p, complex(z.real(), 0.0), tol);
    const double lo_margin = lo.value.real() - lhs;
    if (lo_margin > 3.0 * (l.abs_err_est + lo.abs_err_est)) {
      return ViolationRecord{z, lhs, lo.value.real(), -lo_margin};
    }

    double re_root = 0.0;
    if (std::abs(z) > 0.0) {
      re_root = std::max(0.0, std::exp(std::log(z) / p.alpha).real());
    }
    const double upper_arg = std::pow(re_root, p.alpha);
    const EvalResult hi = eval(p, complex(upper_arg, 0.0), tol);
    const double hi_margin = lhs - hi.value.real();
    if (hi_margin > 3.0 * (l.abs_err_est + hi.abs_err_est)) {
      return ViolationRecord{z, lhs, hi.value.real(), hi_margin};
    }
    return std::nullopt;
  });
}

// (E')^2 - E E'' at real x, the curvature form of log E.
inline RealResult log_convexity_form(const Params& p, double x, double tol = 1e-14) {
  const DerivCoeffTable t = deriv_coeffs(p, 2);
  const RealResult e0 = eval_derivative_with(t, x, 0, tol);
  const RealResult e1 = eval_derivative_with(t, x, 1, tol);
  const RealResult e2 = eval_derivative_with(t, x, 2, tol);
  const double v = e1.value * e1.value - e0.value * e2.value;
  const double err = 2.0 * std::fabs(e1.value) * e1.abs_err_est +
                     std::fabs(e0.value) * e2.abs_err_est +
                     std::fabs(e2.value) * e0.abs_err_est +
                     4.0 * detail::kEps * (e1.value * e1.value + std::fabs(e0.value * e2.value));
  return RealResult{v, err};
}

// Value of the curvature form at x = 0 in closed form.
inline double log_convexity_form_zero(const Params& p) {
  const double a = p.alpha, b = p.beta;
  const double g1 = reciprocal_gamma(a + b);
  return g1 * g1 - 2.0 * reciprocal_gamma(b) * reciprocal_gamma(2.0 * a + b);
}

// Alternating derivative convolution sum_{i=0..2k} C(2k,i) (-1)^i E^(i) E^(2k-i),
// the coefficient of y^{2k} (-1)^k / (2k)! in |E(x+iy)|^2.
inline RealResult modulus_series_coeff(const Params& p, double x, int k, double tol = 1e-14) {
  if (k < 0) throw std::invalid_argument("modulus_series_coeff: k must be >= 0");
  const int n = 2 * k;
  const DerivCoeffTable t = deriv_coeffs(p, n);
  std::vector<RealResult> d(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) d[i] = eval_derivative_with(t, x, i, tol);

  // Pascal triangle for exact binomials.
  std::vector<double> binom(static_cast<std::size_t>(n) + 1, 0.0);
  binom[0] = 1.0;
  for (int row = 1; row <= n; ++row) {
    for (int i = row; i >= 1; --i) binom[i] += binom[i - 1];
  }

  double acc = 0.0;
  double err = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double c = ((i % 2) ? -1.0 : 1.0) * binom[i];
    const double term = c * d[i].value * d[n - i].value;
    acc += term;
    err += std::fabs(c) * (std::fabs(d[i].value) * d[n - i].abs_err_est +
                           std::fabs(d[n - i].value) * d[i].abs_err_est) +
           detail::kEps * std::fabs(term);
  }
  return RealResult{acc, err};
}

// Least-squares fit of g(y) = (|E(x+iy)|^2 - E(x)^2) / y^2 to c0 + c1 y^2 over
// the provided y samples; c0 estimates the curvature form at x.
struct LocalExpansionFit {
  double c0;
  double c1;
  double rms_residual;
  bool ill_conditioned;
};

inline LocalExpansionFit local_expansion_check(const Params& p, double x,
                                               const std::vector<double>& ys,
                                               double tol = 1e-14) {
  if (ys.size() < 3) {
    throw std::invalid_argument("local_expansion_check: need at least 3 offsets");
  }
  const EvalResult ex = eval(p, complex(x, 0.0), tol);
  const double ex2 = ex.value.real() * ex.value.real();

  std::vector<double> gs(ys.size()), ws(ys.size());
  double gmax = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double y = ys[i];
    if (!(y > 0.0)) throw std::invalid_argument("local_expansion_check: offsets must be > 0");
    const EvalResult e = eval(p, complex(x, y), tol);
    const double m2 = std::norm(e.value);
    gs[i] = (m2 - ex2) / (y * y);
    ws[i] = y * y;
    gmax = std::max(gmax, std::fabs(gs[i]));
  }

  // Normal equations for the basis {1, y^2}.
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, b0 = 0.0, b1 = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    s0 += 1.0;
    s1 += ws[i];
    s2 += ws[i] * ws[i];
    b0 += gs[i];
    b1 += ws[i] * gs[i];
  }
  const double det = s0 * s2 - s1 * s1;
  LocalExpansionFit fit{0.0, 0.0, 0.0, false};
  if (std::fabs(det) < 1e-30 * std::max(1.0, s0 * s2)) {
    fit.ill_conditioned = true;
    return fit;
  }
  fit.c0 = (b0 * s2 - b1 * s1) / det;
  fit.c1 = (s0 * b1 - s1 * b0) / det;

  double ss = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double r = gs[i] - (fit.c0 + fit.c1 * ws[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / static_cast<double>(ys.size()));
  fit.ill_conditioned = fit.rms_residual > 1e-4 * std::max(gmax, 1e-300);
  return fit;
}

// Ratio sequence u_n = (n+1) Gamma(beta + alpha n) / Gamma(beta + alpha + alpha n).
inline std::vector<double> u_seq(const Params& p, int count) {
  if (count < 1) throw std::invalid_argument("u_seq: count must be >= 1");
  std::vector<double> u(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    const double num = p.beta + p.alpha * n;
    const double den = num + p.alpha;
    if (is_nonpositive_integer(num) || is_nonpositive_integer(den) || num <= 0.0 || den <= 0.0) {
      throw std::invalid_argument("u_seq: gamma argument not positive");
    }
    u[static_cast<std::size_t>(n)] = (n + 1.0) * std::exp(std::lgamma(num) - std::lgamma(den));
  }
  return u;
}

// --- parameter-plane classification ---

enum class IneqLabel { le_holds, ge_holds, ge_conjectured, neither_conjectured, neither };
enum class AdditivityLabel { superadditive, subadditive, neither };

inline const char* ineq_label_name(IneqLabel l) {
  switch (l) {
    case IneqLabel::le_holds: return "le_holds";
    case IneqLabel::ge_holds: return "ge_holds";
    case IneqLabel::ge_conjectured: return "ge_conjectured";
    case IneqLabel::neither_conjectured: return "neither_conjectured";
    case IneqLabel::neither: return "neither";
  }
  return "unknown";
}

inline const char* additivity_label_name(AdditivityLabel l) {
  switch (l) {
    case AdditivityLabel::superadditive: return "superadditive";
    case AdditivityLabel::subadditive: return "subadditive";
    case AdditivityLabel::neither: return "neither";
  }
  return "unknown";
}

struct PointClass {
  IneqLabel ineq;
  AdditivityLabel additivity;
  double h;  // h(alpha) for this alpha
};

// Classification given a precomputed h(alpha) (avoids re-solving per row).
inline PointClass classify_point_with(const Params& p, double h) {
  const double a = p.alpha, b = p.beta;
  PointClass c{IneqLabel::neither, AdditivityLabel::neither, h};

  const bool le = (a <= 1.0 && b >= a);
  const bool ge_proved = (a == 1.0 && b <= 1.0) || (a == 2.0 && b <= 3.0) ||
                         (a >= 2.0 && b <= 2.0 * a - 1.0) || (a >= 4.0 && b <= 2.0 * a);
  if (le) {
    c.ineq = IneqLabel::le_holds;
  } else if (ge_proved) {
    c.ineq = IneqLabel::ge_holds;
  } else if (a > 1.0 && a < 2.0 && b >= a - 1.0 && b <= a) {
    c.ineq = IneqLabel::ge_conjectured;
  } else if (a > 2.0 && b <= h) {
    c.ineq = IneqLabel::neither_conjectured;
  }

  if (a <= 1.0 && b >= h) {
    c.additivity = AdditivityLabel::superadditive;
  } else if (a >= 1.0 && b <= h) {
    c.additivity = AdditivityLabel::subadditive;
  }
  return c;
}

inline PointClass classify_point(const Params& p, double tol = 1e-12) {
  return classify_point_with(p, solve_h(p.alpha, tol).h);
}

struct RegionSample {
  double alpha;
  double beta;
  IneqLabel ineq;
  AdditivityLabel additivity;
  double h;
};

// Dense classification of the (alpha, beta) rectangle, column-parallel.
inline std::vector<RegionSample> region_map(double a_min, double a_max, int na, double b_min,
                                            double b_max, int nb) {
  if (na < 1 || nb < 1 || !(a_min > 0.0) || !(a_min <= a_max) || !(b_min <= b_max)) {
    throw std::invalid_argument("region_map: bad lattice spec");
  }
  std::vector<RegionSample> out(static_cast<std::size_t>(na) * nb);
  parallel_for(static_cast<std::size_t>(na), [&](std::size_t ia) {
    const double a = detail::grid_coord(a_min, a_max, na, static_cast<int>(ia));
    const double h = solve_h(a).h;
    for (int ib = 0; ib < nb; ++ib) {
      const double b = detail::grid_coord(b_min, b_max, nb, ib);
      const PointClass pc = classify_point_with(Params(a, b), h);
      out[ia * static_cast<std::size_t>(nb) + ib] = RegionSample{a, b, pc.ineq, pc.additivity, h};
    }
  });
  return out;
}

}  // namespace mlf
