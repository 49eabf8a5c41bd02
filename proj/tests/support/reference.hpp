#pragma once

// Independent reference implementations used only by the tests. Everything here
// runs in long double and is deliberately written as directly as possible (plain
// term-by-term sums, bisection, Simpson quadrature) so it shares no code paths
// with the library under test.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>

namespace ref {

using cld = std::complex<long double>;

constexpr long double kEpsL = 1.084202172485504434e-19L;  // LDBL_EPSILON

struct SeriesResult {
  cld value;
  long double cancellation;  // eps * sum |t_k|, the oracle's own noise floor
};

// Plain power series in long double. Suitable while the largest term stays well
// below the long-double cancellation budget; `cancellation` reports the floor.
inline SeriesResult ml_series(long double alpha, long double beta, cld z, int max_terms = 4000) {
  cld sum(0.0L, 0.0L);
  cld zpow(1.0L, 0.0L);
  long double abs_sum = 0.0L;
  long double prev = std::numeric_limits<long double>::infinity();
  int settled = 0;
  for (int k = 0; k < max_terms; ++k) {
    const long double g = alpha * k + beta;
    const bool pole = (g <= 0.0L && g == std::floor(g));
    if (!pole) {
      const long double lg = std::lgamma(g);
      long double sgn = 1.0L;
      if (g < 0.0L) {
        const long double fl = std::floor(g);
        sgn = (std::fmod(fl, 2.0L) == 0.0L) ? 1.0L : -1.0L;
      }
      const cld term = zpow * (sgn * std::exp(-lg));
      sum += term;
      const long double m = std::abs(term);
      abs_sum += m;
      if (m < prev && m <= kEpsL * abs_sum * 0.01L) {
        if (++settled >= 4) {
          return SeriesResult{sum, kEpsL * abs_sum};
        }
      } else {
        settled = 0;
      }
      prev = m;
    }
    zpow *= z;
    if (!std::isfinite(zpow.real()) || !std::isfinite(zpow.imag())) {
      throw std::runtime_error("ref::ml_series: power overflow");
    }
  }
  throw std::runtime_error("ref::ml_series: no convergence in term budget");
}

// Termwise-differentiated series: d^i/dz^i sum z^k/Gamma(alpha k + beta).
inline SeriesResult ml_deriv_series(long double alpha, long double beta, long double x, int order,
                                    int max_terms = 4000) {
  long double sum = 0.0L;
  long double abs_sum = 0.0L;
  long double prev = std::numeric_limits<long double>::infinity();
  int settled = 0;
  for (int k = order; k < max_terms + order; ++k) {
    const long double g = alpha * k + beta;
    const bool pole = (g <= 0.0L && g == std::floor(g));
    if (!pole) {
      const long double lg = std::lgamma(g);
      long double sgn = 1.0L;
      if (g < 0.0L) {
        const long double fl = std::floor(g);
        sgn = (std::fmod(fl, 2.0L) == 0.0L) ? 1.0L : -1.0L;
      }
      // k (k-1) ... (k-order+1) * x^{k-order} / Gamma(alpha k + beta)
      long double fall = 0.0L;
      for (int j = 0; j < order; ++j) fall += std::log((long double)(k - j));
      const long double lx = (k == order) ? 0.0L : (k - order) * std::log(std::fabs(x));
      long double xsgn = 1.0L;
      if (x < 0.0L && ((k - order) % 2 != 0)) xsgn = -1.0L;
      const long double term = sgn * xsgn * std::exp(fall + lx - lg);
      sum += term;
      const long double m = std::fabs(term);
      abs_sum += m;
      if (m < prev && m <= kEpsL * abs_sum * 0.01L) {
        if (++settled >= 4) return SeriesResult{cld(sum, 0.0L), kEpsL * abs_sum};
      } else {
        settled = 0;
      }
      prev = m;
    }
    if (x == 0.0L && k > order) break;
  }
  if (x == 0.0L) return SeriesResult{cld(sum, 0.0L), kEpsL * abs_sum};
  throw std::runtime_error("ref::ml_deriv_series: no convergence in term budget");
}

// log 2 + 2 lgamma(x+y) - lgamma(y) - lgamma(2x+y), long double.
inline long double h_fn(long double x, long double y) {
  return std::log(2.0L) + 2.0L * std::lgamma(x + y) - std::lgamma(y) -
         std::lgamma(2.0L * x + y);
}

// Bisection solve of h_fn = 0 in y for fixed x > 0.
inline long double solve_h(long double x) {
  long double lo = std::min(1e-15L, x * 1e-8L);
  long double hi = 10.0L * std::max(x, x * x) + 1.0L;
  if (!(h_fn(x, lo) < 0.0L) || !(h_fn(x, hi) > 0.0L)) {
    throw std::runtime_error("ref::solve_h: bracket failure");
  }
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (h_fn(x, mid) < 0.0L) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

// Adaptive Simpson quadrature on [a, b].
inline long double simpson(const std::function<long double(long double)>& f, long double a,
                           long double b, long double tol, int depth = 0) {
  const long double c = 0.5L * (a + b);
  const long double fa = f(a), fb = f(b), fc = f(c);
  const long double d = 0.5L * (a + c), e = 0.5L * (c + b);
  const long double fd = f(d), fe = f(e);
  const long double coarse = (b - a) / 6.0L * (fa + 4.0L * fc + fb);
  const long double fine =
      (b - a) / 12.0L * (fa + 4.0L * fd + 2.0L * fc + 4.0L * fe + fb);
  if (depth > 40) return fine;
  if (std::fabs(fine - coarse) <= 15.0L * tol) return fine + (fine - coarse) / 15.0L;
  const long double half = tol * 0.5L;
  return simpson(f, a, c, half, depth + 1) + simpson(f, c, b, half, depth + 1);
}

// Simple deterministic bisection root finder for test brackets.
inline long double bisect(const std::function<long double(long double)>& f, long double lo,
                          long double hi) {
  long double flo = f(lo);
  if (!(flo * f(hi) < 0.0L)) throw std::runtime_error("ref::bisect: no sign change");
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (mid == lo || mid == hi) break;
    const long double fm = f(mid);
    if ((fm < 0.0L) == (flo < 0.0L)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

}  // namespace ref
