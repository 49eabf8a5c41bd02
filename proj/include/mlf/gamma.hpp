#pragma once

#include <cmath>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

namespace mlf {

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// log|Gamma(x)|; +inf at the poles (x = 0, -1, -2, ...).
inline double log_abs_gamma(double x) { return std::lgamma(x); }

// Sign of Gamma(x): +1 for x > 0, 0 at poles, alternating on (-n-1, -n).
inline int gamma_sign(double x) {
  if (x > 0.0) return 1;
  if (is_nonpositive_integer(x)) return 0;
  const double f = std::floor(x);
  // Gamma is positive on (-2,-1), (-4,-3), ...; negative on (-1,0), (-3,-2), ...
  return (std::fmod(f, 2.0) == 0.0) ? 1 : -1;
}

// 1/Gamma(x), entire: exactly 0 at the poles of Gamma.
inline double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 0.0 && x < 170.0) return 1.0 / std::tgamma(x);
  if (x < 0.0 && x > -170.0) return 1.0 / std::tgamma(x);
  const double r = std::exp(-std::lgamma(x));  // underflows to 0 for huge x
  return gamma_sign(x) * r;
}

inline double digamma(double x) { return boost::math::digamma(x); }
inline double trigamma(double x) { return boost::math::trigamma(x); }

}  // namespace mlf
