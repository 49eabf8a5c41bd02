#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "mlf/eval.hpp"
#include "mlf/params.hpp"

namespace mlf {

struct RealZero {
  double location;
  double half_width;   // final bracket half-width of the refinement
  int multiplicity;    // 1 for a sign change, 2 for a grazing (double) zero
};

struct Rect {
  double re_min, re_max, im_min, im_max;
};

// Scan step tuned to the local spacing of real zeros; for alpha <= 1 (or near
// the removable sin singularity) a unit step is used. Clamped to [1e-3, 1].
inline double default_scan_step(const Params& p, double abs_x) {
  if (p.alpha <= 1.0) return 1.0;
  const double s = std::sin(detail::kPi / p.alpha);
  if (s < 1e-9) return 1.0;
  const double d = p.alpha * detail::kPi * std::pow(std::max(abs_x, 1e-6), 1.0 - 1.0 / p.alpha) / s;
  return std::clamp(d, 1e-3, 1.0);
}

namespace detail {

inline double eval_real(const Params& p, double x, double tol = 1e-13) {
  return eval(p, complex(x, 0.0), tol).value.real();
}

// Bisection refinement of a bracketed sign change.
inline RealZero refine_bracket(const Params& p, double lo, double hi, double flo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = eval_real(p, mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    const double width = hi - lo;
    if (width <= 1e-12 * std::max(std::fabs(lo), std::fabs(hi)) + 1e-14) break;
  }
  return RealZero{0.5 * (lo + hi), 0.5 * (hi - lo), 1};
}

// Golden-section minimization of |E| on [lo, hi]; returns the final abscissa.
inline double minimize_abs(const Params& p, double lo, double hi) {
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = std::fabs(eval_real(p, x1));
  double f2 = std::fabs(eval_real(p, x2));
  for (int it = 0; it < 160 && (b - a) > 1e-13 * (std::fabs(a) + 1.0); ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = std::fabs(eval_real(p, x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = std::fabs(eval_real(p, x2));
    }
  }
  return 0.5 * (a + b);
}

}  // namespace detail

// Walk the interval [x_min, x_max] on the negative real axis and locate real
// zeros: sign changes refine by bisection; local minima of |E| that dip below
// 1e-9 without a sign change register as double zeros, and minima that reveal
// a hidden sign flip split into two simple zeros. Result sorted by location.
inline std::vector<RealZero> real_zero_scan(const Params& p, double x_min, double x_max,
                                            double step_hint = 0.0) {
  if (!(x_min < x_max) || x_max > 0.0) {
    throw std::invalid_argument("real_zero_scan: require x_min < x_max <= 0");
  }
  std::vector<RealZero> out;

  double x_prev = x_max;
  double f_prev = detail::eval_real(p, x_prev);
  // Previous-but-one sample for the local-minimum test.
  double x_pp = 0.0, f_pp = 0.0;
  bool have_pp = false;

  double x = x_max;
  while (x > x_min) {
    const double step = step_hint > 0.0 ? step_hint : default_scan_step(p, std::fabs(x));
    x = std::max(x_min, x - step);
    const double f = detail::eval_real(p, x);

    if ((f < 0.0) != (f_prev < 0.0) && f != 0.0 && f_prev != 0.0) {
      out.push_back(detail::refine_bracket(p, x, x_prev, f));
    } else if (f_prev == 0.0) {
      out.push_back(RealZero{x_prev, 0.0, 1});
    } else if (have_pp && std::fabs(f_prev) < std::fabs(f_pp) &&
               std::fabs(f_prev) < std::fabs(f) && (f_pp < 0.0) == (f < 0.0)) {
      // |E| has an interior minimum on [x, x_pp] with equal edge signs:
      // either a near-miss, a double zero, or a pair of simple zeros.
      const double xm = detail::minimize_abs(p, x, x_pp);
      const double fm = detail::eval_real(p, xm);
      if (fm != 0.0 && (fm < 0.0) != (f < 0.0)) {
        out.push_back(detail::refine_bracket(p, x, xm, f));
        out.push_back(detail::refine_bracket(p, xm, x_pp, fm));
      } else if (std::fabs(fm) < 1e-9) {
        out.push_back(RealZero{xm, 1e-13 * (std::fabs(xm) + 1.0), 2});
      }
    }

    x_pp = x_prev;
    f_pp = f_prev;
    have_pp = true;
    x_prev = x;
    f_prev = f;
  }

  std::sort(out.begin(), out.end(),
            [](const RealZero& a, const RealZero& b) { return a.location < b.location; });
  return out;
}

// Zero closest to the origin on (x_floor, 0), if any.
inline std::optional<RealZero> first_negative_zero(const Params& p, double x_floor,
                                                   double step_hint = 0.0) {
  if (!(x_floor < 0.0)) throw std::invalid_argument("first_negative_zero: x_floor must be < 0");
  const auto zs = real_zero_scan(p, x_floor, -1e-12, step_hint);
  if (zs.empty()) return std::nullopt;
  return zs.back();
}

// Number of zeros (with multiplicity) inside an axis-aligned rectangle, by the
// argument principle: the winding number of E over the boundary. Edges are
// subdivided until the phase step between samples is below pi/2.
inline int count_zeros_rect(const Params& p, const Rect& r, int base_samples = 32) {
  if (!(r.re_min < r.re_max) || !(r.im_min < r.im_max)) {
    throw std::invalid_argument("count_zeros_rect: degenerate rectangle");
  }
  if (base_samples < 2) base_samples = 2;

  const complex corners[5] = {
      complex(r.re_min, r.im_min), complex(r.re_max, r.im_min), complex(r.re_max, r.im_max),
      complex(r.re_min, r.im_max), complex(r.re_min, r.im_min)};

  long evals = 0;
  constexpr long kMaxEvals = 1 << 20;
  const auto sample = [&](complex z) -> complex {
    if (++evals > kMaxEvals) {
      throw ContourThroughZeroError(
          "count_zeros_rect: contour refinement exhausted (zero on or near the boundary)");
    }
    const complex v = eval(p, z).value;
    if (std::abs(v) < 1e-13) {
      throw ContourThroughZeroError("count_zeros_rect: |E| vanishes on the contour");
    }
    return v;
  };

  double total_phase = 0.0;
  // Recursive bisection of a segment until each phase increment is < pi/2.
  const auto phase_of = [&](auto&& self, complex z0, complex z1, complex v0, complex v1,
                            int depth) -> double {
    const double dphi = std::arg(v1 / v0);
    if (std::fabs(dphi) < 1.5707963267948966 && depth > 0) return dphi;
    if (depth > 48) {
      throw ContourThroughZeroError("count_zeros_rect: phase refinement stalled");
    }
    const complex zm = 0.5 * (z0 + z1);
    const complex vm = sample(zm);
    return self(self, z0, zm, v0, vm, depth + 1) + self(self, zm, z1, vm, v1, depth + 1);
  };

  for (int e = 0; e < 4; ++e) {
    const complex z0 = corners[e], z1 = corners[e + 1];
    complex prev_z = z0;
    complex prev_v = sample(z0);
    for (int s = 1; s <= base_samples; ++s) {
      const double t = static_cast<double>(s) / base_samples;
      const complex z = z0 + t * (z1 - z0);
      const complex v = sample(z);
      total_phase += phase_of(phase_of, prev_z, z, prev_v, v, 0);
      prev_z = z;
      prev_v = v;
    }
  }

  const double windings = total_phase / (2.0 * detail::kPi);
  const long n = std::lround(windings);
  if (std::fabs(windings - n) > 0.25 || n < 0) {
    throw ContourThroughZeroError("count_zeros_rect: winding number failed to close");
  }
  return static_cast<int>(n);
}

struct ZeroClassification {
  int rect_count;                 // zeros in the rectangle, with multiplicity
  std::vector<RealZero> real_zeros;  // real zeros found inside the rectangle
  int nonreal_count;              // rect_count minus real multiplicities
};

// Combine the rectangle count with a real-axis scan to split real from
// non-real zeros. Non-real zeros come in conjugate pairs, so for rectangles
// symmetric about the real axis the difference is even.
inline ZeroClassification classify_zero_reality(const Params& p, const Rect& r,
                                                double step_hint = 0.0) {
  ZeroClassification c{};
  c.rect_count = count_zeros_rect(p, r);
  if (r.im_min <= 0.0 && r.im_max >= 0.0 && r.re_min < 0.0) {
    const double hi = std::min(r.re_max, -1e-12);
    if (r.re_min < hi) {
      for (const auto& z : real_zero_scan(p, r.re_min, hi, step_hint)) {
        c.real_zeros.push_back(z);
      }
    }
  }
  int real_mult = 0;
  for (const auto& z : c.real_zeros) real_mult += z.multiplicity;
  c.nonreal_count = c.rect_count - real_mult;
  return c;
}

}  // namespace mlf
