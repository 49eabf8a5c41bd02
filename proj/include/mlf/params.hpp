#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace mlf {

using complex = std::complex<double>;

namespace detail {
constexpr double kEps = 2.220446049250313e-16;  // DBL_EPSILON
constexpr double kLogOverflow = 708.0;          // ~log(DBL_MAX)
}  // namespace detail

// Thrown when an evaluation would overflow or produce a non-finite value.
class NonFiniteError : public std::runtime_error {
 public:
  explicit NonFiniteError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the asymptotic backend when |z| is below its validity radius.
class DomainTooSmallError : public std::runtime_error {
 public:
  explicit DomainTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by root solvers when the initial interval does not bracket a sign change.
class BracketFailureError : public std::runtime_error {
 public:
  explicit BracketFailureError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iteration fails to meet its tolerance within its budget.
class NoConvergenceError : public std::runtime_error {
 public:
  explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a contour integral passes too close to a zero to be trusted.
class ContourThroughZeroError : public std::runtime_error {
 public:
  explicit ContourThroughZeroError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter pair (alpha, beta). alpha must be positive; beta is any real.
struct Params {
  double alpha;
  double beta;

  Params(double a, double b) : alpha(a), beta(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0) {
      throw std::invalid_argument("Params: alpha must be finite and > 0, beta finite");
    }
  }
};

enum class Method { series, asymptotic, closed_form };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::asymptotic: return "asymptotic";
    case Method::closed_form: return "closed_form";
  }
  return "unknown";
}

// Value plus a running bound on the absolute error committed while computing it.
struct EvalResult {
  complex value;
  double abs_err_est;
  Method method;
};

// Real-argument variant (used by derivative and sign machinery).
struct RealResult {
  double value;
  double abs_err_est;
};

}  // namespace mlf
