#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "mlf/eval.hpp"
#include "support/reference.hpp"

using mlf::complex;
using mlf::Params;

namespace {

struct Frozen {
  double alpha, beta;
  complex z;
  complex want;
  double rel_tol;
};

// High-precision reference values computed independently (40+ digit series
// summation with adaptive working precision), rounded to double.
const Frozen kFrozen[] = {
    {0.6, 0.8, {1.3, 0.0}, {8.499622993183190750464, 0.0}, 1e-12},
    {1.2, 1.0, {-60.0, 0.0}, {-0.002973041025665919975493, 0.0}, 5e-11},
    {2.0, 3.2, {-400.0, 0.0}, {0.001803534011430258433259, 0.0}, 5e-10},
    {1.5, 1.0, {15.0, 25.980762113533159403}, {1083.161066174789472674, -83.72801600096407797783}, 1e-10},
    {0.5, 1.0, {-10.0, 0.0}, {0.05614099274382258585752, 0.0}, 1e-12},
    {0.5, 0.75, {-20.0, 0.0}, {0.01427348341474635310273, 0.0}, 1e-12},
    {1.3, 0.9, {1.7, 0.0}, {3.692832438007397209241, 0.0}, 1e-12},
    {1.5, 1.0, {30.0, 0.0}, {10398.63296310415241567, 0.0}, 1e-12},
    {1.5, 1.5, {50.0, 0.0}, {141862.7479198349751207, 0.0}, 1e-12},
    {0.8, 2.0, {-15.0, 0.0}, {0.07052108063331782737941, 0.0}, 1e-11},
    {1.0, 3.0, {-19.0, 4.0}, {0.04797050566303176605378, 0.009540628569682951059549}, 1e-12},
    {4.0, 8.0, {-25.0, 0.0}, {0.000197786873522363291882, 0.0}, 1e-11},
    {2.0, 3.0, {-30.0, 30.0}, {-0.1075004950803964883956, -0.05498760400915277247058}, 1e-12},
    {0.4, 1.0, {11.0, 0.0}, {4.84566351280501892126e174, 0.0}, 1e-10},
    {0.4, 1.0, {-11.0, 0.0}, {0.05913491512934045619622, 0.0}, 1e-11},
    {3.0, 12.1, {-5.0, 2.0}, {1.957045789172339608154e-8, 1.750983343831330520605e-11}, 1e-11},
};

}  // namespace

TEST_CASE("eval reproduces frozen high-precision references", "[eval]") {
  for (const auto& f : kFrozen) {
    const auto r = mlf::eval(Params(f.alpha, f.beta), f.z);
    const double diff = std::abs(r.value - f.want);
    const double scale = std::abs(f.want);
    INFO("alpha=" << f.alpha << " beta=" << f.beta << " z=(" << f.z.real() << "," << f.z.imag()
                  << ") got=(" << r.value.real() << "," << r.value.imag() << ")");
    CHECK(diff <= f.rel_tol * scale);
    // The self-reported error bound must also cover the true error.
    CHECK(diff <= 5.0 * r.abs_err_est + 1e-300);
  }
}

TEST_CASE("eval dispatches closed forms for the six special pairs", "[eval]") {
  const complex z(1.7, -0.9);
  struct Case {
    double alpha, beta;
    complex want;
  };
  const complex w = std::sqrt(z);
  const Case cases[] = {
      {1.0, 1.0, std::exp(z)},
      {1.0, 0.0, z * std::exp(z)},
      {2.0, 1.0, std::cosh(w)},
      {2.0, 2.0, std::sinh(w) / w},
      {2.0, 3.0, (std::cosh(w) - 1.0) / z},
      {2.0, 4.0, (std::sinh(w) / w - 1.0) / z},
  };
  for (const auto& c : cases) {
    const auto r = mlf::eval(Params(c.alpha, c.beta), z);
    CHECK(r.method == mlf::Method::closed_form);
    CHECK(std::abs(r.value - c.want) <= 1e-14 * std::abs(c.want) + 1e-300);
  }
  // closed_form() itself reports values only for the special pairs.
  CHECK(mlf::closed_form(Params(2.0, 3.0), z).has_value());
  CHECK_FALSE(mlf::closed_form(Params(2.0, 3.5), z).has_value());
  CHECK_FALSE(mlf::closed_form(Params(1.5, 1.0), z).has_value());
}

TEST_CASE("closed forms stay accurate near the removable point z = 0", "[eval]") {
  for (double m : {1e-7, 1e-5, 9.9e-5, 1.1e-4, 1e-3}) {
    for (double b : {2.0, 3.0, 4.0}) {
      const complex z(m, 0.5 * m);
      const auto got = mlf::eval(Params(2.0, b), z);
      const auto want = ref::ml_series(2.0L, b, ref::cld(z.real(), z.imag()));
      const double diff = std::abs(got.value - complex(static_cast<double>(want.value.real()),
                                                       static_cast<double>(want.value.imag())));
      CHECK(diff <= 1e-13 * std::abs(got.value));
    }
  }
}

TEST_CASE("beta = 0 reduces to z times the (alpha, alpha) value", "[eval][property]") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> ua(0.4, 3.0);
  std::uniform_real_distribution<double> ur(0.0, 8.0);
  std::uniform_real_distribution<double> uth(-3.14159, 3.14159);
  for (int i = 0; i < 100; ++i) {
    const double a = ua(rng);
    const complex z = std::polar(ur(rng), uth(rng));
    const auto lhs = mlf::eval(Params(a, 0.0), z);
    const auto rhs = mlf::eval(Params(a, a), z);
    const double diff = std::abs(lhs.value - z * rhs.value);
    CHECK(diff <= 5.0 * (lhs.abs_err_est + std::abs(z) * rhs.abs_err_est) + 1e-300);
  }
}

TEST_CASE("series and asymptotic backends agree on an overlap band", "[eval][property]") {
  // Just below the switch radius both backends are usable; their results must
  // agree within combined error estimates.
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> uth(-3.14159, 3.14159);
  for (double a : {0.6, 1.0, 1.4, 2.0}) {
    const double r0 = mlf::switch_radius(a);
    for (int i = 0; i < 40; ++i) {
      const double rad = r0 * (1.02 + 0.3 * (i / 40.0));
      const complex z = std::polar(rad, uth(rng));
      mlf::EvalResult s{{0, 0}, 0, mlf::Method::series};
      try {
        s = mlf::eval_series(Params(a, 1.1), z);
      } catch (const mlf::NonFiniteError&) {
        continue;  // dominant exponential too large for the series in double
      }
      const auto asy = mlf::eval_asymptotic(Params(a, 1.1), z);
      const double diff = std::abs(s.value - asy.value);
      INFO("alpha=" << a << " |z|=" << rad << " arg=" << std::arg(z));
      CHECK(diff <= 5.0 * (s.abs_err_est + asy.abs_err_est) + 1e-300);
    }
  }
}

TEST_CASE("asymptotic entry point enforces its validity radius", "[eval]") {
  CHECK_THROWS_AS(mlf::eval_asymptotic(Params(1.0, 1.0), complex(3.0, 0.0)),
                  mlf::DomainTooSmallError);
  CHECK_THROWS_AS(mlf::eval_asymptotic(Params(2.0, 1.0), complex(0.0, 0.0)),
                  mlf::DomainTooSmallError);
  CHECK_THROWS_AS(mlf::eval_asymptotic(Params(1.5, 1.5), complex(50.0, 0.0)),
                  mlf::DomainTooSmallError);
  // Above the radius it agrees with the series, which has no cancellation on
  // the positive axis and is therefore trustworthy to machine precision.
  const double r0 = mlf::switch_radius(1.5);
  CHECK(r0 <= 250.0);
  const auto asy = mlf::eval_asymptotic(Params(1.5, 1.5), complex(250.0, 0.0));
  const auto ser = mlf::eval_series(Params(1.5, 1.5), complex(250.0, 0.0));
  CHECK(std::abs(asy.value - ser.value) <= 5.0 * (asy.abs_err_est + ser.abs_err_est));
  CHECK(asy.value.real() > 0.0);
}

TEST_CASE("eval rejects invalid inputs", "[eval]") {
  CHECK_THROWS_AS(Params(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params(std::nan(""), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(mlf::eval(Params(1.0, 1.0), complex(std::nan(""), 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(mlf::eval(Params(1.0, 1.0), complex(1.0, 0.0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(mlf::eval(Params(0.3, 1.0), complex(100.0, 0.0)), mlf::NonFiniteError);
}

TEST_CASE("duplication identity links alpha and alpha/2", "[eval][property]") {
  // E_{a,b}(z) = (E_{a/2,b}(sqrt z) + E_{a/2,b}(-sqrt z)) / 2.
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> ua(0.8, 3.0);
  std::uniform_real_distribution<double> ub(0.3, 6.0);
  std::uniform_real_distribution<double> ux(-7.0, 7.0);
  for (int i = 0; i < 100; ++i) {
    const double a = ua(rng);
    const double b = ub(rng);
    const complex z(ux(rng), 0.0);
    const complex w = std::sqrt(z);
    const auto whole = mlf::eval(Params(a, b), z);
    const auto p1 = mlf::eval(Params(a / 2.0, b), w);
    const auto p2 = mlf::eval(Params(a / 2.0, b), -w);
    const complex rhs = 0.5 * (p1.value + p2.value);
    const double budget =
        5.0 * (whole.abs_err_est + 0.5 * (p1.abs_err_est + p2.abs_err_est)) + 1e-300;
    INFO("a=" << a << " b=" << b << " x=" << z.real());
    CHECK(std::abs(whole.value - rhs) <= budget);
  }
}

TEST_CASE("eval stays accurate across the negative axis for alpha near 2", "[eval]") {
  // Strong cancellation region. Where the raw series is still usable in
  // double, check it against the oscillatory closed form; past that, hold the
  // dispatcher to frozen 50-digit reference values (the long-double series
  // oracle itself drowns in rounding noise out here).
  for (double x : {100.0, 400.0}) {
    const auto r = mlf::eval_series(Params(2.0, 2.0), complex(-x, 0.0), 1e-14);
    const double want = std::sin(std::sqrt(x)) / std::sqrt(x);
    CHECK(std::fabs(r.value.real() - want) <= 5.0 * r.abs_err_est + 1e-300);
  }
  const struct {
    double x, want;
  } frozen[] = {
      {100.0, -0.03121998602403808572933},
      {900.0, -0.02360620500436440794727},
      {2500.0, -0.005504511102612936790503},
      {10000.0, -0.003996245166326383799668},
  };
  for (const auto& f : frozen) {
    const auto d = mlf::eval(Params(2.0, 2.1), complex(-f.x, 0.0));
    const double diff = std::fabs(d.value.real() - f.want);
    INFO("x=" << f.x << " got " << d.value.real() << " err est " << d.abs_err_est);
    CHECK(diff <= 5.0 * d.abs_err_est + 1e-11 * std::fabs(f.want));
    CHECK(std::fabs(d.value.imag()) <= 5.0 * d.abs_err_est + 1e-11 * std::fabs(f.want));
  }
}
