#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fracdev/mittag_leffler.hpp"
#include "ml_reference.hpp"

using fracdev::ml_eval;
using fracdev::ml_log_eval;
using fracdev::MlEvalResult;
using fracdev::MlMethod;
using fracdev::MlOrder;

namespace {

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

// E_{1/2}(x) = e^{x^2} erfc(-x); std::erfc is independent of the library.
double half_order_oracle(double x) { return std::exp(x * x) * std::erfc(-x); }

}  // namespace

TEST_CASE("E_nu(0) is exactly 1") {
  for (double nu : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
    const MlEvalResult r = ml_eval(MlOrder{nu}, 0.0);
    CHECK(r.value == 1.0);
    CHECK(r.log_value == 0.0);
  }
}

TEST_CASE("nu = 1 reduces to exp on [-20, 20]") {
  for (double x = -20.0; x <= 20.0; x += 0.5) {
    const MlEvalResult r = ml_eval(MlOrder{1.0}, x);
    CHECK(rel_err(r.value, std::exp(x)) <= 1e-12);
  }
}

TEST_CASE("half-order identity on [-5, 5]") {
  for (double x = -5.0; x <= 5.0; x += 0.25) {
    const MlEvalResult r = ml_eval(MlOrder{0.5}, x);
    CHECK(rel_err(r.value, half_order_oracle(x)) <= 1e-8);
  }
}

TEST_CASE("spot values") {
  CHECK(rel_err(ml_eval(MlOrder{1.0}, 1.0).value, std::exp(1.0)) <= 1e-13);
  CHECK(ml_eval(MlOrder{0.5}, 0.0).value == 1.0);
  // E_{1/2}(1) ~ 5.00898
  CHECK(rel_err(ml_eval(MlOrder{0.5}, 1.0).value, half_order_oracle(1.0)) <=
        1e-10);
  CHECK(ml_eval(MlOrder{0.5}, 1.0).value == doctest::Approx(5.00898).epsilon(1e-5));
  // E_{1/2}(-10) = e^{100} erfc(10); leading order 1/(10 sqrt(pi)) ~ 0.0564
  const double v = ml_eval(MlOrder{0.5}, -10.0).value;
  CHECK(rel_err(v, half_order_oracle(-10.0)) <= 1e-10);
  CHECK(std::fabs(v * 10.0 * std::sqrt(M_PI) - 1.0) < 0.01);
}

TEST_CASE("high-precision reference across branches") {
  const std::vector<double> nus = {0.3, 0.5, 0.7, 0.8, 0.9, 0.95};
  const std::vector<double> xs_neg = {-0.5, -1.0, -2.0, -3.0,  -5.0,
                                      -8.0, -12.0, -20.0, -30.0, -50.0};
  const std::vector<double> xs_pos = {0.25, 1.0,  2.0,  5.0,  10.0,
                                      20.0, 24.9, 25.5, 30.0, 40.0};
  for (double nu : nus) {
    for (double x : xs_neg) {
      const double y = std::pow(-x, 1.0 / nu);
      if (y > 600.0) continue;
      const double want = testutil::ml_reference(nu, x);
      const MlEvalResult r = ml_eval(MlOrder{nu}, x);
      INFO("nu=", nu, " x=", x, " method=", to_string(r.method));
      CHECK(rel_err(r.value, want) <= 1e-10);
      CHECK(std::fabs(std::exp(r.log_value) - r.value) <=
            8.0 * std::numeric_limits<double>::epsilon() * r.value);
      CHECK(r.est_abs_err >= 0.0);
    }
    for (double x : xs_pos) {
      const double y = std::pow(x, 1.0 / nu);
      if (y > 600.0) continue;
      const double want = testutil::ml_reference(nu, x);
      const MlEvalResult r = ml_eval(MlOrder{nu}, x);
      INFO("nu=", nu, " x=", x, " method=", to_string(r.method));
      CHECK(rel_err(r.value, want) <= 1e-10);
      CHECK(std::fabs(std::exp(r.log_value) - r.value) <=
            8.0 * std::numeric_limits<double>::epsilon() * r.value);
    }
  }
}

TEST_CASE("log form matches reference below the overflow line") {
  for (double nu : {0.5, 0.8}) {
    for (double x : {1.0, 5.0, 20.0, 26.0, 40.0, 80.0, 120.0}) {
      const double y = std::pow(x, 1.0 / nu);
      if (y > 600.0) continue;
      const double want = testutil::ml_log_reference(nu, x);
      const double got = ml_log_eval(MlOrder{nu}, x);
      INFO("nu=", nu, " x=", x);
      CHECK(std::fabs(got - want) <= 1e-10 * std::max(1.0, std::fabs(want)));
    }
  }
}

TEST_CASE("branch tags record what fired") {
  CHECK(ml_eval(MlOrder{0.5}, 0.1).method == MlMethod::series);
  CHECK(ml_eval(MlOrder{0.5}, -1.0).method == MlMethod::series);
  CHECK(ml_eval(MlOrder{0.5}, 26.0).method == MlMethod::asymptotic_positive);
  // y = 100 >= 34: algebraic expansion
  CHECK(ml_eval(MlOrder{0.5}, -10.0).method == MlMethod::asymptotic_negative);
  // y = 12.9 in (9, 34): spectral integral, same tag
  CHECK(ml_eval(MlOrder{0.9}, -10.0).method == MlMethod::asymptotic_negative);
}

TEST_CASE("strict monotonicity on a grid") {
  for (double nu : {0.3, 0.6, 0.9}) {
    const double x_max = std::min(24.0, 0.9 * std::pow(700.0, nu));
    double prev = -1.0;  // E_nu > 0 everywhere
    bool first = true;
    for (double x = -30.0; x <= x_max; x += 0.5) {
      const double v = ml_eval(MlOrder{nu}, x).value;
      if (!first) CHECK(v > prev);
      prev = v;
      first = false;
    }
  }
}

TEST_CASE("positive-tail asymptotic ratio within 1%") {
  for (double nu : {0.3, 0.5, 0.8}) {
    const double x = std::pow(600.0, nu);  // largest comfortably testable
    const double y = std::pow(x, 1.0 / nu);
    const double ratio = std::exp(std::log(nu) + ml_log_eval(MlOrder{nu}, x) - y);
    CHECK(std::fabs(ratio - 1.0) <= 0.01);
  }
}

TEST_CASE("negative tail vanishes") {
  for (double nu : {0.3, 0.5, 0.8}) {
    const double v = ml_eval(MlOrder{nu}, -1e4).value;
    CHECK(v > 0.0);
    CHECK(v < 1e-3);
  }
}

TEST_CASE("overflow is signalled, log form still works") {
  CHECK_THROWS_AS(ml_eval(MlOrder{0.3}, 50.0), std::overflow_error);
  const double y = std::pow(50.0, 1.0 / 0.3);
  const double lv = ml_log_eval(MlOrder{0.3}, 50.0);
  CHECK(std::fabs(lv - (y - std::log(0.3))) <= 1e-9 * y);
}

TEST_CASE("log-form examples") {
  CHECK(std::fabs(ml_log_eval(MlOrder{1.0}, 100.0) - 100.0) <= 1e-10);
  CHECK(std::fabs(ml_log_eval(MlOrder{0.5}, 30.0) - (900.0 + std::log(2.0))) <=
        1e-9);
  const double want = std::pow(1000.0, 1.25) - std::log(0.8);
  CHECK(std::fabs(ml_log_eval(MlOrder{0.8}, 1000.0) - want) <= 1e-9 * want);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(ml_eval(MlOrder{0.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ml_eval(MlOrder{1.2}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ml_eval(MlOrder{-0.5}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ml_eval(MlOrder{0.5}, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(
      ml_log_eval(MlOrder{0.5}, std::numeric_limits<double>::infinity()),
      std::invalid_argument);
}
