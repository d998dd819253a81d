#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fracdev/asymptotic_kernels.hpp"
#include "fracdev/mittag_leffler.hpp"

using namespace fracdev;

namespace {
const JumpLaw kUnit = DegenerateJump{1.0};
}

TEST_CASE("mgf_inverse_stable") {
  CHECK(mgf_inverse_stable(0.5, 1.0, 0.0) == 1.0);
  CHECK(mgf_inverse_stable(0.5, 1.0, 1.0) ==
        doctest::Approx(std::exp(1.0) * std::erfc(-1.0)).epsilon(1e-10));
  const double arg = -std::pow(2.0, 0.7);
  CHECK(mgf_inverse_stable(0.7, 2.0, -1.0) ==
        ml_eval(MlOrder{0.7}, arg).value);
}

TEST_CASE("mgf_compound") {
  SUBCASE("theta = 0 gives 1") {
    for (double nu : {0.3, 0.7})
      for (double t : {0.5, 2.0})
        CHECK(mgf_compound(ProcessParams{nu, 2.0}, kUnit, t, 0.0) == 1.0);
  }
  SUBCASE("nu = 1 classical reduction: E_1(1) = e") {
    CHECK(mgf_compound(ProcessParams{1.0, 1.0}, kUnit, 1.0, std::log(2.0)) ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  }
  SUBCASE("domain error at the mgf boundary") {
    CHECK_THROWS_AS(mgf_compound(ProcessParams{0.5, 1.0},
                                 JumpLaw{ExponentialJump{1.0}}, 1.0, 1.0),
                    std::domain_error);
  }
}

TEST_CASE("alpha exponent") {
  CHECK(alpha_exponent(0.5, 0.0) == 0.75);
  CHECK(alpha_exponent(0.5, 1.0) == 0.5);
  CHECK(alpha_exponent(0.9, -2.0) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK_THROWS_AS(alpha_exponent(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("LD kernel") {
  const CgfLimit cgf = cgf_limit_LD(ProcessParams{0.5, 1.0}, kUnit);
  CHECK(cgf(0.0) == 0.0);
  CHECK(cgf(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cgf(-1.0) == 0.0);  // M_X < 1

  const CgfLimit g = cgf_limit_LD(ProcessParams{0.5, 1.0},
                                  JumpLaw{GaussianJump{0.0, 1.0}});
  const double want = std::pow(std::exp(0.125) - 1.0, 2.0);
  CHECK(g(-0.5) == doctest::Approx(want).epsilon(1e-12));

  const CgfLimit e = cgf_limit_LD(ProcessParams{0.5, 1.0},
                                  JumpLaw{ExponentialJump{1.0}});
  CHECK(std::isinf(e(1.0)));
  CHECK(std::isinf(e(2.0)));
  CHECK(e(0.5) == doctest::Approx(1.0).epsilon(1e-12));  // (1/(1-t)-1)^2 at 0.5
}

TEST_CASE("MD kernels") {
  const CgfLimit zero = cgf_limit_MD(0.5, 1.0, 0.0, 2.0);
  CHECK(zero.kind() == CgfKind::md_mu_zero);
  CHECK(zero(0.0) == 0.0);
  CHECK(zero(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(zero(-1.0) == doctest::Approx(1.0).epsilon(1e-14));

  const CgfLimit pos = cgf_limit_MD(0.5, 1.0, 1.0, 0.0);
  CHECK(pos.kind() == CgfKind::md_mu_pos);
  CHECK(pos(-3.0) == 0.0);
  CHECK(pos(0.0) == 0.0);
  CHECK(pos(2.0) == doctest::Approx(4.0).epsilon(1e-14));

  const CgfLimit neg = cgf_limit_MD(0.5, 1.0, -1.0, 0.0);
  CHECK(neg.kind() == CgfKind::md_mu_neg);
  CHECK(neg(-1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(neg(1.0) == 0.0);

  CHECK_THROWS_AS(cgf_limit_MD(0.5, 1.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("classical nu=1 kernel") {
  const CgfLimit u = cgf_classical_nu1(1.0, kUnit);
  CHECK(u(0.0) == 0.0);
  CHECK(u(1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  const CgfLimit e = cgf_classical_nu1(1.0, JumpLaw{ExponentialJump{1.0}});
  CHECK(std::isinf(e(1.5)));
}

TEST_CASE("interarrival cgf and its inverse") {
  CHECK(std::fabs(interarrival_cgf(0.5, 1.0, -1e-12)) < 2e-6);
  CHECK(interarrival_cgf(0.5, 1.0, -1.0) ==
        doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK_THROWS_AS(interarrival_cgf(0.5, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(interarrival_cgf(0.5, 1.0, 1.0), std::domain_error);

  CHECK(psi_kappa(0.5, 1.0, std::log(2.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(psi_kappa(0.5, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(psi_kappa(0.5, 1.0, -1.0), std::domain_error);
}

TEST_CASE("psi_kappa coincides with the LD kernel for unit jumps") {
  for (double nu : {0.3, 0.5, 0.8}) {
    for (double lambda : {1.0, 2.0}) {
      const CgfLimit cgf = cgf_limit_LD(ProcessParams{nu, lambda}, kUnit);
      for (double theta = 0.05; theta <= 3.0; theta += 0.05) {
        const double a = psi_kappa(nu, lambda, theta);
        const double b = cgf(theta);
        CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)));
      }
    }
  }
}

TEST_CASE("Gartner-Ellis trend: (1/t) log mgf -> LD kernel") {
  const ProcessParams p{0.5, 1.0};
  const CgfLimit cgf = cgf_limit_LD(p, kUnit);
  for (double theta : {0.5, 1.0}) {
    double prev = std::numeric_limits<double>::infinity();
    double gap = prev;
    for (double t : {10.0, 100.0, 1000.0, 10000.0}) {
      const double lim = log_mgf_compound(p, kUnit, t, theta) / t;
      gap = std::fabs(lim - cgf(theta));
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(gap < 0.05);
  }
}

TEST_CASE("MD-regime consistency trend") {
  // a_t log E_nu(lambda (M_X(theta / (a_t t)^{1-alpha}) - 1) t^nu) tends to
  // the MD kernel; beta = 0.5.
  const double beta = 0.5;
  SUBCASE("mu = 0") {
    const ProcessParams p{0.5, 1.0};
    const JumpLaw law = GaussianJump{0.0, 2.0};
    const CgfLimit md = cgf_limit_MD(0.5, 1.0, 0.0, 2.0);
    const double alpha = alpha_exponent(0.5, 0.0);
    const double theta = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    double gap = prev;
    for (double t : {1e2, 1e4, 1e6, 1e8}) {
      const double a_t = std::pow(t, -beta);
      const double sub = theta / std::pow(a_t * t, 1.0 - alpha);
      const double val = a_t * log_mgf_compound(p, law, t, sub);
      gap = std::fabs(val - md(theta));
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(gap < 0.05);
  }
  SUBCASE("mu > 0") {
    const ProcessParams p{0.5, 1.0};
    const CgfLimit md = cgf_limit_MD(0.5, 1.0, 1.0, 0.0);
    const double alpha = alpha_exponent(0.5, 1.0);
    const double theta = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    double gap = prev;
    for (double t : {1e2, 1e4, 1e6, 1e8}) {
      const double a_t = std::pow(t, -beta);
      const double sub = theta / std::pow(a_t * t, 1.0 - alpha);
      const double val = a_t * log_mgf_compound(p, kUnit, t, sub);
      gap = std::fabs(val - md(theta));
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(gap < 0.05);
  }
}

TEST_CASE("scaling regime validator") {
  for (double beta : {0.001, 0.25, 0.5, 0.99})
    CHECK_NOTHROW(make_scaling_regime(0.5, 0.0, beta));
  for (double beta : {-0.1, 0.0, 1.0, 1.5})
    CHECK_THROWS_AS(make_scaling_regime(0.5, 0.0, beta),
                    std::invalid_argument);
  const ScalingRegime r = make_scaling_regime(0.5, 0.0, 0.5);
  CHECK(r.alpha == 0.75);
  // a_t -> 0 and t a_t -> infinity
  double prev_a = 1.0, prev_ta = 0.0;
  for (double t : {10.0, 100.0, 1000.0}) {
    CHECK(r.a(t) < prev_a);
    CHECK(t * r.a(t) > prev_ta);
    prev_a = r.a(t);
    prev_ta = t * r.a(t);
  }
}

TEST_CASE("kernel convexity and zero at the origin (grid)") {
  std::vector<CgfLimit> kernels;
  kernels.push_back(cgf_limit_LD(ProcessParams{0.5, 1.0}, kUnit));
  kernels.push_back(
      cgf_limit_LD(ProcessParams{0.7, 2.0}, JumpLaw{GaussianJump{0.0, 1.0}}));
  kernels.push_back(cgf_limit_MD(0.5, 1.0, 0.0, 2.0));
  kernels.push_back(cgf_limit_MD(0.3, 1.0, 1.0, 0.0));
  kernels.push_back(cgf_limit_MD(0.8, 2.0, -1.0, 0.0));
  kernels.push_back(cgf_classical_nu1(1.0, kUnit));
  for (const auto& cgf : kernels) {
    CHECK(cgf(0.0) == 0.0);
    for (double a = -2.0; a < 2.0; a += 0.125) {
      const double b = a + 0.25;
      const double mid = cgf(0.5 * (a + b));
      const double chord = 0.5 * (cgf(a) + cgf(b));
      CHECK(mid <= chord + 1e-12 * std::max(1.0, std::fabs(chord)));
    }
  }
}
