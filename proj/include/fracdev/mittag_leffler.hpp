#ifndef FRACDEV_MITTAG_LEFFLER_HPP
#define FRACDEV_MITTAG_LEFFLER_HPP

#include <string>

namespace fracdev {

// One-parameter Mittag-Leffler function E_nu(x) = sum_k x^k / Gamma(nu k + 1)
// on the real line, for orders nu in (0, 1]. nu = 1 reduces to exp(x).
//
// Branch layout (MlMethod records which one fired):
//   * series              Taylor series with term-ratio stopping; used for
//                         0 <= x <= X_SWITCH and for small negative x. Terms
//                         alternate for x < 0, so the sum is compensated and
//                         the branch is abandoned once the cancellation
//                         estimate exceeds the error budget.
//   * asymptotic_negative the non-series negative-axis machinery: the
//                         Gorenflo-Loutchko-Luchko spectral integral on the
//                         mid range, switching to the algebraic expansion
//                         -sum_k x^{-k} / Gamma(1 - nu k) once |x|^{1/nu} is
//                         large enough for optimal truncation to reach full
//                         precision.
//   * asymptotic_positive exponential leading term e^{x^{1/nu}} / nu with
//                         algebraic corrections, evaluated in log space.
//
// Accuracy: relative error <= 1e-10 for |x| <= 50 and nu in (0, 1]. Beyond
// that the branches still apply but degrade: for nu > 0.95 the negative-axis
// integrand develops a narrow peak and one to two digits are lost, and for
// very large |x| the expansion is limited by its optimal truncation level.

struct MlOrder {
  double nu;  // requires 0 < nu <= 1
};

enum class MlMethod { series, asymptotic_positive, asymptotic_negative };

const char* to_string(MlMethod m);

struct MlEvalResult {
  double value;        // E_nu(x)
  double log_value;    // log E_nu(x); value == exp(log_value) by construction
  MlMethod method;
  double est_abs_err;  // heuristic truncation estimate, not certified
};

// Throws std::invalid_argument for bad nu or non-finite x, and
// std::overflow_error when E_nu(x) exceeds double range (use ml_log_eval).
MlEvalResult ml_eval(MlOrder order, double x);

// log E_nu(x). Never overflows for x > 0; delegates to ml_eval below the
// asymptotic switch point. As x -> +inf the result approaches
// x^{1/nu} - log(nu).
double ml_log_eval(MlOrder order, double x);

}  // namespace fracdev

#endif  // FRACDEV_MITTAG_LEFFLER_HPP
