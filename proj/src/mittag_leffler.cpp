#include "fracdev/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracdev {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLogMax = 709.782712893384;  // log(DBL_MAX)

// Series / positive-asymptotic switch point; chosen by overlap testing
// against a high-precision reference, 25 keeps both branches well inside
// their accurate ranges for every nu in (0, 1].
constexpr double kSeriesSwitch = 25.0;

// Negative axis in terms of y = |x|^{1/nu}: plain compensated series below
// kNegSeriesMaxY (cancellation <= e^9 ~ 8e3 swallows at most ~4 digits),
// algebraic expansion above kNegExpansionMinY (optimal truncation error
// ~ e^{-34}), spectral integral in between.
constexpr double kNegSeriesMaxY = 9.0;
constexpr double kNegExpansionMinY = 34.0;

// sin(pi * w) with argument reduction performed on w, not on pi*w.
double sin_pi(double w) {
  const double n = std::nearbyint(w);
  const double d = w - n;  // |d| <= 0.5
  const double s = std::sin(kPi * d);
  return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

// 1 / Gamma(z) for any real z; zero at the poles z = 0, -1, -2, ...
double rgamma(double z) {
  if (z > 0.5) {
    if (z < 171.0) return 1.0 / std::tgamma(z);
    // 1/Gamma underflows fast; go through lgamma.
    const double lg = std::lgamma(z);
    return lg > kLogMax ? 0.0 : std::exp(-lg);
  }
  // Reflection: 1/Gamma(z) = Gamma(1-z) sin(pi z) / pi. Near-integer z gives
  // sin_pi -> 0 and hence the exact zero at the poles.
  const double s = sin_pi(z);
  if (s == 0.0) return 0.0;
  const double omz = 1.0 - z;
  if (omz < 171.0) return std::tgamma(omz) * s / kPi;
  const double lg = std::lgamma(omz);
  if (lg + std::log(std::fabs(s) / kPi) > kLogMax)
    return s > 0 ? std::numeric_limits<double>::infinity()
                 : -std::numeric_limits<double>::infinity();
  return std::exp(lg) * s / kPi;
}

struct NeumaierSum {
  double s = 0.0;
  double c = 0.0;
  void add(double v) {
    const double t = s + v;
    if (std::fabs(s) >= std::fabs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  double result() const { return s + c; }
};

struct SeriesOut {
  double sum;
  double first_neglected;
  double max_abs_term;
  bool converged;
};

// Taylor series sum_{k>=0} x^k / Gamma(nu k + 1). Terms are formed in log
// space so each carries only a few ulps of relative error regardless of its
// magnitude; the compensated sum then controls accumulation.
SeriesOut ml_series(double nu, double x) {
  NeumaierSum acc;
  acc.add(1.0);
  if (x == 0.0) return {1.0, 0.0, 1.0, true};
  const double log_ax = std::log(std::fabs(x));
  const bool negative = x < 0.0;
  double max_abs = 1.0;
  double term = 0.0;
  for (int k = 1; k <= 100000; ++k) {
    const double lt = k * log_ax - std::lgamma(nu * k + 1.0);
    term = std::exp(lt);
    if (negative && (k & 1)) term = -term;
    const double at = std::fabs(term);
    max_abs = std::max(max_abs, at);
    // Terms rise then fall; safe to stop only on the falling flank.
    if (at <= kEps * std::fabs(acc.result()) && nu * k > std::fabs(x) + 1.0)
      return {acc.result(), at, max_abs, true};
    acc.add(term);
  }
  return {acc.result(), std::fabs(term), max_abs, false};
}

struct ExpansionOut {
  double sum;        // A(x) = sum_{k>=1} x^{-k} / Gamma(1 - nu k)
  double next_term;  // envelope bound on the first term dropped
};

// Algebraic tail series, truncated at its smallest term (it is asymptotic,
// not convergent). The sin(pi nu k) factor inside 1/Gamma(1 - nu k) makes
// raw term magnitudes oscillate, so the divergence onset is detected on the
// smooth envelope |x|^{-k} Gamma(nu k) / pi instead.
ExpansionOut algebraic_tail(double nu, double x) {
  const double log_az = std::log(std::fabs(x));
  const double inv = 1.0 / x;
  double pw = 1.0;
  NeumaierSum acc;
  double prev_env = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 120; ++k) {
    const double env =
        std::exp(-k * log_az + std::lgamma(nu * k)) / kPi;
    if (env >= prev_env) return {acc.result(), env};
    pw *= inv;
    acc.add(pw * rgamma(1.0 - nu * k));
    prev_env = env;
    if (env <= kEps * std::fabs(acc.result())) return {acc.result(), env};
  }
  return {acc.result(), prev_env};
}

struct QuadOut {
  double value;
  double err;
};

template <typename F>
void adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                      double fb, double whole, double tol, int depth,
                      QuadOut& out) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    out.value += left + right + delta / 15.0;
    out.err += std::fabs(delta) / 15.0;
    return;
  }
  adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, out);
  adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, out);
}

// E_nu(x) for x < 0 via the spectral representation (Gorenflo, Loutchko,
// Luchko 2002): E_nu(x) = int_0^inf K(r) dr with, for the one-parameter
// function,
//   K(r) = -(x sin(pi nu) / (pi nu)) e^{-r^{1/nu}}
//          / (r^2 - 2 r x cos(pi nu) + x^2).
// The integrand is positive, so there is no cancellation.
QuadOut ml_negative_integral(double nu, double x) {
  const double s = sin_pi(nu);
  const double c = std::cos(kPi * nu);
  const double scale = -x * s / (kPi * nu);
  const auto kernel = [&](double r) {
    const double d = (r - x * c) * (r - x * c) + x * x * s * s;
    return scale * std::exp(-std::pow(r, 1.0 / nu)) / d;
  };
  // Truncation radius from the GLL error bound at eps ~ 1e-17.
  const double r1 =
      std::max({1.0, 2.0 * std::fabs(x), std::pow(39.8, nu)});
  // Magnitude estimate (leading algebraic term plus the spectral peak that
  // carries the exponential part as nu -> 1) to anchor the tolerance.
  const double mag = std::fabs(rgamma(1.0 - nu) / x) +
                     std::exp(-std::pow(-x, 1.0 / nu)) / nu;
  const double tol = mag * 1e-14 + 1e-300;
  const double fa = kernel(0.0);
  const double fm = kernel(0.5 * r1);
  const double fb = kernel(r1);
  const double whole = r1 / 6.0 * (fa + 4.0 * fm + fb);
  QuadOut out{0.0, 0.0};
  adaptive_simpson(kernel, 0.0, r1, fa, fm, fb, whole, tol, 48, out);
  out.err += std::exp(-std::pow(r1, 1.0 / nu));  // tail bound
  return out;
}

MlEvalResult finish(double log_value, MlMethod method, double est_abs_err) {
  // value is defined as exp(log_value) so the pair stays consistent to a
  // rounding error even at extreme magnitudes.
  return {std::exp(log_value), log_value, method, est_abs_err};
}

void check_order(MlOrder order) {
  if (!(order.nu > 0.0) || !(order.nu <= 1.0) || !std::isfinite(order.nu))
    throw std::invalid_argument("mittag-leffler: nu must be in (0, 1]");
}

// Shared core: log E_nu(x) plus branch bookkeeping. overflow_ok tells the
// caller whether a value beyond double range is acceptable (log form).
MlEvalResult ml_core(MlOrder order, double x, bool overflow_ok) {
  const double nu = order.nu;

  if (x == 0.0) return {1.0, 0.0, MlMethod::series, 0.0};

  if (nu == 1.0) {
    if (x > kLogMax && !overflow_ok)
      throw std::overflow_error(
          "ml_eval: E_1(x) = e^x exceeds double range; use ml_log_eval");
    return {std::exp(x), x, MlMethod::series, std::exp(x) * 2.0 * kEps};
  }

  if (x > 0.0) {
    const double y = std::pow(x, 1.0 / nu);
    if (x <= kSeriesSwitch && y < kLogMax - 2.0) {
      const SeriesOut s = ml_series(nu, x);
      const double lv = std::log(s.sum);
      return finish(lv, MlMethod::series,
                    s.first_neglected + 4.0 * kEps * s.sum);
    }
    // log E = y - log nu + log1p(-nu e^{-y} A(x)), A the algebraic tail.
    const ExpansionOut tail = algebraic_tail(nu, x);
    const double corr = (y < kLogMax) ? -nu * std::exp(-y) * tail.sum : 0.0;
    const double lv = y - std::log(nu) + std::log1p(corr);
    if (!overflow_ok && lv > kLogMax)
      throw std::overflow_error(
          "ml_eval: E_nu(x) exceeds double range; use ml_log_eval");
    const double value = std::exp(lv);
    double est = std::isfinite(value)
                     ? value * (nu * std::exp(-y) * tail.next_term + 4.0 * kEps)
                     : 0.0;
    MlEvalResult r = finish(lv, MlMethod::asymptotic_positive, est);
    if (!overflow_ok && !std::isfinite(r.value))
      throw std::overflow_error(
          "ml_eval: E_nu(x) exceeds double range; use ml_log_eval");
    return r;
  }

  // x < 0. The series and the expansion both self-report their error; each
  // is used only when its estimate clears the accuracy budget, and the
  // spectral integral covers whatever remains.
  const double y = std::pow(-x, 1.0 / nu);
  if (y <= kNegSeriesMaxY) {
    const SeriesOut s = ml_series(nu, x);
    // 30 eps per term covers the log-space term formation noise as well as
    // the summation itself.
    const double cancel_err = 30.0 * kEps * s.max_abs_term;
    if (s.converged && s.sum > 0.0 && cancel_err <= 1e-11 * s.sum) {
      return finish(std::log(s.sum), MlMethod::series,
                    s.first_neglected + cancel_err);
    }
  }
  if (y >= kNegExpansionMinY) {
    const ExpansionOut tail = algebraic_tail(nu, x);
    const double v = -tail.sum;  // E_nu(x) ~ -A(x), x -> -inf
    if (v > 0.0 && tail.next_term <= 1e-11 * v)
      return finish(std::log(v), MlMethod::asymptotic_negative,
                    tail.next_term);
  }
  const QuadOut q = ml_negative_integral(nu, x);
  return finish(std::log(q.value), MlMethod::asymptotic_negative, q.err);
}

}  // namespace

const char* to_string(MlMethod m) {
  switch (m) {
    case MlMethod::series:
      return "series";
    case MlMethod::asymptotic_positive:
      return "asymptotic_positive";
    case MlMethod::asymptotic_negative:
      return "asymptotic_negative";
  }
  return "?";
}

MlEvalResult ml_eval(MlOrder order, double x) {
  check_order(order);
  if (!std::isfinite(x))
    throw std::invalid_argument("ml_eval: x must be finite");
  return ml_core(order, x, /*overflow_ok=*/false);
}

double ml_log_eval(MlOrder order, double x) {
  check_order(order);
  if (!std::isfinite(x))
    throw std::invalid_argument("ml_log_eval: x must be finite");
  return ml_core(order, x, /*overflow_ok=*/true).log_value;
}

}  // namespace fracdev
