#include "fracdev/rate_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracdev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kThetaCap = 1e6;  // unboundedness detection threshold
constexpr int kMaxIterations = 400;

struct Maximizer {
  double value;
  std::optional<double> argmax;
  int iterations;
  std::pair<double, double> bracket;
};

// Golden-section maximization of a concave objective on [lo, hi].
Maximizer golden_max(const std::function<double(double)>& f, double lo,
                     double hi, double tol, int used_iters) {
  constexpr double kInvPhi = 0.61803398874989484820;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int iters = used_iters;
  while (b - a > tol) {
    if (++iters > kMaxIterations)
      throw std::runtime_error(
          "legendre_transform: iteration cap reached before convergence");
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  double fm = f(xm);
  // Keep the best point seen in case the midpoint lands on an infinite
  // plateau edge.
  if (f1 > fm) fm = f1;
  if (f2 > fm) fm = f2;
  return {fm, xm, iters, {lo, hi}};
}

// Concave maximization over [left_limit, right_limit] with doubling bracket
// expansion from [-1, 1] (clamped to the limits). Reports +infinity when the
// objective is still increasing at the cap on an unclamped side.
Maximizer maximize_concave(const std::function<double(double)>& f,
                           double left_limit, double right_limit, double tol) {
  int iters = 0;
  const auto grows_at = [&](double edge, double inner) {
    const double fe = f(edge);
    const double fi = f(inner);
    return fe > fi && std::isfinite(fe);
  };

  double hi = std::min(1.0, right_limit);
  while (hi < right_limit && hi < kThetaCap && grows_at(hi, 0.5 * hi)) {
    hi = std::min({2.0 * hi, right_limit, kThetaCap});
    ++iters;
  }
  if (hi >= kThetaCap && grows_at(kThetaCap, 0.5 * kThetaCap))
    return {kInf, std::nullopt, iters, {-kThetaCap, kThetaCap}};

  double lo = std::max(-1.0, left_limit);
  while (lo > left_limit && lo > -kThetaCap && grows_at(lo, 0.5 * lo)) {
    lo = std::max({2.0 * lo, left_limit, -kThetaCap});
    ++iters;
  }
  if (lo <= -kThetaCap && grows_at(-kThetaCap, -0.5 * kThetaCap))
    return {kInf, std::nullopt, iters, {-kThetaCap, kThetaCap}};

  return golden_max(f, lo, hi, tol, iters);
}

}  // namespace

LegendreResult legendre_transform(const std::function<double(double)>& cgf,
                                  double x, double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("legendre_transform: tol must be > 0");
  const auto objective = [&](double theta) {
    const double c = cgf(theta);
    return std::isinf(c) ? -kInf : theta * x - c;
  };
  Maximizer m = maximize_concave(objective, -kInf, kInf, tol);
  // theta = 0 always yields 0, so the sup is nonnegative; clamp the rounding
  // dust from the solver.
  if (m.argmax && m.value < 0.0 && m.value > -1e-12) m.value = 0.0;
  return {m.value, m.argmax, m.iterations, m.bracket};
}

LegendreResult legendre_transform(const CgfLimit& cgf, double x, double tol) {
  return legendre_transform(
      std::function<double(double)>([&cgf](double t) { return cgf(t); }), x,
      tol);
}

double rate_LD(const ProcessParams& params, const JumpLaw& jump, double x) {
  const CgfLimit cgf = cgf_limit_LD(params, jump);
  return legendre_transform(cgf, x).value;
}

double rate_LD_renewal_form(double nu, double lambda, double x) {
  validate_params(ProcessParams{nu, lambda});
  if (x == 0.0) return 0.0;
  if (x < 0.0) return kInf;
  const auto objective = [&](double eta) {
    if (eta >= 0.0) return eta == 0.0 ? 0.0 : -kInf;
    return eta / x - interarrival_cgf(nu, lambda, eta);
  };
  Maximizer m = maximize_concave(objective, -kInf, 0.0, 1e-12);
  if (!m.argmax) return kInf;  // not reachable for x > 0; kept for safety
  return x * std::max(m.value, 0.0);
}

double rate_MD_closed(double nu, double lambda, double mu, double sigma2,
                      double x) {
  validate_params(ProcessParams{nu, lambda});
  if (mu == 0.0) {
    if (!(sigma2 > 0.0))
      throw std::invalid_argument("rate_MD_closed: mu = 0 requires sigma2 > 0");
    const double e = 1.0 / (2.0 - nu);
    const double h = 0.5 * nu;
    const double coeff = std::pow(h, nu * e) - std::pow(h, 2.0 * e);
    return coeff * std::pow(2.0 * x * x / (lambda * sigma2), e);
  }
  if (mu > 0.0 ? x < 0.0 : x > 0.0) return kInf;
  const double e = 1.0 / (1.0 - nu);
  const double coeff = std::pow(nu, nu * e) - std::pow(nu, e);
  return coeff * std::pow(x / (lambda * mu), e);
}

double optimal_theta_MD(double nu, double lambda, double mu, double sigma2,
                        double x) {
  validate_params(ProcessParams{nu, lambda});
  if (mu == 0.0) {
    if (!(sigma2 > 0.0))
      throw std::invalid_argument(
          "optimal_theta_MD: mu = 0 requires sigma2 > 0");
    if (x == 0.0) return 0.0;
    const double mag = std::pow(2.0 / (lambda * sigma2), 1.0 / (2.0 - nu)) *
                       std::pow(0.5 * nu * std::fabs(x), nu / (2.0 - nu));
    return x > 0.0 ? mag : -mag;
  }
  if (mu > 0.0 ? x < 0.0 : x > 0.0)
    throw std::domain_error("optimal_theta_MD: rate is infinite at this x");
  if (x == 0.0) return 0.0;
  if (mu > 0.0)
    return std::pow(nu * x, nu / (1.0 - nu)) /
           std::pow(lambda * mu, 1.0 / (1.0 - nu));
  return -std::pow(-nu * x, nu / (1.0 - nu)) /
         std::pow(-lambda * mu, 1.0 / (1.0 - nu));
}

double rate_MD_reflect(double nu, double lambda, double mu, double x) {
  if (mu == 0.0)
    throw std::invalid_argument("rate_MD_reflect: requires mu != 0");
  return rate_MD_closed(nu, lambda, -mu, 0.0, -x);
}

}  // namespace fracdev
