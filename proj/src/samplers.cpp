#include "fracdev/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdev {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Mean below which Poisson sampling uses cumulative inversion.
constexpr double kPoissonInversionCutoff = 30.0;

std::uint64_t poisson_inversion(double mean, RngState& rng) {
  const double u = rng.uniform01();
  double p = std::exp(-mean);
  double cum = p;
  std::uint64_t k = 0;
  while (u > cum) {
    ++k;
    p *= mean / static_cast<double>(k);
    cum += p;
    if (k > 200) break;  // cum has saturated numerically by here for mean < 30
  }
  return k;
}

// Hormann (1993) PTRS transformed rejection, valid for mean >= 10.
std::uint64_t poisson_ptrs(double mean, RngState& rng) {
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform01() - 0.5;
    const double v = rng.uniform01();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs =
        std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = kf * log_mean - mean - std::lgamma(kf + 1.0);
    if (lhs <= rhs) return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace

void validate_params(const ProcessParams& params) {
  if (!(params.nu > 0.0 && params.nu < 1.0))
    throw std::invalid_argument("process params: nu must be in (0, 1)");
  if (!(params.lambda > 0.0) || !std::isfinite(params.lambda))
    throw std::invalid_argument("process params: lambda must be > 0");
}

double sample_stable_subordinator(double nu, RngState& rng) {
  if (!(nu > 0.0 && nu < 1.0))
    throw std::invalid_argument("stable subordinator: nu must be in (0, 1)");
  const double u = kPi * rng.uniform_open();
  const double e = rng.exponential();
  const double ratio = (1.0 - nu) / nu;
  const double log_s = std::log(std::sin(nu * u)) +
                       ratio * std::log(std::sin((1.0 - nu) * u)) -
                       std::log(std::sin(u)) / nu - ratio * std::log(e);
  return std::exp(log_s);
}

double sample_inverse_stable(double nu, double t, RngState& rng) {
  if (!(t > 0.0))
    throw std::invalid_argument("inverse stable: t must be > 0");
  const double s = sample_stable_subordinator(nu, rng);
  return std::exp(nu * (std::log(t) - std::log(s)));
}

std::uint64_t sample_poisson(double mean, RngState& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("poisson: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  if (mean < kPoissonInversionCutoff) return poisson_inversion(mean, rng);
  return poisson_ptrs(mean, rng);
}

std::uint64_t sample_fractional_poisson(const ProcessParams& params, double t,
                                        RngState& rng) {
  validate_params(params);
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  if (t == 0.0) return 0;
  const double ell = sample_inverse_stable(params.nu, t, rng);
  return sample_poisson(params.lambda * ell, rng);
}

double sample_compound(const ProcessParams& params, const JumpLaw& jump,
                       double t, RngState& rng, bool one_shot_gaussian) {
  validate_jump(jump);
  const std::uint64_t n = sample_fractional_poisson(params, t, rng);
  if (n == 0) return 0.0;
  if (const auto* d = std::get_if<DegenerateJump>(&jump))
    return static_cast<double>(n) * d->value;
  if (one_shot_gaussian) {
    if (const auto* g = std::get_if<GaussianJump>(&jump)) {
      const double dn = static_cast<double>(n);
      return dn * g->mean + std::sqrt(dn * g->variance) * rng.normal();
    }
  }
  double sum = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) sum += sample_jump(jump, rng);
  return sum;
}

double sample_compound_classical(double lambda, const JumpLaw& jump, double t,
                                 RngState& rng) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  validate_jump(jump);
  const std::uint64_t n = sample_poisson(lambda * t, rng);
  if (n == 0) return 0.0;
  if (const auto* d = std::get_if<DegenerateJump>(&jump))
    return static_cast<double>(n) * d->value;
  if (const auto* g = std::get_if<GaussianJump>(&jump)) {
    const double dn = static_cast<double>(n);
    return dn * g->mean + std::sqrt(dn * g->variance) * rng.normal();
  }
  double sum = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) sum += sample_jump(jump, rng);
  return sum;
}

double sample_scaled(const ProcessParams& params, const JumpLaw& jump,
                     double t, double exponent, RngState& rng) {
  if (!(t > 0.0)) throw std::invalid_argument("sample_scaled: t must be > 0");
  const double multiplier = std::pow(t, exponent);
  return multiplier * sample_compound(params, jump, t, rng) / t;
}

}  // namespace fracdev
