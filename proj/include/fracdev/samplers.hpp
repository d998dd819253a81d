#ifndef FRACDEV_SAMPLERS_HPP
#define FRACDEV_SAMPLERS_HPP

#include <cstdint>

#include "fracdev/jump_law.hpp"
#include "fracdev/rng.hpp"

namespace fracdev {

// (nu, lambda) of the fractional Poisson clock.
struct ProcessParams {
  double nu;      // in (0, 1)
  double lambda;  // > 0, events per unit time
};

// Throws std::invalid_argument unless 0 < nu < 1 and lambda > 0.
void validate_params(const ProcessParams& params);

// One draw of the standard one-sided nu-stable subordinator at time 1,
// normalized so E[exp(-s S)] = exp(-s^nu). Kanter's representation: exact
// and rejection-free, evaluated in log space for stability. Always > 0.
double sample_stable_subordinator(double nu, RngState& rng);

// One draw of the inverse stable subordinator L_nu(t), realized through the
// marginal identity L_nu(t) =d (t / S_nu(1))^nu.
double sample_inverse_stable(double nu, double t, RngState& rng);

// Poisson(mean) count; inversion by search for small means, Hormann's PTRS
// transformed rejection for large ones.
std::uint64_t sample_poisson(double mean, RngState& rng);

// Fractional Poisson count N_{nu,lambda}(t): Poisson(lambda * L_nu(t)).
std::uint64_t sample_fractional_poisson(const ProcessParams& params, double t,
                                        RngState& rng);

// Compound value S_{nu,lambda}(t) = sum of N i.i.d. jumps. Degenerate jumps
// collapse to N * c; Gaussian jumps are aggregated in one shot as
// Normal(N mean, N variance) unless one_shot_gaussian is false.
double sample_compound(const ProcessParams& params, const JumpLaw& jump,
                       double t, RngState& rng, bool one_shot_gaussian = true);

// Classical (nu = 1) compound Poisson draw: Poisson(lambda t) count, then
// jumps. Used by comparison experiments; the fractional params type keeps
// nu strictly inside (0, 1).
double sample_compound_classical(double lambda, const JumpLaw& jump, double t,
                                 RngState& rng);

// t^exponent * S_{nu,lambda}(t) / t. Caller supplies the scaling exponent
// (alpha(nu) for the weak-convergence regime, alpha(nu)(1-beta) for the
// moderate-deviation regime collapsed onto one multiplier).
double sample_scaled(const ProcessParams& params, const JumpLaw& jump,
                     double t, double exponent, RngState& rng);

}  // namespace fracdev

#endif  // FRACDEV_SAMPLERS_HPP
