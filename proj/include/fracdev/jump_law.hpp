#ifndef FRACDEV_JUMP_LAW_HPP
#define FRACDEV_JUMP_LAW_HPP

#include <string>
#include <variant>

#include "fracdev/rng.hpp"

namespace fracdev {

// Light-tailed jump distributions. Every variant exposes its mean, variance
// and moment generating function; mgf() returns +infinity outside the
// finiteness domain rather than throwing, so callers can probe freely.

struct DegenerateJump {
  double value = 1.0;
};

struct GaussianJump {
  double mean = 0.0;
  double variance = 1.0;
};

struct UniformJump {
  double lo = -1.0;
  double hi = 1.0;
};

struct TwoPointJump {
  double value_a = 1.0;
  double value_b = -1.0;
  double prob_a = 0.5;
};

struct ExponentialJump {
  double rate = 1.0;  // mgf finite for theta < rate
};

using JumpLaw = std::variant<DegenerateJump, GaussianJump, UniformJump,
                             TwoPointJump, ExponentialJump>;

// Throws std::invalid_argument when a variant's parameters are out of range
// (variance < 0, rate <= 0, prob_a outside [0,1], lo > hi).
void validate_jump(const JumpLaw& law);

double jump_mean(const JumpLaw& law);
double jump_variance(const JumpLaw& law);

// E[e^{theta X}]; +infinity outside the finiteness domain.
double jump_mgf(const JumpLaw& law, double theta);

// Supremum of the finiteness domain of the mgf (+infinity except for
// ExponentialJump, where it is the rate). The infimum is -infinity for
// every bundled law.
double jump_mgf_domain_sup(const JumpLaw& law);

double sample_jump(const JumpLaw& law, RngState& rng);

// Mini-language: "deg:c", "gauss:mean,var", "unif:a,b",
// "twopoint:va,vb,pa", "exp:rate". Throws std::invalid_argument on
// malformed input.
JumpLaw parse_jump(const std::string& spec);

std::string jump_to_string(const JumpLaw& law);

}  // namespace fracdev

#endif  // FRACDEV_JUMP_LAW_HPP
