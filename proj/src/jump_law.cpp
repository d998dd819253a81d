#include "fracdev/jump_law.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fracdev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sinh(u)/u with a series branch to avoid 0/0 and cancellation near u = 0.
double sinhc(double u) {
  const double au = std::fabs(u);
  if (au < 1e-4) {
    const double u2 = u * u;
    return 1.0 + u2 / 6.0 * (1.0 + u2 / 20.0);
  }
  return std::sinh(u) / u;
}

}  // namespace

void validate_jump(const JumpLaw& law) {
  std::visit(
      [](const auto& j) {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, GaussianJump>) {
          if (!(j.variance >= 0.0))
            throw std::invalid_argument("gaussian jump: variance must be >= 0");
        } else if constexpr (std::is_same_v<T, UniformJump>) {
          if (!(j.lo <= j.hi))
            throw std::invalid_argument("uniform jump: requires lo <= hi");
        } else if constexpr (std::is_same_v<T, TwoPointJump>) {
          if (!(j.prob_a >= 0.0 && j.prob_a <= 1.0))
            throw std::invalid_argument("twopoint jump: prob_a must be in [0,1]");
        } else if constexpr (std::is_same_v<T, ExponentialJump>) {
          if (!(j.rate > 0.0))
            throw std::invalid_argument("exponential jump: rate must be > 0");
        }
      },
      law);
  if (!std::isfinite(jump_mean(law)))
    throw std::invalid_argument("jump law: non-finite parameter");
}

double jump_mean(const JumpLaw& law) {
  return std::visit(
      [](const auto& j) -> double {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, DegenerateJump>) return j.value;
        if constexpr (std::is_same_v<T, GaussianJump>) return j.mean;
        if constexpr (std::is_same_v<T, UniformJump>) return 0.5 * (j.lo + j.hi);
        if constexpr (std::is_same_v<T, TwoPointJump>)
          return j.prob_a * j.value_a + (1.0 - j.prob_a) * j.value_b;
        if constexpr (std::is_same_v<T, ExponentialJump>) return 1.0 / j.rate;
      },
      law);
}

double jump_variance(const JumpLaw& law) {
  return std::visit(
      [](const auto& j) -> double {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, DegenerateJump>) return 0.0;
        if constexpr (std::is_same_v<T, GaussianJump>) return j.variance;
        if constexpr (std::is_same_v<T, UniformJump>) {
          const double w = j.hi - j.lo;
          return w * w / 12.0;
        }
        if constexpr (std::is_same_v<T, TwoPointJump>) {
          const double d = j.value_a - j.value_b;
          return j.prob_a * (1.0 - j.prob_a) * d * d;
        }
        if constexpr (std::is_same_v<T, ExponentialJump>)
          return 1.0 / (j.rate * j.rate);
      },
      law);
}

double jump_mgf(const JumpLaw& law, double theta) {
  return std::visit(
      [theta](const auto& j) -> double {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, DegenerateJump>)
          return std::exp(theta * j.value);
        if constexpr (std::is_same_v<T, GaussianJump>)
          return std::exp(theta * j.mean + 0.5 * j.variance * theta * theta);
        if constexpr (std::is_same_v<T, UniformJump>) {
          const double mid = 0.5 * (j.lo + j.hi);
          const double half = 0.5 * (j.hi - j.lo);
          return std::exp(theta * mid) * sinhc(theta * half);
        }
        if constexpr (std::is_same_v<T, TwoPointJump>)
          return j.prob_a * std::exp(theta * j.value_a) +
                 (1.0 - j.prob_a) * std::exp(theta * j.value_b);
        if constexpr (std::is_same_v<T, ExponentialJump>) {
          if (theta >= j.rate) return kInf;
          return j.rate / (j.rate - theta);
        }
      },
      law);
}

double jump_mgf_domain_sup(const JumpLaw& law) {
  if (const auto* e = std::get_if<ExponentialJump>(&law)) return e->rate;
  return kInf;
}

double sample_jump(const JumpLaw& law, RngState& rng) {
  return std::visit(
      [&rng](const auto& j) -> double {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, DegenerateJump>) return j.value;
        if constexpr (std::is_same_v<T, GaussianJump>)
          return j.mean + std::sqrt(j.variance) * rng.normal();
        if constexpr (std::is_same_v<T, UniformJump>)
          return j.lo + (j.hi - j.lo) * rng.uniform01();
        if constexpr (std::is_same_v<T, TwoPointJump>)
          return rng.uniform01() < j.prob_a ? j.value_a : j.value_b;
        if constexpr (std::is_same_v<T, ExponentialJump>)
          return rng.exponential() / j.rate;
      },
      law);
}

namespace {

std::vector<double> parse_params(const std::string& s, std::size_t want,
                                 const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("jump spec '" + spec + "': bad number '" +
                                  tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("jump spec '" + spec + "': bad number '" +
                                  tok + "'");
    out.push_back(v);
  }
  if (out.size() != want)
    throw std::invalid_argument("jump spec '" + spec + "': expected " +
                                std::to_string(want) + " parameter(s)");
  return out;
}

}  // namespace

JumpLaw parse_jump(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("jump spec '" + spec +
                                "': expected kind:params");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  JumpLaw law;
  if (kind == "deg") {
    const auto p = parse_params(rest, 1, spec);
    law = DegenerateJump{p[0]};
  } else if (kind == "gauss") {
    const auto p = parse_params(rest, 2, spec);
    law = GaussianJump{p[0], p[1]};
  } else if (kind == "unif") {
    const auto p = parse_params(rest, 2, spec);
    law = UniformJump{p[0], p[1]};
  } else if (kind == "twopoint") {
    const auto p = parse_params(rest, 3, spec);
    law = TwoPointJump{p[0], p[1], p[2]};
  } else if (kind == "exp") {
    const auto p = parse_params(rest, 1, spec);
    law = ExponentialJump{p[0]};
  } else {
    throw std::invalid_argument("jump spec '" + spec + "': unknown kind '" +
                                kind + "'");
  }
  validate_jump(law);
  return law;
}

std::string jump_to_string(const JumpLaw& law) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& j) {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, DegenerateJump>)
          os << "deg:" << j.value;
        if constexpr (std::is_same_v<T, GaussianJump>)
          os << "gauss:" << j.mean << "," << j.variance;
        if constexpr (std::is_same_v<T, UniformJump>)
          os << "unif:" << j.lo << "," << j.hi;
        if constexpr (std::is_same_v<T, TwoPointJump>)
          os << "twopoint:" << j.value_a << "," << j.value_b << ","
             << j.prob_a;
        if constexpr (std::is_same_v<T, ExponentialJump>)
          os << "exp:" << j.rate;
      },
      law);
  return os.str();
}

}  // namespace fracdev
