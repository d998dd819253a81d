#include "fracdev/asymptotic_kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracdev/mittag_leffler.hpp"

namespace fracdev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Band around M_X = 1 treated as "not above 1"; the limit value is 0 there
// and this avoids branch chatter from roundoff in the mgf.
constexpr double kUnitBand = 1e-14;

}  // namespace

const char* to_string(CgfKind k) {
  switch (k) {
    case CgfKind::ld:
      return "ld";
    case CgfKind::md_mu_zero:
      return "md_mu_zero";
    case CgfKind::md_mu_pos:
      return "md_mu_pos";
    case CgfKind::md_mu_neg:
      return "md_mu_neg";
    case CgfKind::nu1_classical:
      return "nu1_classical";
  }
  return "?";
}

double CgfLimit::operator()(double theta) const {
  switch (kind_) {
    case CgfKind::ld: {
      const double m = jump_mgf(jump_, theta);
      if (std::isinf(m)) return kInf;
      if (m <= 1.0 + kUnitBand) return 0.0;
      return std::pow(lambda_ * (m - 1.0), 1.0 / nu_);
    }
    case CgfKind::md_mu_zero:
      return std::pow(0.5 * lambda_ * sigma2_ * theta * theta, 1.0 / nu_);
    case CgfKind::md_mu_pos:
      return theta > 0.0 ? std::pow(lambda_ * theta * mu_, 1.0 / nu_) : 0.0;
    case CgfKind::md_mu_neg:
      return theta < 0.0 ? std::pow(lambda_ * theta * mu_, 1.0 / nu_) : 0.0;
    case CgfKind::nu1_classical: {
      const double m = jump_mgf(jump_, theta);
      if (std::isinf(m)) return kInf;
      return lambda_ * (m - 1.0);
    }
  }
  return 0.0;
}

CgfLimit cgf_limit_LD(const ProcessParams& params, const JumpLaw& jump) {
  validate_params(params);
  validate_jump(jump);
  CgfLimit c;
  c.kind_ = CgfKind::ld;
  c.nu_ = params.nu;
  c.lambda_ = params.lambda;
  c.mu_ = jump_mean(jump);
  c.sigma2_ = jump_variance(jump);
  c.jump_ = jump;
  c.has_jump_ = true;
  return c;
}

CgfLimit cgf_limit_MD(double nu, double lambda, double mu, double sigma2) {
  validate_params(ProcessParams{nu, lambda});
  CgfLimit c;
  c.nu_ = nu;
  c.lambda_ = lambda;
  c.mu_ = mu;
  c.sigma2_ = sigma2;
  if (mu == 0.0) {
    if (!(sigma2 > 0.0))
      throw std::invalid_argument("cgf_limit_MD: mu = 0 requires sigma2 > 0");
    c.kind_ = CgfKind::md_mu_zero;
  } else {
    c.kind_ = mu > 0.0 ? CgfKind::md_mu_pos : CgfKind::md_mu_neg;
  }
  return c;
}

CgfLimit cgf_classical_nu1(double lambda, const JumpLaw& jump) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("cgf_classical_nu1: lambda must be > 0");
  validate_jump(jump);
  CgfLimit c;
  c.kind_ = CgfKind::nu1_classical;
  c.lambda_ = lambda;
  c.mu_ = jump_mean(jump);
  c.sigma2_ = jump_variance(jump);
  c.jump_ = jump;
  c.has_jump_ = true;
  return c;
}

double alpha_exponent(double nu, double mu) {
  if (!(nu > 0.0 && nu < 1.0))
    throw std::invalid_argument("alpha_exponent: nu must be in (0, 1)");
  return mu == 0.0 ? 1.0 - 0.5 * nu : 1.0 - nu;
}

double ScalingRegime::a(double t) const { return std::pow(t, -beta); }

double ScalingRegime::speed_md(double t) const { return std::pow(t, beta); }

ScalingRegime make_scaling_regime(double nu, double mu, double beta) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument(
        "scaling regime: beta must be strictly inside (0, 1)");
  return ScalingRegime{alpha_exponent(nu, mu), beta};
}

double mgf_inverse_stable(double nu, double t, double theta) {
  if (!(t > 0.0))
    throw std::invalid_argument("mgf_inverse_stable: t must be > 0");
  return ml_eval(MlOrder{nu}, theta * std::pow(t, nu)).value;
}

double log_mgf_inverse_stable(double nu, double t, double theta) {
  if (!(t > 0.0))
    throw std::invalid_argument("mgf_inverse_stable: t must be > 0");
  return ml_log_eval(MlOrder{nu}, theta * std::pow(t, nu));
}

namespace {

// The finite-t mgf identities hold for nu = 1 as well (E_1 reduces them to
// the classical compound-Poisson mgf), so they take the Mittag-Leffler
// order range (0, 1] rather than the strict sampler range.
void check_mgf_params(const ProcessParams& params) {
  if (!(params.nu > 0.0 && params.nu <= 1.0))
    throw std::invalid_argument("mgf: nu must be in (0, 1]");
  if (!(params.lambda > 0.0))
    throw std::invalid_argument("mgf: lambda must be > 0");
}

double compound_ml_argument(const ProcessParams& params, const JumpLaw& jump,
                            double t, double theta) {
  check_mgf_params(params);
  const double m = jump_mgf(jump, theta);
  if (std::isinf(m))
    throw std::domain_error("mgf_compound: jump mgf infinite at this theta");
  return params.lambda * (m - 1.0) * std::pow(t, params.nu);
}

}  // namespace

double mgf_compound(const ProcessParams& params, const JumpLaw& jump, double t,
                    double theta) {
  if (!(t >= 0.0)) throw std::invalid_argument("mgf_compound: t must be >= 0");
  if (t == 0.0) return 1.0;
  return ml_eval(MlOrder{params.nu},
                 compound_ml_argument(params, jump, t, theta))
      .value;
}

double log_mgf_compound(const ProcessParams& params, const JumpLaw& jump,
                        double t, double theta) {
  if (!(t >= 0.0)) throw std::invalid_argument("mgf_compound: t must be >= 0");
  if (t == 0.0) return 0.0;
  return ml_log_eval(MlOrder{params.nu},
                     compound_ml_argument(params, jump, t, theta));
}

double interarrival_cgf(double nu, double lambda, double eta) {
  validate_params(ProcessParams{nu, lambda});
  if (!(eta < 0.0))
    throw std::domain_error("interarrival_cgf: requires eta < 0");
  return -std::log1p(std::pow(-eta, nu) / lambda);
}

double psi_kappa(double nu, double lambda, double theta) {
  validate_params(ProcessParams{nu, lambda});
  if (!(theta > 0.0))
    throw std::domain_error("psi_kappa: requires theta > 0");
  // kappa(eta) = -theta solved in closed form: -eta = (lambda(e^theta-1))^{1/nu}.
  return std::pow(lambda * (std::exp(theta) - 1.0), 1.0 / nu);
}

}  // namespace fracdev
