#ifndef FRACDEV_ASYMPTOTIC_KERNELS_HPP
#define FRACDEV_ASYMPTOTIC_KERNELS_HPP

#include "fracdev/jump_law.hpp"
#include "fracdev/samplers.hpp"

namespace fracdev {

// Scaled cumulant-generating-function limits. Infinite values are in-band
// (+infinity), never errors: the Legendre oracle probes the whole line.
enum class CgfKind { ld, md_mu_zero, md_mu_pos, md_mu_neg, nu1_classical };

const char* to_string(CgfKind k);

class CgfLimit {
 public:
  double operator()(double theta) const;
  CgfKind kind() const { return kind_; }

 private:
  friend CgfLimit cgf_limit_LD(const ProcessParams& params,
                               const JumpLaw& jump);
  friend CgfLimit cgf_limit_MD(double nu, double lambda, double mu,
                               double sigma2);
  friend CgfLimit cgf_classical_nu1(double lambda, const JumpLaw& jump);

  CgfKind kind_;
  double nu_ = 1.0;
  double lambda_ = 1.0;
  double mu_ = 0.0;
  double sigma2_ = 0.0;
  JumpLaw jump_ = DegenerateJump{1.0};
  bool has_jump_ = false;
};

// Large-deviation limit: (lambda (M_X(theta) - 1))^{1/nu} when M_X > 1,
// 0 when M_X <= 1 (a 1e-14 band around 1 maps to 0 to avoid branch
// chatter), +infinity outside the mgf domain.
CgfLimit cgf_limit_LD(const ProcessParams& params, const JumpLaw& jump);

// Moderate-deviation limits, selected by the sign of mu:
//   mu = 0:  (lambda theta^2 sigma^2 / 2)^{1/nu} for all theta
//   mu > 0:  (lambda theta mu)^{1/nu} for theta > 0, else 0
//   mu < 0:  (lambda theta mu)^{1/nu} for theta < 0, else 0
// Requires sigma2 > 0 when mu = 0.
CgfLimit cgf_limit_MD(double nu, double lambda, double mu, double sigma2);

// Classical compound-Poisson kernel lambda (M_X(theta) - 1), the nu = 1
// comparison case; +infinity outside the mgf domain.
CgfLimit cgf_classical_nu1(double lambda, const JumpLaw& jump);

// Scaling bookkeeping for the a_t = t^{-beta} family: a_t -> 0 and
// t a_t -> infinity exactly when beta is in (0, 1).
struct ScalingRegime {
  double alpha;  // alpha(nu): 1 - nu/2 if mu = 0, 1 - nu otherwise
  double beta;   // a_t = t^{-beta}

  double a(double t) const;         // t^{-beta}
  double speed_md(double t) const;  // 1 / a_t = t^{beta}
};

// alpha(nu) as above; nu must be in (0, 1).
double alpha_exponent(double nu, double mu);

// Throws std::invalid_argument unless beta is strictly inside (0, 1).
ScalingRegime make_scaling_regime(double nu, double mu, double beta);

// Finite-t moment generating functions. E[e^{theta L_nu(t)}] = E_nu(theta
// t^nu); E[e^{theta S(t)}] = E_nu(lambda (M_X(theta) - 1) t^nu). The plain
// forms propagate the Mittag-Leffler overflow signal; the log forms never
// overflow. mgf_compound throws std::domain_error when M_X(theta) is
// infinite.
double mgf_inverse_stable(double nu, double t, double theta);
double log_mgf_inverse_stable(double nu, double t, double theta);
double mgf_compound(const ProcessParams& params, const JumpLaw& jump, double t,
                    double theta);
double log_mgf_compound(const ProcessParams& params, const JumpLaw& jump,
                        double t, double theta);

// Renewal interarrival cumulant kappa(eta) = log(lambda / (lambda +
// (-eta)^nu)) for eta < 0, and its closed-form Legendre companion
// Psi_kappa(theta) = -kappa^{-1}(-theta) = (lambda (e^theta - 1))^{1/nu}
// for theta > 0. Domain errors outside those half-lines.
double interarrival_cgf(double nu, double lambda, double eta);
double psi_kappa(double nu, double lambda, double theta);

}  // namespace fracdev

#endif  // FRACDEV_ASYMPTOTIC_KERNELS_HPP
