#ifndef FRACDEV_RATE_FUNCTIONS_HPP
#define FRACDEV_RATE_FUNCTIONS_HPP

#include <functional>
#include <optional>
#include <utility>

#include "fracdev/asymptotic_kernels.hpp"

namespace fracdev {

struct LegendreResult {
  double value;                        // sup_theta { theta x - cgf(theta) }
  std::optional<double> argmax_theta;  // empty when the sup is +infinity
  int iterations;
  std::pair<double, double> bracket;

  bool unbounded() const { return !argmax_theta.has_value(); }
};

// Numerical Legendre-Fenchel transform of a convex cgf with cgf(0) = 0:
// bracket expansion by doubling from [-1, 1], then golden-section search
// (derivative-free, so kinks at theta = 0 are fine). The objective is
// declared unbounded when it is still growing at |theta| = 1e6; that is the
// numeric stand-in for the analytic +infinity branches. tol is the absolute
// theta resolution. Throws std::runtime_error if the iteration cap is hit
// before the bracket shrinks to tol (distinct from unboundedness, which is
// an in-band result).
LegendreResult legendre_transform(const std::function<double(double)>& cgf,
                                  double x, double tol = 1e-10);
LegendreResult legendre_transform(const CgfLimit& cgf, double x,
                                  double tol = 1e-10);

// I_LD(x): Legendre transform of the large-deviation kernel. +infinity is
// in-band; I_LD(0) = 0.
double rate_LD(const ProcessParams& params, const JumpLaw& jump, double x);

// The renewal-form expression x sup_{eta<0} { eta/x - kappa(eta) } for unit
// jumps; 0 at x = 0 and +infinity for x < 0. Agrees with
// rate_LD(Degenerate(1)) by the closed-form change of variables.
double rate_LD_renewal_form(double nu, double lambda, double x);

// Closed-form moderate-deviation rate functions:
//   mu = 0: ((nu/2)^{nu/(2-nu)} - (nu/2)^{2/(2-nu)}) (2x^2 / (lambda
//           sigma2))^{1/(2-nu)}
//   mu > 0: (nu^{nu/(1-nu)} - nu^{1/(1-nu)}) (x / (lambda mu))^{1/(1-nu)}
//           for x >= 0, +infinity for x < 0
//   mu < 0: mirror image (finite for x <= 0).
double rate_MD_closed(double nu, double lambda, double mu, double sigma2,
                      double x);

// The maximizing theta of theta x - Lambda_MD(theta):
//   mu = 0: sign(x) (2/(lambda sigma2))^{1/(2-nu)} (nu|x|/2)^{nu/(2-nu)}
//   mu > 0: (nu x)^{nu/(1-nu)} / (lambda mu)^{1/(1-nu)}
//   mu < 0: -(-nu x)^{nu/(1-nu)} / (-lambda mu)^{1/(1-nu)}
// Throws std::domain_error when the rate is +infinity at x.
double optimal_theta_MD(double nu, double lambda, double mu, double sigma2,
                        double x);

// mu < 0 (or mu > 0) rate computed by the reflection identity
// I_{MD,mu}(x) = I_{MD,-mu}(-x); bit-identical to rate_MD_closed.
double rate_MD_reflect(double nu, double lambda, double mu, double x);

}  // namespace fracdev

#endif  // FRACDEV_RATE_FUNCTIONS_HPP
