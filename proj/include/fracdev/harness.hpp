#ifndef FRACDEV_HARNESS_HPP
#define FRACDEV_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fracdev/asymptotic_kernels.hpp"
#include "fracdev/io.hpp"
#include "fracdev/jump_law.hpp"
#include "fracdev/samplers.hpp"

namespace fracdev {

// One experiment description. nu may be 1 only for the law-of-large-numbers
// experiment (the classical compound-Poisson control); the sampling modules
// themselves keep nu strictly inside (0, 1).
struct ExperimentConfig {
  double nu = 0.5;
  double lambda = 1.0;
  JumpLaw jump = DegenerateJump{1.0};
  std::uint64_t seed = 1;
  std::uint64_t n_samples = 1;
  std::vector<double> t_grid;
  double beta = 0.5;
  std::vector<double> x_grid;
  std::vector<double> theta_grid;
  int workers = 1;
};

// Parses the JSON object {nu, lambda, jump{kind,params[]}, seed, n_samples,
// t_grid[], beta, x_grid[], theta_grid[], workers}, validates it and applies
// the FRACDEV_WORKERS environment override. Throws std::invalid_argument on
// malformed or out-of-range input.
ExperimentConfig load_config_json(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);
void validate_config(const ExperimentConfig& config);

// Wilson 95% score interval; valid at small hit counts.
struct WilsonInterval {
  double lo;
  double hi;
};
WilsonInterval wilson_interval(std::uint64_t hits, std::uint64_t n);

struct WeakConvRow {
  double theta;
  double empirical_mgf;
  double std_err;
  double limit_mgf;
  double z_score;
  bool overflow;  // e^(theta W) overflowed for some sample, or the limit did
};

struct WeakConvResult {
  double t;
  std::vector<WeakConvRow> rows;  // sorted by theta
  double scaled_mean;             // mean of the alpha(nu)-scaled variable
  double scaled_mean_se;
};

// Draws n_samples of t^{alpha(nu)} S(t)/t at the largest configured t and
// compares the empirical mgf on theta_grid with the weak limit
// E_nu(lambda sigma^2 theta^2 / 2) (mu = 0) or E_nu(lambda mu theta).
WeakConvResult run_weak_convergence(const ExperimentConfig& config);

struct TailEstimate {
  double t;
  double a_t;
  double x;
  double p_hat;
  double ci_low;
  double ci_high;
  std::optional<double> empirical_rate;  // -a_t log p_hat; empty on zero hits
  double model_rate;                     // I_MD(x), +infinity off-regime
};

// For each (t, x): with V = (a_t t)^alpha S(t)/t and the threshold
// w = x (mirrored to -x when mu < 0), p_hat estimates the tail away from
// zero through w: P(V >= w) for w >= 0, P(V <= w) for w < 0; model_rate is
// I_MD(w). Zero-hit cells keep p_hat = 0 with the empirical rate marked
// unavailable; nothing downstream sees non-finite arithmetic.
std::vector<TailEstimate> run_md_tail(const ExperimentConfig& config);

struct LlnRow {
  double t;
  double eps;
  double p_hat;
  double ci_low;
  double ci_high;
};

struct LlnResult {
  std::vector<LlnRow> rows;  // configured t order, then eps order
  // P(|S/t| > eps) nonincreasing along t_grid for every eps.
  bool nonincreasing;
};

LlnResult run_lln_decay(const ExperimentConfig& config);

// Fixed column orders (see README): weak: theta, empirical_mgf, std_err,
// limit_mgf, z_score, overflow; md: t, a_t, x, p_hat, ci_low, ci_high,
// empirical_rate, model_rate; lln: t, eps, p_hat, ci_low, ci_high.
void write_weak(std::ostream& os, const WeakConvResult& result,
                OutputFormat format);
void write_md(std::ostream& os, const std::vector<TailEstimate>& rows,
              OutputFormat format);
void write_lln(std::ostream& os, const LlnResult& result, OutputFormat format);

}  // namespace fracdev

#endif  // FRACDEV_HARNESS_HPP
