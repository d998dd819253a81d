#include "fracdev/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "fracdev/mittag_leffler.hpp"
#include "fracdev/rate_functions.hpp"

namespace fracdev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void apply_env_overrides(ExperimentConfig& config) {
  if (const char* env = std::getenv("FRACDEV_WORKERS")) {
    char* end = nullptr;
    const long w = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || w < 1)
      throw std::invalid_argument("FRACDEV_WORKERS must be an integer >= 1");
    config.workers = static_cast<int>(w);
  }
}

// Splits n across workers (first n % workers streams get one extra draw) and
// runs one accumulator per stream; the caller merges them in stream order so
// results depend only on (seed, workers), not on scheduling.
template <typename Acc, typename DrawFn>
std::vector<Acc> run_partitioned(std::uint64_t seed, std::uint64_t n,
                                 int workers, const DrawFn& draw) {
  const auto w = static_cast<std::uint64_t>(workers);
  std::vector<Acc> accs(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::uint64_t i = 0; i < w; ++i) {
    const std::uint64_t count = n / w + (i < n % w ? 1 : 0);
    threads.emplace_back([&, i, count]() {
      RngState rng(seed, i);
      for (std::uint64_t k = 0; k < count; ++k) draw(rng, accs[i]);
    });
  }
  for (auto& t : threads) t.join();
  return accs;
}

std::string opt_cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

nlohmann::json opt_json(const std::optional<double>& v) {
  if (v && std::isfinite(*v)) return *v;
  return nullptr;
}

nlohmann::json num_json(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;  // JSON has no inf; null with the CSV carrying "inf"
}

}  // namespace

ExperimentConfig load_config_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") +
                                e.what());
  }
  ExperimentConfig config;
  try {
    config.nu = j.at("nu").get<double>();
    config.lambda = j.at("lambda").get<double>();
    const auto& jj = j.at("jump");
    const std::string kind = jj.at("kind").get<std::string>();
    std::string spec = kind + ":";
    const auto& params = jj.at("params");
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) spec += ',';
      spec += format_double(params.at(i).get<double>());
    }
    config.jump = parse_jump(spec);
    config.seed = j.at("seed").get<std::uint64_t>();
    config.n_samples = j.at("n_samples").get<std::uint64_t>();
    config.t_grid = j.at("t_grid").get<std::vector<double>>();
    config.beta = j.at("beta").get<double>();
    config.x_grid = j.at("x_grid").get<std::vector<double>>();
    config.theta_grid = j.at("theta_grid").get<std::vector<double>>();
    config.workers = j.value("workers", 1);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  apply_env_overrides(config);
  validate_config(config);
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_config_json(ss.str());
}

void validate_config(const ExperimentConfig& config) {
  if (!(config.nu > 0.0 && config.nu <= 1.0))
    throw std::invalid_argument("config: nu must be in (0, 1]");
  if (!(config.lambda > 0.0))
    throw std::invalid_argument("config: lambda must be > 0");
  validate_jump(config.jump);
  if (config.n_samples == 0)
    throw std::invalid_argument("config: n_samples must be > 0");
  if (config.t_grid.empty() || config.x_grid.empty() ||
      config.theta_grid.empty())
    throw std::invalid_argument("config: grids must be nonempty");
  for (double t : config.t_grid)
    if (!(t > 0.0)) throw std::invalid_argument("config: t_grid must be > 0");
  if (!(config.beta > 0.0 && config.beta < 1.0))
    throw std::invalid_argument(
        "config: beta must be strictly inside (0, 1)");
  if (config.workers < 1)
    throw std::invalid_argument("config: workers must be >= 1");
}

WilsonInterval wilson_interval(std::uint64_t hits, std::uint64_t n) {
  constexpr double z = 1.959963984540054;  // 95%
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  // The score bounds hit 0 and 1 exactly at k = 0 and k = n; keep them
  // exact there so ci_low <= p_hat <= ci_high survives roundoff.
  const double lo = hits == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = hits == n ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

namespace {

struct WeakAcc {
  std::vector<double> sum;    // per theta: sum of e^{theta W}
  std::vector<double> sumsq;  // per theta: sum of e^{2 theta W}
  std::vector<std::uint8_t> overflow;
  double w_sum = 0.0;
  double w_sumsq = 0.0;

  void init(std::size_t k) {
    sum.assign(k, 0.0);
    sumsq.assign(k, 0.0);
    overflow.assign(k, 0);
  }
};

double mu_limit_mgf(double nu, double lambda, double mu, double sigma2,
                    double theta, bool& overflow) {
  try {
    if (mu == 0.0)
      return ml_eval(MlOrder{nu}, 0.5 * lambda * sigma2 * theta * theta).value;
    return ml_eval(MlOrder{nu}, lambda * mu * theta).value;
  } catch (const std::overflow_error&) {
    overflow = true;
    return kInf;
  }
}

}  // namespace

WeakConvResult run_weak_convergence(const ExperimentConfig& config) {
  validate_config(config);
  if (config.nu >= 1.0)
    throw std::invalid_argument(
        "weak convergence experiment requires nu in (0, 1)");
  const ProcessParams params{config.nu, config.lambda};
  const double mu = jump_mean(config.jump);
  const double sigma2 = jump_variance(config.jump);
  const double t = config.t_grid.back();
  const double alpha = alpha_exponent(config.nu, mu);
  const double multiplier = std::pow(t, alpha - 1.0);

  std::vector<double> thetas = config.theta_grid;
  std::sort(thetas.begin(), thetas.end());
  const std::size_t k = thetas.size();

  const auto draw = [&](RngState& rng, WeakAcc& acc) {
    if (acc.sum.empty()) acc.init(k);
    const double w =
        multiplier * sample_compound(params, config.jump, t, rng);
    acc.w_sum += w;
    acc.w_sumsq += w * w;
    for (std::size_t j = 0; j < k; ++j) {
      const double e = std::exp(thetas[j] * w);
      if (!std::isfinite(e)) {
        acc.overflow[j] = 1;
        continue;
      }
      acc.sum[j] += e;
      acc.sumsq[j] += e * e;
    }
  };
  const auto accs = run_partitioned<WeakAcc>(config.seed, config.n_samples,
                                             config.workers, draw);

  WeakAcc total;
  total.init(k);
  for (const auto& a : accs) {
    if (a.sum.empty()) continue;  // worker with zero draws
    for (std::size_t j = 0; j < k; ++j) {
      total.sum[j] += a.sum[j];
      total.sumsq[j] += a.sumsq[j];
      total.overflow[j] |= a.overflow[j];
    }
    total.w_sum += a.w_sum;
    total.w_sumsq += a.w_sumsq;
  }

  const double n = static_cast<double>(config.n_samples);
  WeakConvResult result;
  result.t = t;
  result.scaled_mean = total.w_sum / n;
  const double w_var =
      std::max(0.0, (total.w_sumsq / n - result.scaled_mean * result.scaled_mean) *
                        (n / std::max(1.0, n - 1.0)));
  result.scaled_mean_se = std::sqrt(w_var / n);

  for (std::size_t j = 0; j < k; ++j) {
    WeakConvRow row;
    row.theta = thetas[j];
    row.overflow = total.overflow[j] != 0;
    row.empirical_mgf = total.sum[j] / n;
    const double var = std::max(
        0.0, (total.sumsq[j] / n - row.empirical_mgf * row.empirical_mgf) *
                 (n / std::max(1.0, n - 1.0)));
    row.std_err = std::sqrt(var / n);
    bool limit_overflow = false;
    row.limit_mgf = mu_limit_mgf(config.nu, config.lambda, mu, sigma2,
                                 thetas[j], limit_overflow);
    row.overflow = row.overflow || limit_overflow;
    const double diff = row.empirical_mgf - row.limit_mgf;
    row.z_score = diff == 0.0 ? 0.0 : diff / row.std_err;
    result.rows.push_back(row);
  }
  return result;
}

std::vector<TailEstimate> run_md_tail(const ExperimentConfig& config) {
  validate_config(config);
  if (config.nu >= 1.0)
    throw std::invalid_argument("md tail experiment requires nu in (0, 1)");
  for (std::size_t i = 1; i < config.t_grid.size(); ++i)
    if (!(config.t_grid[i] > config.t_grid[i - 1]))
      throw std::invalid_argument("md tail: t_grid must be increasing");

  const ProcessParams params{config.nu, config.lambda};
  const double mu = jump_mean(config.jump);
  const double sigma2 = jump_variance(config.jump);
  const ScalingRegime regime =
      make_scaling_regime(config.nu, mu, config.beta);
  const double n = static_cast<double>(config.n_samples);

  std::vector<TailEstimate> rows;
  for (double t : config.t_grid) {
    const double a_t = regime.a(t);
    const double multiplier = std::pow(a_t * t, regime.alpha) / t;
    struct Counts {
      std::vector<std::uint64_t> hits;
    };
    // Effective threshold after the mu < 0 mirror; the event is the tail
    // away from zero through it: {V >= w} for w >= 0, {V <= w} for w < 0.
    const auto draw = [&](RngState& rng, Counts& acc) {
      if (acc.hits.empty()) acc.hits.assign(config.x_grid.size(), 0);
      const double v =
          multiplier * sample_compound(params, config.jump, t, rng);
      for (std::size_t j = 0; j < config.x_grid.size(); ++j) {
        const double w = mu < 0.0 ? -config.x_grid[j] : config.x_grid[j];
        const bool hit = w >= 0.0 ? (v >= w) : (v <= w);
        if (hit) ++acc.hits[j];
      }
    };
    const auto accs = run_partitioned<Counts>(config.seed, config.n_samples,
                                              config.workers, draw);
    for (std::size_t j = 0; j < config.x_grid.size(); ++j) {
      std::uint64_t hits = 0;
      for (const auto& a : accs)
        if (!a.hits.empty()) hits += a.hits[j];
      const double x = config.x_grid[j];
      TailEstimate row;
      row.t = t;
      row.a_t = a_t;
      row.x = x;
      row.p_hat = static_cast<double>(hits) / n;
      const WilsonInterval ci = wilson_interval(hits, config.n_samples);
      row.ci_low = ci.lo;
      row.ci_high = ci.hi;
      if (hits > 0)
        row.empirical_rate = -a_t * std::log(row.p_hat) + 0.0;  // avoid -0
      const double w = mu < 0.0 ? -x : x;
      row.model_rate = rate_MD_closed(config.nu, config.lambda, mu, sigma2, w);
      rows.push_back(row);
    }
  }
  return rows;
}

LlnResult run_lln_decay(const ExperimentConfig& config) {
  validate_config(config);
  const double n = static_cast<double>(config.n_samples);
  const bool classical = config.nu >= 1.0;
  const ProcessParams params{classical ? 0.5 : config.nu, config.lambda};

  LlnResult result;
  result.nonincreasing = true;
  std::vector<double> prev(config.x_grid.size(), kInf);
  for (double t : config.t_grid) {
    struct Counts {
      std::vector<std::uint64_t> hits;
    };
    const auto draw = [&](RngState& rng, Counts& acc) {
      if (acc.hits.empty()) acc.hits.assign(config.x_grid.size(), 0);
      const double s =
          classical
              ? sample_compound_classical(config.lambda, config.jump, t, rng)
              : sample_compound(params, config.jump, t, rng);
      const double ratio = std::fabs(s / t);
      for (std::size_t j = 0; j < config.x_grid.size(); ++j)
        if (ratio > config.x_grid[j]) ++acc.hits[j];
    };
    const auto accs = run_partitioned<Counts>(config.seed, config.n_samples,
                                              config.workers, draw);
    for (std::size_t j = 0; j < config.x_grid.size(); ++j) {
      std::uint64_t hits = 0;
      for (const auto& a : accs)
        if (!a.hits.empty()) hits += a.hits[j];
      LlnRow row;
      row.t = t;
      row.eps = config.x_grid[j];
      row.p_hat = static_cast<double>(hits) / n;
      const WilsonInterval ci = wilson_interval(hits, config.n_samples);
      row.ci_low = ci.lo;
      row.ci_high = ci.hi;
      if (row.p_hat > prev[j]) result.nonincreasing = false;
      prev[j] = row.p_hat;
      result.rows.push_back(row);
    }
  }
  return result;
}

void write_weak(std::ostream& os, const WeakConvResult& result,
                OutputFormat format) {
  if (format == OutputFormat::csv) {
    write_csv_row(os, {"theta", "empirical_mgf", "std_err", "limit_mgf",
                       "z_score", "overflow"});
    for (const auto& r : result.rows)
      write_csv_row(os, {format_double(r.theta), format_double(r.empirical_mgf),
                         format_double(r.std_err), format_double(r.limit_mgf),
                         format_double(r.z_score), r.overflow ? "1" : "0"});
    return;
  }
  for (const auto& r : result.rows) {
    nlohmann::json j{{"theta", r.theta},
                     {"empirical_mgf", num_json(r.empirical_mgf)},
                     {"std_err", num_json(r.std_err)},
                     {"limit_mgf", num_json(r.limit_mgf)},
                     {"z_score", num_json(r.z_score)},
                     {"overflow", r.overflow}};
    os << j.dump() << '\n';
  }
}

void write_md(std::ostream& os, const std::vector<TailEstimate>& rows,
              OutputFormat format) {
  if (format == OutputFormat::csv) {
    write_csv_row(os, {"t", "a_t", "x", "p_hat", "ci_low", "ci_high",
                       "empirical_rate", "model_rate"});
    for (const auto& r : rows)
      write_csv_row(os, {format_double(r.t), format_double(r.a_t),
                         format_double(r.x), format_double(r.p_hat),
                         format_double(r.ci_low), format_double(r.ci_high),
                         opt_cell(r.empirical_rate),
                         format_double(r.model_rate)});
    return;
  }
  for (const auto& r : rows) {
    nlohmann::json j{{"t", r.t},
                     {"a_t", r.a_t},
                     {"x", r.x},
                     {"p_hat", r.p_hat},
                     {"ci_low", r.ci_low},
                     {"ci_high", r.ci_high},
                     {"empirical_rate", opt_json(r.empirical_rate)},
                     {"model_rate", num_json(r.model_rate)}};
    os << j.dump() << '\n';
  }
}

void write_lln(std::ostream& os, const LlnResult& result,
               OutputFormat format) {
  if (format == OutputFormat::csv) {
    write_csv_row(os, {"t", "eps", "p_hat", "ci_low", "ci_high"});
    for (const auto& r : result.rows)
      write_csv_row(os, {format_double(r.t), format_double(r.eps),
                         format_double(r.p_hat), format_double(r.ci_low),
                         format_double(r.ci_high)});
    return;
  }
  for (const auto& r : result.rows) {
    nlohmann::json j{{"t", r.t},
                     {"eps", r.eps},
                     {"p_hat", r.p_hat},
                     {"ci_low", r.ci_low},
                     {"ci_high", r.ci_high}};
    os << j.dump() << '\n';
  }
}

}  // namespace fracdev
