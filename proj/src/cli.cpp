#include "fracdev/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracdev/harness.hpp"
#include "fracdev/io.hpp"
#include "fracdev/mittag_leffler.hpp"
#include "fracdev/rate_functions.hpp"

namespace fracdev::cli {

namespace {

// Output sink: --out path or stdout.
struct Sink {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;

  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file)
      throw std::runtime_error("cannot open output file '" + path + "'");
    os = file.get();
  }
};

void run_ml(double nu, double x, bool log_form, const std::string& out) {
  Sink sink(out);
  nlohmann::json j;
  try {
    const MlEvalResult r = ml_eval(MlOrder{nu}, x);
    j = {{"value", r.value},
         {"log_value", r.log_value},
         {"method", to_string(r.method)},
         {"est_abs_err", r.est_abs_err}};
  } catch (const std::overflow_error&) {
    if (!log_form) throw;  // caller asked for the value form; report it
    // Beyond double range only the log form is meaningful.
    const double lv = ml_log_eval(MlOrder{nu}, x);
    j = {{"value", nullptr},
         {"log_value", lv},
         {"method", "asymptotic_positive"},
         {"est_abs_err", nullptr}};
  }
  *sink.os << j.dump() << '\n';
}

void run_simulate(double nu, double lambda, double t, const std::string& jump,
                  std::uint64_t count, std::uint64_t seed,
                  const std::string& out) {
  Sink sink(out);
  const ProcessParams params{nu, lambda};
  validate_params(params);
  const JumpLaw law = parse_jump(jump);
  RngState rng(seed);
  for (std::uint64_t i = 0; i < count; ++i)
    *sink.os << format_double(sample_compound(params, law, t, rng)) << '\n';
}

void run_cgf(const std::string& kind, double nu, double lambda, double mu,
             double sigma2, const std::string& jump,
             const std::string& theta_grid, const std::string& out) {
  Sink sink(out);
  const std::vector<double> thetas = parse_grid(theta_grid);
  std::optional<CgfLimit> cgf;
  if (kind == "ld") {
    cgf = cgf_limit_LD(ProcessParams{nu, lambda}, parse_jump(jump));
  } else if (kind == "md") {
    cgf = cgf_limit_MD(nu, lambda, mu, sigma2);
  } else {
    throw std::runtime_error("cgf: --kind must be ld or md");
  }
  write_csv_row(*sink.os, {"theta", "value"});
  for (double theta : thetas)
    write_csv_row(*sink.os,
                  {format_double(theta), format_double((*cgf)(theta))});
}

void run_rate(const std::string& regime, double nu, double lambda, double mu,
              double sigma2, const std::string& jump,
              const std::string& x_grid, bool check_oracle,
              const std::string& out) {
  Sink sink(out);
  const std::vector<double> xs = parse_grid(x_grid);
  write_csv_row(*sink.os,
                {"x", "rate_closed", "rate_oracle", "argmax_theta", "abs_diff"});
  const JumpLaw law = parse_jump(jump);
  const bool unit_jump = [&]() {
    const auto* d = std::get_if<DegenerateJump>(&law);
    return d && d->value == 1.0;
  }();

  for (double x : xs) {
    std::string closed, oracle, argmax, diff;
    if (regime == "md") {
      const double rc = rate_MD_closed(nu, lambda, mu, sigma2, x);
      closed = format_double(rc);
      if (check_oracle) {
        const LegendreResult lr =
            legendre_transform(cgf_limit_MD(nu, lambda, mu, sigma2), x);
        oracle = format_double(lr.value);
        if (lr.argmax_theta) argmax = format_double(*lr.argmax_theta);
        diff = format_double(std::fabs(rc - lr.value));
      }
    } else if (regime == "ld") {
      const LegendreResult lr =
          legendre_transform(cgf_limit_LD(ProcessParams{nu, lambda}, law), x);
      oracle = format_double(lr.value);
      if (lr.argmax_theta) argmax = format_double(*lr.argmax_theta);
      if (unit_jump) {
        const double rc = rate_LD_renewal_form(nu, lambda, x);
        closed = format_double(rc);
        diff = format_double(std::fabs(rc - lr.value));
      }
    } else {
      throw std::runtime_error("rate: --regime must be ld or md");
    }
    write_csv_row(*sink.os, {format_double(x), closed, oracle, argmax, diff});
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"compound fractional Poisson process toolkit"};
  app.name("fracdev");
  app.require_subcommand(1);

  // ml
  auto* ml = app.add_subcommand("ml", "evaluate the Mittag-Leffler function");
  double ml_nu = 0.5, ml_x = 0.0;
  bool ml_log = false;
  std::string ml_out;
  ml->add_option("--nu", ml_nu, "order in (0, 1]")->required();
  ml->add_option("--x", ml_x, "argument")->required();
  ml->add_flag("--log", ml_log, "evaluate in log space (never overflows)");
  ml->add_option("--out", ml_out, "output file (default stdout)");

  // simulate
  auto* sim = app.add_subcommand("simulate",
                                 "stream compound fractional Poisson draws");
  double sim_nu = 0.5, sim_lambda = 1.0, sim_t = 1.0;
  std::string sim_jump = "deg:1", sim_out;
  std::uint64_t sim_n = 1, sim_seed = 1;
  sim->add_option("--nu", sim_nu)->required();
  sim->add_option("--lambda", sim_lambda)->required();
  sim->add_option("--t", sim_t)->required();
  sim->add_option("--jump", sim_jump,
                  "jump spec: deg:c | gauss:m,v | unif:a,b | "
                  "twopoint:va,vb,pa | exp:rate");
  sim->add_option("-n,--count", sim_n, "number of draws")->required();
  sim->add_option("--seed", sim_seed)->required();
  sim->add_option("--out", sim_out, "output file (default stdout)");

  // cgf
  auto* cgf = app.add_subcommand("cgf", "tabulate a scaled-CGF limit");
  std::string cgf_kind, cgf_jump = "deg:1", cgf_grid, cgf_out;
  double cgf_nu = 0.5, cgf_lambda = 1.0, cgf_mu = 0.0, cgf_sigma2 = 0.0;
  cgf->add_option("--kind", cgf_kind, "ld or md")->required();
  cgf->add_option("--nu", cgf_nu)->required();
  cgf->add_option("--lambda", cgf_lambda)->required();
  cgf->add_option("--mu", cgf_mu, "jump mean (md kind)");
  cgf->add_option("--sigma2", cgf_sigma2, "jump variance (md kind, mu = 0)");
  cgf->add_option("--jump", cgf_jump, "jump spec (ld kind)");
  cgf->add_option("--theta-grid", cgf_grid, "a:b:n")->required();
  cgf->add_option("--out", cgf_out, "output file (default stdout)");

  // rate
  auto* rate = app.add_subcommand("rate", "tabulate rate functions");
  std::string rate_regime, rate_jump = "deg:1", rate_grid, rate_out;
  double rate_nu = 0.5, rate_lambda = 1.0, rate_mu = 0.0, rate_sigma2 = 0.0;
  bool rate_oracle = false;
  rate->add_option("--regime", rate_regime, "ld or md")->required();
  rate->add_option("--nu", rate_nu)->required();
  rate->add_option("--lambda", rate_lambda)->required();
  rate->add_option("--mu", rate_mu, "jump mean (md regime)");
  rate->add_option("--sigma2", rate_sigma2, "jump variance (md, mu = 0)");
  rate->add_option("--jump", rate_jump, "jump spec (ld regime)");
  rate->add_option("--x-grid", rate_grid, "a:b:n")->required();
  rate->add_flag("--check-oracle", rate_oracle,
                 "also run the numerical Legendre oracle");
  rate->add_option("--out", rate_out, "output file (default stdout)");

  // verify-*
  struct VerifyOpts {
    std::string config;
    std::string out;
    std::string format = "csv";
  };
  VerifyOpts weak, md, lln;
  auto* vweak =
      app.add_subcommand("verify-weak", "weak-convergence experiment");
  vweak->add_option("--config", weak.config, "JSON config file")->required();
  vweak->add_option("--out", weak.out, "output file (default stdout)");
  vweak->add_option("--format", weak.format, "csv or jsonl");
  auto* vmd =
      app.add_subcommand("verify-md", "moderate-deviation tail experiment");
  vmd->add_option("--config", md.config, "JSON config file")->required();
  vmd->add_option("--out", md.out, "output file (default stdout)");
  vmd->add_option("--format", md.format, "csv or jsonl");
  auto* vlln = app.add_subcommand("verify-lln", "law-of-large-numbers decay");
  vlln->add_option("--config", lln.config, "JSON config file")->required();
  vlln->add_option("--out", lln.out, "output file (default stdout)");
  vlln->add_option("--format", lln.format, "csv or jsonl");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "fracdev: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (ml->parsed()) {
      run_ml(ml_nu, ml_x, ml_log, ml_out);
    } else if (sim->parsed()) {
      run_simulate(sim_nu, sim_lambda, sim_t, sim_jump, sim_n, sim_seed,
                   sim_out);
    } else if (cgf->parsed()) {
      run_cgf(cgf_kind, cgf_nu, cgf_lambda, cgf_mu, cgf_sigma2, cgf_jump,
              cgf_grid, cgf_out);
    } else if (rate->parsed()) {
      run_rate(rate_regime, rate_nu, rate_lambda, rate_mu, rate_sigma2,
               rate_jump, rate_grid, rate_oracle, rate_out);
    } else if (vweak->parsed()) {
      Sink sink(weak.out);
      write_weak(*sink.os, run_weak_convergence(load_config_file(weak.config)),
                 parse_format(weak.format));
    } else if (vmd->parsed()) {
      Sink sink(md.out);
      write_md(*sink.os, run_md_tail(load_config_file(md.config)),
               parse_format(md.format));
    } else if (vlln->parsed()) {
      Sink sink(lln.out);
      write_lln(*sink.os, run_lln_decay(load_config_file(lln.config)),
                parse_format(lln.format));
    }
  } catch (const std::exception& e) {
    std::cerr << "fracdev: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace fracdev::cli
