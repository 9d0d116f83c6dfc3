// Copyright 2026 branchlab authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "branchlab/analysis.hpp"
#include "branchlab/arb.hpp"
#include "branchlab/branching.hpp"
#include "branchlab/config_file.hpp"
#include "branchlab/errors.hpp"
#include "branchlab/limit_laws.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/subordinated.hpp"
#include "branchlab/verify.hpp"

namespace {

using namespace branchlab;

struct CommonArgs {
  std::string config_path;
  std::uint64_t seed = 1;
  std::uint64_t reps = 1000000;
  unsigned workers = 0;
  std::string out_dir = ".";
};

unsigned effective_workers(const CommonArgs& args) {
  return args.workers == 0 ? default_workers() : args.workers;
}

std::ofstream open_csv(const CommonArgs& args, const std::string& name,
                       const std::string& config_echo) {
  std::filesystem::create_directories(args.out_dir);
  const std::string path = args.out_dir + "/" + name;
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file " + path);
  out.precision(17);
  // Worker count is deliberately absent: results are worker-independent and
  // outputs must stay byte-identical across schedules.
  out << "# {\"config\": \"" << config_echo << "\", \"seed\": " << args.seed
      << ", \"reps\": " << args.reps << "}\n";
  return out;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_config = true) {
  if (with_config) {
    cmd->add_option("--config", args.config_path, "experiment config file")
        ->required();
  }
  cmd->add_option("--seed", args.seed, "master seed");
  cmd->add_option("--reps", args.reps, "replicate count");
  cmd->add_option("--workers", args.workers, "worker threads (0 = all)");
  cmd->add_option("--out", args.out_dir, "output directory");
}

int run_validate(const CommonArgs& args) {
  const auto cfg = load_config_file(args.config_path);
  const auto report = validate(cfg.model);
  for (const auto& check : report.checks) {
    std::cout << (check.pass ? "ok    " : "FAIL  ") << check.name;
    if (!check.detail.empty()) std::cout << "  [" << check.detail << "]";
    std::cout << "\n";
  }
  if (!report.regime.empty()) std::cout << "regime: " << report.regime << "\n";
  std::cout << (report.all_pass ? "configuration valid\n"
                                : "configuration INVALID\n");
  return report.all_pass ? 0 : 1;
}

int run_survival(const CommonArgs& args, const std::vector<double>& grid,
                 bool discrete) {
  const auto cfg = load_config_file(args.config_path);
  SurvivalCurve curve;
  if (discrete) {
    curve = discrete_survival_curve(cfg.model, grid, args.reps, args.seed,
                                    /*tag=*/1, effective_workers(args));
  } else {
    if (!cfg.interarrival) {
      throw ConfigError("survival: config has no interarrival section "
                        "(use --discrete for the plain chain)");
    }
    curve = subordinated_survival_curve(cfg.model, *cfg.interarrival, grid,
                                        args.reps, args.seed, /*tag=*/1,
                                        effective_workers(args));
  }
  auto csv = open_csv(args, "survival.csv", cfg.canonical);
  csv << "t,p_hat,ci_lo,ci_hi\n";
  std::vector<double> ps;
  for (std::size_t i = 0; i < curve.horizon.size(); ++i) {
    const double p = curve.estimate(i);
    const double hw = curve.half_width(i);
    ps.push_back(p);
    csv << curve.horizon[i] << "," << p << "," << std::max(0.0, p - hw) << ","
        << std::min(1.0, p + hw) << "\n";
  }
  auto fit_csv = open_csv(args, "survival_fit.csv", cfg.canonical);
  fit_csv << "exponent,stderr,t_lo,t_hi,points,censored\n";
  try {
    const auto fit = fit_tail_index(curve.horizon, ps);
    fit_csv << fit.exponent << "," << fit.stderr_ << "," << fit.t_lo << ","
            << fit.t_hi << "," << fit.points << "," << curve.censored << "\n";
    std::cout << "fitted exponent " << fit.exponent << " +- " << fit.stderr_
              << "\n";
  } catch (const Error& e) {
    fit_csv << "nan,nan,0,0,0," << curve.censored << "\n";
    std::cout << "tail fit skipped: " << e.what() << "\n";
  }
  return 0;
}

int run_yaglom(const CommonArgs& args, double t, std::uint64_t min_survivors) {
  const auto cfg = load_config_file(args.config_path);
  if (!cfg.interarrival) {
    throw ConfigError("yaglom: config needs an interarrival section");
  }
  const auto pred = predict(cfg.model, *cfg.interarrival);
  const auto cond = subordinated_conditional_sample(
      cfg.model, *cfg.interarrival, t, pred.scale(t), args.reps, args.seed,
      /*tag=*/2, effective_workers(args), min_survivors);
  const CompiledLimitLaw ref(pred.limit, 1e-5);
  const auto ks = ks_distance(EmpiricalCdf(cond.values),
                              [&](double x) { return ref.cdf(x); },
                              pred.limit.describe());
  auto sample_csv = open_csv(args, "yaglom_sample.csv", cfg.canonical);
  sample_csv << "value\n";
  for (double v : cond.values) sample_csv << v << "\n";
  auto ks_csv = open_csv(args, "yaglom_ks.csv", cfg.canonical);
  ks_csv << "statistic,n,reference,t,normalization,a_t\n";
  ks_csv << ks.statistic << "," << ks.n << ",\"" << ks.reference << "\"," << t
         << ",\"" << pred.normalization << "\"," << pred.scale(t) << "\n";
  std::cout << "survivors " << cond.survivors << ", KS to "
            << pred.limit.describe() << " = " << ks.statistic << "\n";
  return 0;
}

int run_arb(const CommonArgs& args, double t, std::uint64_t min_survivors) {
  const auto cfg = load_config_file(args.config_path);
  const auto arb = cfg.arb();
  double mean_t_minus_1 = -1.0;
  double delta;
  try {
    delta = theoretical_delta(arb);
  } catch (const UnsupportedRegimeError&) {
    const auto stats = extinction_time_stats(arb.model, 1000000, 1u << 20,
                                             args.seed, /*tag=*/7,
                                             effective_workers(args));
    if (stats.censored != 0) {
      std::cerr << "warning: " << stats.censored
                << " extinction paths censored at the cap; the mean carries "
                   "a downward bias\n";
    }
    mean_t_minus_1 = stats.mean_generations - 1.0;
    delta = theoretical_delta(arb, mean_t_minus_1);
  }
  const auto pred = predict(cfg.model, *cfg.interarrival, &*cfg.sojourn,
                            delta);
  const auto out = atom_and_conditional(arb, t, pred.scale(t), args.reps,
                                        args.seed, /*tag=*/3,
                                        effective_workers(args),
                                        min_survivors);
  const CompiledLimitLaw ref(pred.limit, 1e-5);
  const auto ks = ks_distance(EmpiricalCdf(out.conditional.values),
                              [&](double x) { return ref.cdf(x); },
                              pred.limit.describe());
  auto csv = open_csv(args, "arb_summary.csv", cfg.canonical);
  csv << "t,atom,atom_ci,delta,predicted_atom,ks,n,reference\n";
  csv << t << "," << out.atom << "," << out.half_width << "," << delta << ","
      << pred.atom << "," << ks.statistic << "," << ks.n << ",\""
      << ks.reference << "\"\n";
  auto sample_csv = open_csv(args, "arb_sample.csv", cfg.canonical);
  sample_csv << "value\n";
  for (double v : out.conditional.values) sample_csv << v << "\n";
  std::cout << "atom " << out.atom << " +- " << out.half_width
            << " (predicted " << pred.atom << "), KS to "
            << pred.limit.describe() << " = " << ks.statistic << "\n";
  return 0;
}

// Law descriptors: exp1 | eta:theta,gamma | ml:rho | zeta:rho,gamma |
// beta:a,b | factors joined with '*', each optionally raised with ^e.
LimitLaw parse_law(const std::string& text);

LimitLaw parse_factor(const std::string& token) {
  const auto caret = token.rfind('^');
  std::string base = token;
  double exponent = 1.0;
  if (caret != std::string::npos) {
    base = token.substr(0, caret);
    exponent = std::stod(token.substr(caret + 1));
  }
  LimitLaw law;
  const auto colon = base.find(':');
  const std::string name = base.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) {
    std::istringstream in(base.substr(colon + 1));
    std::string piece;
    while (std::getline(in, piece, ',')) params.push_back(std::stod(piece));
  }
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw ConfigError("law '" + name + "' expects " + std::to_string(n) +
                        " parameters");
    }
  };
  if (name == "exp1") {
    need(0);
    law = LimitLaw::exp1();
  } else if (name == "eta") {
    need(2);
    law = LimitLaw::eta(params[0], params[1]);
  } else if (name == "ml") {
    need(1);
    law = LimitLaw::mittag_leffler(params[0]);
  } else if (name == "zeta") {
    need(2);
    law = LimitLaw::zeta_power(params[0], params[1]);
  } else if (name == "beta") {
    need(2);
    law = LimitLaw::beta(params[0], params[1]);
  } else {
    throw ConfigError("unknown law '" + name +
                      "' (expected exp1|eta|ml|zeta|beta)");
  }
  if (exponent != 1.0) {
    law = LimitLaw::product({{law, exponent}});
  }
  return law;
}

LimitLaw parse_law(const std::string& text) {
  std::vector<std::pair<LimitLaw, double>> factors;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, '*')) {
    const LimitLaw f = parse_factor(token);
    if (f.kind == LimitLaw::Kind::kProduct) {
      factors.insert(factors.end(), f.factors.begin(), f.factors.end());
    } else {
      factors.emplace_back(f, 1.0);
    }
  }
  if (factors.empty()) throw ConfigError("empty law descriptor");
  if (factors.size() == 1 && factors[0].second == 1.0) {
    return factors[0].first;
  }
  return LimitLaw::product(std::move(factors));
}

int run_laws(const CommonArgs& args, const std::string& law_text, int knots) {
  const LimitLaw law = parse_law(law_text);
  law.check();
  const CompiledLimitLaw compiled(law, 1e-5);
  const TabulatedCdf table = compiled.tabulate(knots);
  auto csv = open_csv(args, "law.csv", law.describe());
  csv << "x,cdf,density_estimate\n";
  for (std::size_t i = 1; i + 1 < table.grid.size(); ++i) {
    const double dx = table.grid[i + 1] - table.grid[i - 1];
    const double density =
        dx > 0.0 ? (table.values[i + 1] - table.values[i - 1]) / dx : 0.0;
    csv << table.grid[i] << "," << table.values[i] << "," << density << "\n";
  }
  std::cout << "wrote " << table.grid.size() - 2 << " rows for "
            << law.describe() << "\n";
  return 0;
}

int run_verify(const CommonArgs& args, const std::vector<std::string>& only) {
  VerifyOptions options;
  options.seed = args.seed;
  options.workers = args.workers;
  options.progress = true;
  options.only = only;
  const auto summary = run_verification(options);
  print_summary(summary, std::cout);
  std::filesystem::create_directories(args.out_dir);
  write_summary_csv(summary, args.out_dir + "/verify_summary.csv");
  return summary.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "branchlab: simulation laboratory for critical branching processes "
      "with prevailing emigration on renewal clocks"};
  app.require_subcommand(1);

  CommonArgs args;
  std::vector<double> grid = {16, 32, 64, 128, 256, 512};
  bool discrete = false;
  double horizon = 512.0;
  std::uint64_t min_survivors = 100;
  std::string law_text = "exp1";
  int knots = 2048;
  std::vector<std::string> only;

  auto* validate_cmd =
      app.add_subcommand("validate", "check a model configuration");
  validate_cmd->add_option("--config", args.config_path)->required();

  auto* survival_cmd = app.add_subcommand(
      "survival", "survival curve and tail fit on a horizon grid");
  add_common(survival_cmd, args);
  survival_cmd->add_option("--grid", grid, "ascending horizons")->delimiter(',');
  survival_cmd->add_flag("--discrete", discrete,
                         "use chain generations instead of the clock");

  auto* yaglom_cmd = app.add_subcommand(
      "yaglom", "conditional normalized sample and KS report");
  add_common(yaglom_cmd, args);
  yaglom_cmd->add_option("--t", horizon, "observation time");
  yaglom_cmd->add_option("--min-survivors", min_survivors);

  auto* arb_cmd = app.add_subcommand(
      "arb", "regenerative run: atom at zero plus conditional KS");
  add_common(arb_cmd, args);
  arb_cmd->add_option("--t", horizon, "observation time");
  arb_cmd->add_option("--min-survivors", min_survivors);

  auto* laws_cmd =
      app.add_subcommand("laws", "tabulate a limit law as CSV");
  add_common(laws_cmd, args, /*with_config=*/false);
  laws_cmd->add_option("--law", law_text,
                       "exp1 | eta:t,g | ml:r | zeta:r,g | beta:a,b, "
                       "factors joined with '*', optional ^exponent");
  laws_cmd->add_option("--knots", knots);

  auto* verify_cmd = app.add_subcommand(
      "verify", "run the acceptance criteria and write the summary");
  add_common(verify_cmd, args, /*with_config=*/false);
  verify_cmd->add_option("--only", only, "criterion ids to run")
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return run_validate(args);
    if (survival_cmd->parsed()) return run_survival(args, grid, discrete);
    if (yaglom_cmd->parsed()) return run_yaglom(args, horizon, min_survivors);
    if (arb_cmd->parsed()) return run_arb(args, horizon, min_survivors);
    if (laws_cmd->parsed()) return run_laws(args, law_text, knots);
    if (verify_cmd->parsed()) return run_verify(args, only);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
