// Copyright 2026 The privergm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "privergm/commands.hpp"
#include "privergm/experiment.hpp"
#include "privergm/io.hpp"

namespace {

// Exit codes: 0 success, 1 user error, 2 convergence failure, 3 I/O error.
constexpr int kUserError = 1;
constexpr int kConvergenceError = 2;
constexpr int kIoError = 3;

void print_fit(const privergm::FitResult& fit) {
  std::printf("method: %s  converged: %s  iterations: %d\n",
              privergm::fit_method_name(fit.method).c_str(),
              fit.converged ? "yes" : "no", fit.iterations);
  for (std::size_t t = 0; t < fit.term_names.size(); ++t) {
    const auto idx = static_cast<Eigen::Index>(t);
    if (fit.converged && fit.std_errors.size() == fit.theta.size()) {
      std::printf("  %-18s % .6f  (se %.6f)\n", fit.term_names[t].c_str(),
                  fit.theta[idx], fit.std_errors[idx]);
    } else {
      std::printf("  %-18s % .6f\n", fit.term_names[t].c_str(),
                  fit.theta[idx]);
    }
  }
  if (!fit.message.empty()) {
    std::printf("  note: %s\n", fit.message.c_str());
  }
}

void add_sampler_flags(CLI::App* cmd, privergm::SamplerConfig* scfg,
                       privergm::EstimationConfig* ecfg) {
  cmd->add_option("--draws", scfg->draws, "retained MCMC draws per round");
  cmd->add_option("--burn-in", scfg->burn_in,
                  "chain burn-in steps (-1: 10x dyad count)");
  cmd->add_option("--interval", scfg->interval,
                  "steps between retained draws (-1: dyad count)");
  cmd->add_option("--edge-prob", scfg->proposal.edge_prob,
                  "TNT edge-pick probability");
  cmd->add_option_function<std::string>(
      "--proposal",
      [scfg](const std::string& v) {
        if (v == "tnt") {
          scfg->proposal.kind = privergm::ProposalKind::kTNT;
        } else if (v == "dyad") {
          scfg->proposal.kind = privergm::ProposalKind::kDyadToggle;
        } else {
          throw CLI::ValidationError("--proposal must be tnt or dyad");
        }
      },
      "proposal kernel: tnt or dyad");
  if (ecfg != nullptr) {
    cmd->add_option("--max-outer", ecfg->max_outer,
                    "max sample-and-reanchor rounds");
    cmd->add_option("--damping", ecfg->damping, "Newton step damping");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "privergm: release graphs under edge differential privacy via dyad "
      "randomized response and fit ERGMs to the released graphs"};
  app.require_subcommand(1);

  // ---- release ----
  privergm::ReleaseOptions rel;
  auto* release_cmd = app.add_subcommand(
      "release", "release randomized-response synthetic graphs");
  release_cmd->add_option("--graph", rel.graph_path, "edge list file")
      ->required();
  release_cmd->add_option("--covariates", rel.covariate_path,
                          "covariate table");
  auto* rel_pi = release_cmd->add_option("--pi", "dyad flip probability");
  auto* rel_eps = release_cmd->add_option("--epsilon", "target epsilon");
  release_cmd->add_option("--p00", "probability of keeping a non-edge");
  release_cmd->add_option("--p11", "probability of keeping an edge");
  rel_pi->excludes(rel_eps);
  release_cmd->add_option("--count", rel.count, "number of releases");
  release_cmd->add_option("--seed", rel.seed, "master seed");
  release_cmd->add_option("--out", rel.out_dir, "output directory");
  release_cmd->add_option("--prefix", rel.prefix, "output file prefix");

  // ---- fit ----
  privergm::FitOptions fit_opt;
  auto* fit_cmd =
      app.add_subcommand("fit", "fit an ERGM to a (released) graph");
  fit_cmd->add_option("--graph", fit_opt.graph_path, "edge list file")
      ->required();
  fit_cmd->add_option("--covariates", fit_opt.covariate_path,
                      "covariate table");
  fit_cmd->add_option("--model", fit_opt.model, "model string")->required();
  fit_cmd->add_option("--method", fit_opt.method, "naive or missing");
  fit_cmd->add_option("--sidecar", fit_opt.sidecar_path,
                      "release metadata sidecar (missing-data method)");
  fit_cmd->add_option("--pi", "dyad flip probability (alternative to sidecar)");
  fit_cmd->add_option("--p00", "keep probability for non-edges");
  fit_cmd->add_option("--p11", "keep probability for edges");
  fit_cmd->add_option("--seed", fit_opt.seed, "RNG seed");
  fit_cmd->add_option("--out", fit_opt.out_path, "fit record output path");
  add_sampler_flags(fit_cmd, &fit_opt.sampler, &fit_opt.estimation);

  // ---- evaluate ----
  privergm::EvaluateOptions eval_opt;
  auto* eval_cmd = app.add_subcommand(
      "evaluate", "KL divergence between two fit records");
  eval_cmd->add_option("--fit-a", eval_opt.fit_a, "reference fit record")
      ->required();
  eval_cmd->add_option("--fit-b", eval_opt.fit_b, "comparison fit record")
      ->required();
  eval_cmd->add_option("--graph", eval_opt.graph_path,
                       "graph file (shape and covariates)")
      ->required();
  eval_cmd->add_option("--covariates", eval_opt.covariate_path,
                       "covariate table");
  eval_cmd->add_option("--kl-draws", eval_opt.kl_draws,
                       "draws for the KL estimate");
  eval_cmd->add_option("--seed", eval_opt.seed, "RNG seed");
  eval_cmd->add_option("--out", eval_opt.out_path, "report output path");

  // ---- experiment ----
  std::string exp_config_path;
  privergm::ExperimentConfig exp_cfg;
  std::vector<double> exp_pi_override;
  auto* exp_cmd = app.add_subcommand(
      "experiment",
      "full study: release, fit both likelihoods, aggregate KL/MSE tables");
  exp_cmd->add_option("--config", exp_config_path, "experiment config file");
  exp_cmd->add_option("--graph", "edge list file (default: synthetic graph)");
  exp_cmd->add_option("--covariates", "covariate table");
  exp_cmd->add_option("--model", "model string");
  exp_cmd->add_option("--pi", exp_pi_override, "flip probabilities")
      ->delimiter(',');
  exp_cmd->add_option("--replicates", "releases per pi");
  exp_cmd->add_option("--seed", "master seed");
  exp_cmd->add_option("--workers", "concurrent cells");
  exp_cmd->add_option("--out", "output directory");
  exp_cmd->add_option("--draws", "retained MCMC draws per fit round");

  // ---- oracle ----
  privergm::OracleOptions oracle_opt;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "enumeration-exact fits and KL on a tiny graph (n <= 5)");
  oracle_cmd->add_option("--graph", oracle_opt.graph_path, "edge list file")
      ->required();
  oracle_cmd->add_option("--covariates", oracle_opt.covariate_path,
                         "covariate table");
  oracle_cmd->add_option("--model", oracle_opt.model, "model string")
      ->required();
  oracle_cmd->add_option("--pi", "dyad flip probability");
  oracle_cmd->add_option("--p00", "keep probability for non-edges");
  oracle_cmd->add_option("--p11", "keep probability for edges");
  oracle_cmd->add_option("--out", oracle_opt.out_path,
                         "fit record output path");

  try {
    app.parse(argc, argv);

    auto opt_double = [](CLI::App* cmd,
                         const char* name) -> std::optional<double> {
      if (cmd->count(name) == 0) return std::nullopt;
      return cmd->get_option(name)->as<double>();
    };

    if (release_cmd->parsed()) {
      rel.pi = opt_double(release_cmd, "--pi");
      rel.epsilon = opt_double(release_cmd, "--epsilon");
      rel.p00 = opt_double(release_cmd, "--p00");
      rel.p11 = opt_double(release_cmd, "--p11");
      const auto files = privergm::cmd_release(rel);
      for (const auto& f : files) std::printf("%s\n", f.c_str());
    } else if (fit_cmd->parsed()) {
      fit_opt.pi = opt_double(fit_cmd, "--pi");
      fit_opt.p00 = opt_double(fit_cmd, "--p00");
      fit_opt.p11 = opt_double(fit_cmd, "--p11");
      const privergm::FitResult fit = privergm::cmd_fit(fit_opt);
      print_fit(fit);
      std::printf("written: %s\n", fit_opt.out_path.c_str());
    } else if (eval_cmd->parsed()) {
      const double kl = privergm::cmd_evaluate(eval_opt);
      std::printf("kl = %s\n", privergm::format_double(kl).c_str());
    } else if (exp_cmd->parsed()) {
      if (!exp_config_path.empty()) {
        exp_cfg = privergm::load_experiment_config(exp_config_path);
      }
      if (exp_cmd->count("--graph")) {
        exp_cfg.graph_path = exp_cmd->get_option("--graph")->as<std::string>();
      }
      if (exp_cmd->count("--covariates")) {
        exp_cfg.covariate_path =
            exp_cmd->get_option("--covariates")->as<std::string>();
      }
      if (exp_cmd->count("--model")) {
        exp_cfg.model = exp_cmd->get_option("--model")->as<std::string>();
      }
      if (!exp_pi_override.empty()) exp_cfg.pi_grid = exp_pi_override;
      if (exp_cmd->count("--replicates")) {
        exp_cfg.replicates = exp_cmd->get_option("--replicates")->as<int>();
      }
      if (exp_cmd->count("--seed")) {
        exp_cfg.master_seed =
            exp_cmd->get_option("--seed")->as<std::uint64_t>();
      }
      if (exp_cmd->count("--workers")) {
        exp_cfg.workers = exp_cmd->get_option("--workers")->as<int>();
      }
      if (exp_cmd->count("--out")) {
        exp_cfg.out_dir = exp_cmd->get_option("--out")->as<std::string>();
      }
      if (exp_cmd->count("--draws")) {
        exp_cfg.sampler.draws = exp_cmd->get_option("--draws")->as<int>();
      }
      const privergm::ExperimentResult result =
          privergm::run_experiment(exp_cfg);
      std::printf("records: %zu (failed fits: %d)\n", result.records.size(),
                  result.failed_fits);
      for (const auto& f : result.aggregate_files) {
        std::printf("%s\n", f.c_str());
      }
    } else if (oracle_cmd->parsed()) {
      oracle_opt.pi = opt_double(oracle_cmd, "--pi");
      oracle_opt.p00 = opt_double(oracle_cmd, "--p00");
      oracle_opt.p11 = opt_double(oracle_cmd, "--p11");
      const privergm::OracleReport report = privergm::cmd_oracle(oracle_opt);
      std::printf("exact fit:\n");
      print_fit(report.exact);
      if (report.exact_missing.has_value()) {
        std::printf("exact missing-data fit:\n");
        print_fit(*report.exact_missing);
      }
      if (report.kl_exact_vs_missing.has_value()) {
        std::printf("kl(exact, exact_missing) = %s\n",
                    privergm::format_double(*report.kl_exact_vs_missing)
                        .c_str());
      }
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUserError;
  } catch (const privergm::ConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConvergenceError;
  } catch (const privergm::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIoError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUserError;
  }
  return 0;
}
