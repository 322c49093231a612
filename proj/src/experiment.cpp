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

#include "privergm/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "privergm/io.hpp"
#include "privergm/privacy.hpp"
#include "privergm/rng.hpp"
#include "privergm/sampler.hpp"

namespace privergm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Seed namespaces: fits, releases, the shared KL sample and the reference
// fit each get their own branch so extending the grid never shifts the
// randomness of existing cells.
constexpr std::uint64_t kFitBranch = 1;
constexpr std::uint64_t kReleaseBranch = 2;
constexpr std::uint64_t kKlBranch = 3;
constexpr std::uint64_t kReferenceBranch = 4;

std::uint64_t pi_bits(double pi) { return std::bit_cast<std::uint64_t>(pi); }

double to_double(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number '" + v + "' for " + key);
  }
}

long long to_int(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long i = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer '" + v + "' for " + key);
  }
}

std::vector<double> to_double_list(const std::string& v,
                                   const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto b = field.find_first_not_of(" \t");
    const auto e = field.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(to_double(field.substr(b, e - b + 1), key));
  }
  if (out.empty()) {
    throw std::invalid_argument("config: empty list for " + key);
  }
  return out;
}

// Linear-interpolated sample quantile of already-collected values.
double percentile(std::vector<double> v, double p) {
  if (v.empty()) return kNaN;
  std::sort(v.begin(), v.end());
  const double h = (static_cast<double>(v.size()) - 1.0) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= v.size()) return v.back();
  return v[lo] + (h - lo) * (v[lo + 1] - v[lo]);
}

std::string fmt_or_na(double v) {
  return std::isfinite(v) ? format_double(v) : "NA";
}

struct Cell {
  int pi_index;
  double pi;
  int replicate;
};

}  // namespace

ExperimentConfig load_experiment_config(const std::string& path) {
  const auto kv = read_key_values(path);
  ExperimentConfig cfg;
  for (const auto& [key, value] : kv) {
    if (key == "graph") {
      cfg.graph_path = value;
    } else if (key == "covariates") {
      cfg.covariate_path = value;
    } else if (key == "synthetic.n") {
      cfg.synthetic_n = static_cast<int>(to_int(value, key));
    } else if (key == "synthetic.seed") {
      cfg.synthetic_seed = static_cast<std::uint64_t>(to_int(value, key));
    } else if (key == "model") {
      cfg.model = value;
    } else if (key == "pi") {
      cfg.pi_grid = to_double_list(value, key);
    } else if (key == "replicates") {
      cfg.replicates = static_cast<int>(to_int(value, key));
    } else if (key == "seed") {
      cfg.master_seed = static_cast<std::uint64_t>(to_int(value, key));
    } else if (key == "workers") {
      cfg.workers = static_cast<int>(to_int(value, key));
    } else if (key == "out") {
      cfg.out_dir = value;
    } else if (key == "sampler.draws") {
      cfg.sampler.draws = static_cast<int>(to_int(value, key));
    } else if (key == "sampler.burn_in") {
      cfg.sampler.burn_in = to_int(value, key);
    } else if (key == "sampler.interval") {
      cfg.sampler.interval = to_int(value, key);
    } else if (key == "sampler.proposal") {
      if (value == "tnt") {
        cfg.sampler.proposal.kind = ProposalKind::kTNT;
      } else if (value == "dyad") {
        cfg.sampler.proposal.kind = ProposalKind::kDyadToggle;
      } else {
        throw std::invalid_argument("config: sampler.proposal must be tnt or dyad");
      }
    } else if (key == "sampler.edge_prob") {
      cfg.sampler.proposal.edge_prob = to_double(value, key);
    } else if (key == "estimation.max_outer") {
      cfg.estimation.max_outer = static_cast<int>(to_int(value, key));
    } else if (key == "estimation.max_inner") {
      cfg.estimation.max_inner = static_cast<int>(to_int(value, key));
    } else if (key == "estimation.damping") {
      cfg.estimation.damping = to_double(value, key);
    } else if (key == "estimation.param_tol") {
      cfg.estimation.param_tol = to_double(value, key);
    } else if (key == "estimation.outer_tol") {
      cfg.estimation.outer_tol = to_double(value, key);
    } else if (key == "estimation.ess_floor") {
      cfg.estimation.ess_floor = to_double(value, key);
    } else if (key == "estimation.max_step") {
      cfg.estimation.max_step = to_double(value, key);
    } else if (key == "reference.draws") {
      cfg.reference_draws = static_cast<int>(to_int(value, key));
    } else if (key == "kl.draws") {
      cfg.kl_draws = static_cast<int>(to_int(value, key));
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

Graph synthetic_school_graph(int n, std::uint64_t seed) {
  Graph g(n);
  Rng rng(derive_seed(seed, {0xC0F1u}));
  std::vector<std::string> drug(n);
  std::vector<std::string> sport(n);
  std::vector<std::string> smoke(n);
  for (int i = 0; i < n; ++i) {
    drug[i] = rng.bernoulli(0.35) ? "yes" : "no";
    sport[i] = rng.bernoulli(0.55) ? "regular" : "irregular";
    smoke[i] = rng.bernoulli(0.30) ? "yes" : "no";
  }
  g.set_covariate("drug", drug);
  g.set_covariate("sport", sport);
  g.set_covariate("smoke", smoke);

  const ModelSpec spec = ModelSpec::parse(
      "edges + gwesp(0.5) + gwdegree(0.5) + nodematch(drug) + "
      "nodematch(sport) + nodematch(smoke)");
  Vec theta(6);
  theta << -4.3, 0.65, 0.3, 0.7, 0.5, 0.6;
  const std::int64_t steps = 60 * g.num_dyads();
  return chain_endpoint(theta, spec, g, steps,
                        derive_seed(seed, {0xC0F1u, 2u}));
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.replicates < 1) {
    throw std::invalid_argument("experiment: replicates must be >= 1");
  }
  if (cfg.pi_grid.empty()) {
    throw std::invalid_argument("experiment: empty pi grid");
  }
  for (double pi : cfg.pi_grid) {
    PrivacyParams::symmetric(pi);  // validates (0, 1/2)
  }

  LoadedGraph loaded =
      cfg.graph_path.empty()
          ? LoadedGraph{synthetic_school_graph(cfg.synthetic_n,
                                               cfg.synthetic_seed),
                        {}}
          : read_graph(cfg.graph_path, cfg.covariate_path);
  const Graph& x = loaded.graph;
  const ModelSpec spec = ModelSpec::parse(cfg.model);
  spec.validate_for(x);
  const int q = spec.dim();

  std::filesystem::create_directories(cfg.out_dir);
  const auto out_path = [&](const std::string& name) {
    return (std::filesystem::path(cfg.out_dir) / name).string();
  };

  // Reference fit on the original graph; everything downstream compares
  // against it.
  SamplerConfig ref_scfg = cfg.sampler;
  ref_scfg.draws =
      cfg.reference_draws > 0 ? cfg.reference_draws : 4 * cfg.sampler.draws;
  ref_scfg.seed = derive_seed(cfg.master_seed, {kReferenceBranch});
  const FitResult reference = fit_naive(x, spec, cfg.estimation, ref_scfg);
  write_fit_result(out_path("reference_fit.txt"), reference, spec.to_string());
  if (!reference.converged) {
    throw ConvergenceError(
        "experiment: reference fit on the original graph did not converge "
        "(diagnostics in " + out_path("reference_fit.txt") + ")");
  }
  const Vec theta_ref = reference.theta;

  // One shared sample at the reference estimate backs every KL evaluation.
  SamplerConfig kl_scfg = cfg.sampler;
  kl_scfg.draws = cfg.kl_draws;
  kl_scfg.seed = derive_seed(cfg.master_seed, {kKlBranch});
  kl_scfg.retain_graphs = false;
  const SampleSet kl_sample = sample(theta_ref, spec, x, kl_scfg);

  std::vector<Cell> cells;
  for (std::size_t p = 0; p < cfg.pi_grid.size(); ++p) {
    for (int r = 0; r < cfg.replicates; ++r) {
      cells.push_back(Cell{static_cast<int>(p), cfg.pi_grid[p], r});
    }
  }

  struct CellOutcome {
    EvalRecord naive;
    EvalRecord missing;
  };
  std::vector<CellOutcome> outcomes(cells.size());

  auto run_cell = [&](const Cell& cell) {
    CellOutcome outcome;
    const PrivacyParams params = PrivacyParams::symmetric(cell.pi);
    const std::uint64_t release_seed = derive_seed(
        cfg.master_seed, {kReleaseBranch, pi_bits(cell.pi),
                          static_cast<std::uint64_t>(cell.replicate)});
    const Graph y = release(x, params, release_seed);

    for (int method = 0; method < 2; ++method) {
      EvalRecord rec;
      rec.pi = cell.pi;
      rec.replicate = cell.replicate;
      rec.method = method == 0 ? FitMethod::kNaive : FitMethod::kMissingData;
      rec.release_seed = release_seed;
      rec.fit_seed = derive_seed(
          cfg.master_seed, {kFitBranch, pi_bits(cell.pi),
                            static_cast<std::uint64_t>(cell.replicate),
                            static_cast<std::uint64_t>(method)});
      SamplerConfig scfg = cfg.sampler;
      scfg.seed = rec.fit_seed;
      rec.kl = kNaN;
      rec.theta_hat = Vec::Zero(q);
      rec.sq_err = Vec::Zero(q);
      try {
        const FitResult fit =
            method == 0 ? fit_naive(y, spec, cfg.estimation, scfg)
                        : fit_missing(y, spec, params, cfg.estimation, scfg);
        rec.converged = fit.converged;
        rec.theta_hat = fit.theta;
        rec.draws = fit.mc_settings.draws;
        rec.burn_in = fit.mc_settings.burn_in;
        rec.interval = fit.mc_settings.interval;
        if (fit.converged) {
          rec.sq_err = (fit.theta - theta_ref).array().square();
          rec.kl = kl_from_sample(fit.theta, kl_sample);
        }
      } catch (const std::exception&) {
        rec.converged = false;
      }
      (method == 0 ? outcome.naive : outcome.missing) = rec;
    }
    return outcome;
  };

  const int workers =
      cfg.workers > 0
          ? cfg.workers
          : std::max(1u, std::thread::hardware_concurrency());
  if (workers <= 1 || cells.size() <= 1) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      outcomes[c] = run_cell(cells[c]);
    }
  } else {
    // Deterministic regardless of scheduling: every cell's randomness is a
    // pure function of its seeds and results land in indexed slots.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t c = next.fetch_add(1);
          if (c >= cells.size()) break;
          outcomes[c] = run_cell(cells[c]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  ExperimentResult result;
  result.theta_reference = theta_ref;
  result.term_names = spec.term_names();
  for (const CellOutcome& o : outcomes) {
    result.records.push_back(o.naive);
    result.records.push_back(o.missing);
    result.failed_fits += (o.naive.converged ? 0 : 1);
    result.failed_fits += (o.missing.converged ? 0 : 1);
  }

  // ---- Record stream ----
  {
    std::ofstream out(out_path("records.tsv"));
    if (!out) throw IoError("cannot write records.tsv");
    out << "pi\treplicate\tmethod\tconverged\tkl";
    for (const auto& t : result.term_names) out << "\testimate." << t;
    for (const auto& t : result.term_names) out << "\tsqerr." << t;
    out << "\trelease_seed\tfit_seed\tdraws\tburn_in\tinterval\n";
    for (const EvalRecord& r : result.records) {
      out << format_double(r.pi) << "\t" << r.replicate << "\t"
          << fit_method_name(r.method) << "\t" << (r.converged ? 1 : 0)
          << "\t" << fmt_or_na(r.kl);
      for (int t = 0; t < q; ++t) out << "\t" << format_double(r.theta_hat[t]);
      for (int t = 0; t < q; ++t) {
        out << "\t" << (r.converged ? format_double(r.sq_err[t]) : "NA");
      }
      out << "\t" << r.release_seed << "\t" << r.fit_seed << "\t" << r.draws
          << "\t" << r.burn_in << "\t" << r.interval << "\n";
    }
  }

  const char* header = "pi\tmethod\tmetric\tparameter\tvalue\tlo\thi\n";

  // ---- KL against pi (mean plus a 99 percent percentile band) ----
  {
    std::ofstream out(out_path("kl_vs_pi.tsv"));
    if (!out) throw IoError("cannot write kl_vs_pi.tsv");
    out << header;
    for (double pi : cfg.pi_grid) {
      for (FitMethod method : {FitMethod::kNaive, FitMethod::kMissingData}) {
        std::vector<double> kls;
        for (const EvalRecord& r : result.records) {
          if (r.pi == pi && r.method == method && r.converged &&
              std::isfinite(r.kl)) {
            kls.push_back(r.kl);
          }
        }
        double mean = kNaN;
        if (!kls.empty()) {
          mean = 0.0;
          for (double v : kls) mean += v;
          mean /= static_cast<double>(kls.size());
        }
        out << format_double(pi) << "\t" << fit_method_name(method)
            << "\tkl\t-\t" << fmt_or_na(mean) << "\t"
            << fmt_or_na(percentile(kls, 0.005)) << "\t"
            << fmt_or_na(percentile(kls, 0.995)) << "\n";
      }
    }
  }

  // ---- Per-parameter MSE ----
  const std::vector<MseCell> mse_all = mse_table(result.records, theta_ref);
  {
    std::ofstream out(out_path("mse_by_parameter.tsv"));
    if (!out) throw IoError("cannot write mse_by_parameter.tsv");
    out << header;
    for (const MseCell& c : mse_all) {
      std::vector<double> sq;
      for (const EvalRecord& r : result.records) {
        if (r.pi == c.pi && r.method == c.method && r.converged) {
          sq.push_back(r.sq_err[c.parameter]);
        }
      }
      out << format_double(c.pi) << "\t" << fit_method_name(c.method)
          << "\tmse\t" << result.term_names[c.parameter] << "\t"
          << format_double(c.mse) << "\t" << fmt_or_na(percentile(sq, 0.005))
          << "\t" << fmt_or_na(percentile(sq, 0.995)) << "\n";
    }
  }

  // ---- Relative efficiency (Table-style; < 100 favors missing-data) ----
  {
    std::vector<MseCell> mse_missing;
    std::vector<MseCell> mse_naive;
    for (const MseCell& c : mse_all) {
      (c.method == FitMethod::kMissingData ? mse_missing : mse_naive)
          .push_back(c);
    }
    std::ofstream out(out_path("relative_efficiency.tsv"));
    if (!out) throw IoError("cannot write relative_efficiency.tsv");
    out << header;
    if (!mse_missing.empty() && !mse_naive.empty()) {
      for (const EfficiencyCell& c :
           relative_efficiency(mse_missing, mse_naive)) {
        out << format_double(c.pi) << "\t-\trelative_efficiency\t"
            << result.term_names[c.parameter] << "\t"
            << (c.defined ? format_double(c.value) : "NA") << "\tNA\tNA\n";
      }
    }
  }

  // ---- Human-readable summary ----
  {
    std::ofstream out(out_path("run_summary.txt"));
    if (!out) throw IoError("cannot write run_summary.txt");
    out << "model = " << spec.to_string() << "\n";
    out << "nodes = " << x.node_count() << "\n";
    out << "edges = " << x.edge_count() << "\n";
    out << "graph = "
        << (cfg.graph_path.empty()
                ? "synthetic(n=" + std::to_string(cfg.synthetic_n) +
                      ", seed=" + std::to_string(cfg.synthetic_seed) + ")"
                : cfg.graph_path)
        << "\n";
    out << "pi =";
    for (double pi : cfg.pi_grid) out << " " << format_double(pi);
    out << "\nreplicates = " << cfg.replicates << "\n";
    out << "master_seed = " << cfg.master_seed << "\n";
    out << "sampler.draws = " << cfg.sampler.draws << "\n";
    out << "reference.draws = " << ref_scfg.draws << "\n";
    out << "kl.draws = " << cfg.kl_draws << "\n";
    out << "reference estimates:\n";
    for (int t = 0; t < q; ++t) {
      out << "  " << result.term_names[t] << " = "
          << format_double(theta_ref[t]) << "\n";
    }
    out << "failed fits (excluded from aggregates):\n";
    for (double pi : cfg.pi_grid) {
      for (FitMethod method : {FitMethod::kNaive, FitMethod::kMissingData}) {
        int failures = 0;
        for (const EvalRecord& r : result.records) {
          if (r.pi == pi && r.method == method && !r.converged) ++failures;
        }
        out << "  pi=" << format_double(pi) << " " << fit_method_name(method)
            << ": " << failures << " of " << cfg.replicates << "\n";
      }
    }
  }

  result.aggregate_files = {out_path("records.tsv"), out_path("kl_vs_pi.tsv"),
                            out_path("mse_by_parameter.tsv"),
                            out_path("relative_efficiency.tsv")};
  return result;
}

}  // namespace privergm
