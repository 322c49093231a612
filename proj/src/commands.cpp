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

#include "privergm/commands.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "privergm/enumeration.hpp"
#include "privergm/evaluation.hpp"
#include "privergm/io.hpp"
#include "privergm/rng.hpp"

namespace privergm {

PrivacyParams params_from_options(std::optional<double> pi,
                                  std::optional<double> epsilon,
                                  std::optional<double> p00,
                                  std::optional<double> p11) {
  const int ways = (pi.has_value() ? 1 : 0) + (epsilon.has_value() ? 1 : 0) +
                   ((p00.has_value() || p11.has_value()) ? 1 : 0);
  if (ways == 0) {
    throw std::invalid_argument(
        "no mechanism parameters given: use --pi, --epsilon, or --p00/--p11");
  }
  if (ways > 1) {
    throw std::invalid_argument(
        "--pi, --epsilon and --p00/--p11 are mutually exclusive");
  }
  if (pi.has_value()) return PrivacyParams::symmetric(*pi);
  if (epsilon.has_value()) return PrivacyParams::for_epsilon(*epsilon);
  if (!p00.has_value() || !p11.has_value()) {
    throw std::invalid_argument("--p00 and --p11 must be given together");
  }
  return PrivacyParams::general(*p00, *p11);
}

std::vector<std::string> cmd_release(const ReleaseOptions& opt) {
  if (opt.count < 1) {
    throw std::invalid_argument("release: count must be >= 1");
  }
  const PrivacyParams params =
      params_from_options(opt.pi, opt.epsilon, opt.p00, opt.p11);
  const LoadedGraph loaded = read_graph(opt.graph_path, opt.covariate_path);
  std::filesystem::create_directories(opt.out_dir);

  std::vector<std::string> files;
  for (int k = 0; k < opt.count; ++k) {
    const std::uint64_t seed =
        derive_seed(opt.seed, {static_cast<std::uint64_t>(k)});
    const Graph y = release(loaded.graph, params, seed);
    const std::string base =
        (std::filesystem::path(opt.out_dir) /
         (opt.prefix + "_" + std::to_string(k)))
            .string();
    write_edge_list(y, loaded.labels, base + ".edges");
    ReleaseMeta meta;
    meta.params = params;
    meta.seed = seed;
    meta.node_count = y.node_count();
    write_release_sidecar(base + ".meta", meta, loaded.labels);
    files.push_back(base + ".edges");
    files.push_back(base + ".meta");
  }
  return files;
}

FitResult cmd_fit(const FitOptions& opt) {
  if (opt.method != "naive" && opt.method != "missing") {
    throw std::invalid_argument("fit: method must be 'naive' or 'missing'");
  }
  const LoadedGraph loaded = read_graph(opt.graph_path, opt.covariate_path);
  const ModelSpec spec = ModelSpec::parse(opt.model);
  SamplerConfig scfg = opt.sampler;
  scfg.seed = opt.seed;

  FitResult fit;
  if (opt.method == "naive") {
    fit = fit_naive(loaded.graph, spec, opt.estimation, scfg);
  } else {
    PrivacyParams params = PrivacyParams::general(1.0, 1.0);
    if (!opt.sidecar_path.empty()) {
      params = read_release_sidecar(opt.sidecar_path).params;
    } else if (opt.pi.has_value() || opt.p00.has_value() ||
               opt.p11.has_value()) {
      params = params_from_options(opt.pi, std::nullopt, opt.p00, opt.p11);
    } else {
      throw std::invalid_argument(
          "fit: the missing-data method needs the mechanism parameters; "
          "pass the release sidecar (--sidecar) or --pi / --p00/--p11");
    }
    fit = fit_missing(loaded.graph, spec, params, opt.estimation, scfg);
  }
  write_fit_result(opt.out_path, fit, spec.to_string());
  if (!fit.converged) {
    throw ConvergenceError("fit did not converge; diagnostics written to " +
                           opt.out_path);
  }
  return fit;
}

double cmd_evaluate(const EvaluateOptions& opt) {
  const LoadedFit a = read_fit_result(opt.fit_a);
  const LoadedFit b = read_fit_result(opt.fit_b);
  if (a.model_string != b.model_string) {
    throw std::invalid_argument("evaluate: fits use different models ('" +
                                a.model_string + "' vs '" + b.model_string +
                                "')");
  }
  const LoadedGraph loaded = read_graph(opt.graph_path, opt.covariate_path);
  const ModelSpec spec = ModelSpec::parse(a.model_string);
  SamplerConfig scfg;
  scfg.draws = opt.kl_draws;
  scfg.seed = opt.seed;
  const double kl = kl_divergence(a.theta, b.theta, spec, loaded.graph, scfg);
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) throw IoError("cannot write '" + opt.out_path + "'");
    out << "kl = " << format_double(kl) << "\n";
    out << "fit_a = " << opt.fit_a << "\n";
    out << "fit_b = " << opt.fit_b << "\n";
    out << "model = " << a.model_string << "\n";
    out << "exact = "
        << (loaded.graph.node_count() <= GraphEnumeration::kMaxNodes ? "true"
                                                                     : "false")
        << "\n";
  }
  return kl;
}

OracleReport cmd_oracle(const OracleOptions& opt) {
  const LoadedGraph loaded = read_graph(opt.graph_path, opt.covariate_path);
  if (loaded.graph.node_count() > GraphEnumeration::kMaxNodes) {
    throw std::invalid_argument(
        "oracle: graph too large for enumeration (n <= " +
        std::to_string(GraphEnumeration::kMaxNodes) + ")");
  }
  const ModelSpec spec = ModelSpec::parse(opt.model);
  OracleReport report;
  report.exact = fit_exact(loaded.graph, spec);
  if (opt.pi.has_value() || opt.p00.has_value() || opt.p11.has_value()) {
    const PrivacyParams params =
        params_from_options(opt.pi, std::nullopt, opt.p00, opt.p11);
    report.exact_missing = fit_exact_missing(loaded.graph, spec, params);
    if (report.exact.converged && report.exact_missing->converged) {
      SamplerConfig unused;
      report.kl_exact_vs_missing =
          kl_divergence(report.exact.theta, report.exact_missing->theta, spec,
                        loaded.graph, unused);
    }
  }
  if (!opt.out_path.empty()) {
    write_fit_result(opt.out_path, report.exact, spec.to_string());
  }
  return report;
}

}  // namespace privergm
