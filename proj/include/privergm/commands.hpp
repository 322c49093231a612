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

#ifndef PRIVERGM_COMMANDS_HPP_
#define PRIVERGM_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "privergm/estimation.hpp"
#include "privergm/experiment.hpp"
#include "privergm/privacy.hpp"

namespace privergm {

/// Builds mechanism parameters from mutually exclusive CLI-style options:
/// --pi, --epsilon, or --p00 with --p11.
PrivacyParams params_from_options(std::optional<double> pi,
                                  std::optional<double> epsilon,
                                  std::optional<double> p00,
                                  std::optional<double> p11);

struct ReleaseOptions {
  std::string graph_path;
  std::string covariate_path;
  std::optional<double> pi;
  std::optional<double> epsilon;
  std::optional<double> p00;
  std::optional<double> p11;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string prefix = "release";
};

/// Writes `count` released graphs (edge list + metadata sidecar) with
/// per-release seeds derived from the master seed.
std::vector<std::string> cmd_release(const ReleaseOptions& opt);

struct FitOptions {
  std::string graph_path;
  std::string covariate_path;
  std::string model;
  std::string method = "naive";  // naive | missing
  std::string sidecar_path;      // missing-data: source of mechanism params
  std::optional<double> pi;      // alternative to a sidecar
  std::optional<double> p00;
  std::optional<double> p11;
  std::uint64_t seed = 0;
  std::string out_path = "fit.txt";
  SamplerConfig sampler;
  EstimationConfig estimation;
};

/// Fits one likelihood and writes the fit record. A non-converged fit still
/// writes its diagnostics, then raises ConvergenceError.
FitResult cmd_fit(const FitOptions& opt);

struct EvaluateOptions {
  std::string fit_a;  // the reference side of KL(a, b)
  std::string fit_b;
  std::string graph_path;  // shape: node count and covariates
  std::string covariate_path;
  int kl_draws = 4000;
  std::uint64_t seed = 0;
  std::string out_path;  // optional
};

/// KL divergence between the models of two fit files (exact when n <= 5).
double cmd_evaluate(const EvaluateOptions& opt);

struct OracleOptions {
  std::string graph_path;
  std::string covariate_path;
  std::string model;
  std::optional<double> pi;
  std::optional<double> p00;
  std::optional<double> p11;
  std::string out_path;  // optional fit-record output (exact fit)
};

struct OracleReport {
  FitResult exact;
  std::optional<FitResult> exact_missing;
  std::optional<double> kl_exact_vs_missing;
};

/// Enumeration-based fits and KL on a tiny graph (n <= 5), for
/// cross-checking the stochastic paths.
OracleReport cmd_oracle(const OracleOptions& opt);

}  // namespace privergm

#endif  // PRIVERGM_COMMANDS_HPP_
