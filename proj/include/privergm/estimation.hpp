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

#ifndef PRIVERGM_ESTIMATION_HPP_
#define PRIVERGM_ESTIMATION_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "privergm/graph.hpp"
#include "privergm/model.hpp"
#include "privergm/privacy.hpp"
#include "privergm/sampler.hpp"

namespace privergm {

enum class FitMethod { kNaive, kMissingData, kExactOracle, kExactOracleMissing, kMple };

std::string fit_method_name(FitMethod m);

struct FitResult {
  Vec theta;
  Vec std_errors;  // populated only when converged
  bool converged = false;
  int iterations = 0;               // outer iterations (Newton steps for oracles)
  double log_lik_ratio_at_opt = 0;  // approximate log L(theta_hat) - log L(theta_init)
  SamplerConfig mc_settings;        // settings of the last sampling round
  std::uint64_t seed = 0;
  FitMethod method = FitMethod::kNaive;
  std::vector<std::string> term_names;
  std::string message;        // diagnostics: separation, nonexistence, ESS notes
  double weight_ess = -1.0;   // privacy-weight effective sample size (missing fits)
};

/// Schedule for the iterate-and-reanchor Monte Carlo maximization. Each
/// outer round samples at the current anchor theta0, runs damped Newton on
/// the resulting approximate likelihood, then re-anchors at the maximizer.
struct EstimationConfig {
  int max_outer = 60;
  int max_inner = 25;
  double damping = 0.5;     // Newton step damping factor
  double param_tol = 1e-4;  // inner stop: max |theta change|
  double outer_tol = 0.025; // outer stop: anchor movement, widened by MC noise
  double ess_floor = 0.1;   // fraction of draws; below it the round re-anchors
  double max_step = 1.0;    // per-step clamp on |step|_inf
  bool use_mple_init = true;
  Vec theta0;               // used when use_mple_init is false
};

struct MpleFit {
  Vec theta;
  bool separated = false;  // divergence/separation detected; theta is zero
};

/// Maximum pseudo-likelihood estimate: logistic regression of dyad states on
/// change statistics, fit by iteratively reweighted least squares. Equals
/// logit(m/N) exactly for the edges-only model. Separation (e.g. an empty
/// or complete graph) is reported via the flag with theta falling back to 0.
MpleFit mple(const Graph& y, const ModelSpec& spec);

/// log of the importance-sampling estimate of c(theta)/c(theta0) from draws
/// at theta0:  log (1/M) sum_i exp{(theta - theta0) . g(X_i)}.
/// Exactly zero at theta == theta0.
double log_ratio_naive(const Vec& theta, const Vec& theta0,
                       const SampleSet& sample);

/// log of the privacy-weighted estimate of c(theta|y)/c(theta0):
/// log (1/M) sum_i exp{(theta - theta0) . g(X_i)} P(y | X_i). Requires the
/// sample to retain graphs. For the symmetric mechanism each weight depends
/// on X_i only through hamming(y, X_i).
double log_ratio_missing(const Vec& theta, const Vec& theta0,
                         const SampleSet& sample, const Graph& y,
                         const PrivacyParams& params);

/// Per-draw log privacy weights log P(y | X_i).
std::vector<double> privacy_log_weights(const SampleSet& sample,
                                        const Graph& y,
                                        const PrivacyParams& params);

/// MCMC maximum likelihood ignoring the privacy mechanism: maximizes
/// theta.g(y) - log c(theta) through the ratio approximation.
FitResult fit_naive(const Graph& y, const ModelSpec& spec,
                    const EstimationConfig& ecfg, const SamplerConfig& scfg);

/// Missing-data MCMC maximum likelihood: treats the protected graph as
/// missing and maximizes log c(theta|y) - log c(theta), both ratios
/// estimated from one sample set per round (common random numbers).
FitResult fit_missing(const Graph& y, const ModelSpec& spec,
                      const PrivacyParams& params,
                      const EstimationConfig& ecfg, const SamplerConfig& scfg);

/// Exact maximum likelihood by full enumeration (n <= 5); the ground-truth
/// oracle for fit_naive. Reports nonexistence when the observed statistic
/// sits on the boundary of its achievable range.
FitResult fit_exact(const Graph& y, const ModelSpec& spec);

/// Exact missing-data maximum likelihood by full enumeration (n <= 5);
/// the ground-truth oracle for fit_missing.
FitResult fit_exact_missing(const Graph& y, const ModelSpec& spec,
                            const PrivacyParams& params);

}  // namespace privergm

#endif  // PRIVERGM_ESTIMATION_HPP_
