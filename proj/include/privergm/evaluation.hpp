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

#ifndef PRIVERGM_EVALUATION_HPP_
#define PRIVERGM_EVALUATION_HPP_

#include <cstdint>
#include <vector>

#include "privergm/estimation.hpp"
#include "privergm/graph.hpp"
#include "privergm/model.hpp"
#include "privergm/sampler.hpp"

namespace privergm {

/// One (replicate, method) cell of an experiment run.
struct EvalRecord {
  double pi = 0.0;
  int replicate = 0;
  FitMethod method = FitMethod::kNaive;
  bool converged = false;
  double kl = 0.0;
  Vec theta_hat;
  Vec sq_err;  // per-parameter squared error against the reference estimate
  std::uint64_t release_seed = 0;
  std::uint64_t fit_seed = 0;
  int draws = 0;
  std::int64_t burn_in = 0;
  std::int64_t interval = 0;
};

/// KL divergence between the ERGMs at theta_x and theta_y:
///   (theta_x - theta_y) . E_{theta_x}[g] + log c(theta_y) - log c(theta_x).
/// Exact by enumeration when shape has at most 5 nodes, otherwise estimated
/// from a sample drawn at theta_x with the ratio approximation.
double kl_divergence(const Vec& theta_x, const Vec& theta_y,
                     const ModelSpec& spec, const Graph& shape,
                     const SamplerConfig& scfg);

/// Same estimate reusing a sample already drawn at theta_x; the experiment
/// harness shares one such sample across all its KL evaluations.
double kl_from_sample(const Vec& theta_y, const SampleSet& sample_at_x);

struct MseCell {
  double pi;
  FitMethod method;
  int parameter;  // term index
  double mse;
  int replicates;  // converged replicates aggregated
};

/// Mean squared difference between each record's estimate and the reference
/// estimate, grouped by (pi, method, parameter). Non-converged records are
/// skipped; cells are sorted by (pi, method, parameter).
std::vector<MseCell> mse_table(const std::vector<EvalRecord>& records,
                               const Vec& theta_reference);

struct EfficiencyCell {
  double pi;
  int parameter;
  double value;  // 100 * MSE[missing] / MSE[naive]; < 100 favors missing
  bool defined;  // false when the naive MSE is zero
};

/// Relative efficiency in percent from aligned per-method MSE tables.
std::vector<EfficiencyCell> relative_efficiency(
    const std::vector<MseCell>& mse_missing,
    const std::vector<MseCell>& mse_naive);

}  // namespace privergm

#endif  // PRIVERGM_EVALUATION_HPP_
