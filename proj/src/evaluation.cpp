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

#include "privergm/evaluation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "privergm/enumeration.hpp"

namespace privergm {

double kl_divergence(const Vec& theta_x, const Vec& theta_y,
                     const ModelSpec& spec, const Graph& shape,
                     const SamplerConfig& scfg) {
  if (theta_x.size() != spec.dim() || theta_y.size() != spec.dim()) {
    throw std::invalid_argument("kl_divergence: dimension mismatch");
  }
  if (shape.node_count() <= GraphEnumeration::kMaxNodes) {
    const GraphEnumeration enumeration(spec, shape);
    return (theta_x - theta_y).dot(enumeration.mean_stats(theta_x)) +
           enumeration.log_normalizer(theta_y) -
           enumeration.log_normalizer(theta_x);
  }
  const SampleSet s = sample(theta_x, spec, shape, scfg);
  return kl_from_sample(theta_y, s);
}

double kl_from_sample(const Vec& theta_y, const SampleSet& sample_at_x) {
  if (theta_y.size() != sample_at_x.stats.cols()) {
    throw std::invalid_argument("kl_from_sample: dimension mismatch");
  }
  const Vec& theta_x = sample_at_x.theta0;
  const Vec mean = sample_at_x.stats.colwise().mean();
  return (theta_x - theta_y).dot(mean) +
         log_ratio_naive(theta_y, theta_x, sample_at_x);
}

std::vector<MseCell> mse_table(const std::vector<EvalRecord>& records,
                               const Vec& theta_reference) {
  if (records.empty()) {
    throw std::invalid_argument("mse_table: no records");
  }
  const int q = static_cast<int>(theta_reference.size());
  std::map<std::tuple<double, int, int>, std::pair<double, int>> acc;
  for (const EvalRecord& r : records) {
    if (!r.converged) continue;
    if (r.theta_hat.size() != q) {
      throw std::invalid_argument("mse_table: record dimension mismatch");
    }
    for (int p = 0; p < q; ++p) {
      const double err = r.theta_hat[p] - theta_reference[p];
      auto& cell = acc[{r.pi, static_cast<int>(r.method), p}];
      cell.first += err * err;
      cell.second += 1;
    }
  }
  std::vector<MseCell> out;
  out.reserve(acc.size());
  for (const auto& [key, sum_count] : acc) {
    MseCell cell;
    cell.pi = std::get<0>(key);
    cell.method = static_cast<FitMethod>(std::get<1>(key));
    cell.parameter = std::get<2>(key);
    cell.mse = sum_count.first / sum_count.second;
    cell.replicates = sum_count.second;
    out.push_back(cell);
  }
  return out;
}

std::vector<EfficiencyCell> relative_efficiency(
    const std::vector<MseCell>& mse_missing,
    const std::vector<MseCell>& mse_naive) {
  std::map<std::pair<double, int>, double> naive;
  for (const MseCell& c : mse_naive) {
    naive[{c.pi, c.parameter}] = c.mse;
  }
  std::vector<EfficiencyCell> out;
  out.reserve(mse_missing.size());
  for (const MseCell& c : mse_missing) {
    auto it = naive.find({c.pi, c.parameter});
    if (it == naive.end()) {
      throw std::invalid_argument(
          "relative_efficiency: tables are not aligned");
    }
    EfficiencyCell cell;
    cell.pi = c.pi;
    cell.parameter = c.parameter;
    cell.defined = it->second > 0.0;
    cell.value = cell.defined ? 100.0 * c.mse / it->second : 0.0;
    out.push_back(cell);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.pi, a.parameter) < std::tie(b.pi, b.parameter);
  });
  return out;
}

}  // namespace privergm
