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

#include "privergm/enumeration.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace privergm {

namespace {

double log_sum_exp(const Eigen::VectorXd& v) {
  const double m = v.maxCoeff();
  if (!std::isfinite(m)) return m;  // all -inf (or an inf slipped in)
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::exp(v[i] - m);
  return m + std::log(s);
}

}  // namespace

GraphEnumeration::GraphEnumeration(const ModelSpec& spec, const Graph& shape)
    : n_(shape.node_count()), spec_(spec), shape_(shape) {
  if (n_ > kMaxNodes) {
    throw std::invalid_argument(
        "GraphEnumeration: node count too large for full enumeration (max " +
        std::to_string(kMaxNodes) + ")");
  }
  spec_.validate_for(shape);
  const int num_dyads = static_cast<int>(dyad_count(n_));
  const std::uint32_t total = 1u << num_dyads;
  masks_.resize(total);
  stats_.resize(total, spec_.dim());
  ModelCalculator calc(spec_, shape_);
  Vec s(spec_.dim());
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    masks_[mask] = mask;
    Graph g = graph(static_cast<int>(mask));
    calc.stats(g, s.data());
    stats_.row(mask) = s;
  }
}

Graph GraphEnumeration::graph(int g) const {
  Graph out(n_);
  for (const auto& [name, values] : shape_.covariates()) {
    out.set_covariate(name, values);
  }
  std::uint32_t mask = masks_[g];
  for (int d = 0; mask != 0; ++d, mask >>= 1) {
    if (mask & 1u) out.toggle_in_place(static_cast<DyadIndex>(d));
  }
  return out;
}

int GraphEnumeration::index_of(const Graph& g) const {
  if (g.node_count() != n_) {
    throw std::invalid_argument("GraphEnumeration::index_of: size mismatch");
  }
  std::uint32_t mask = 0;
  for (DyadIndex d : g.edge_dyads()) mask |= 1u << d;
  return static_cast<int>(mask);
}

double GraphEnumeration::log_normalizer(const Vec& theta) const {
  if (theta.size() != spec_.dim()) {
    throw std::invalid_argument("log_normalizer: dimension mismatch");
  }
  return log_sum_exp(stats_ * theta);
}

Eigen::VectorXd GraphEnumeration::probabilities(const Vec& theta) const {
  Eigen::VectorXd lp = stats_ * theta;
  lp.array() -= log_sum_exp(lp);
  return lp.array().exp();
}

Vec GraphEnumeration::mean_stats(const Vec& theta) const {
  return stats_.transpose() * probabilities(theta);
}

Eigen::MatrixXd GraphEnumeration::cov_stats(const Vec& theta) const {
  const Eigen::VectorXd p = probabilities(theta);
  const Vec mu = stats_.transpose() * p;
  Eigen::MatrixXd centered = stats_.rowwise() - mu.transpose();
  return centered.transpose() * p.asDiagonal() * centered;
}

Eigen::VectorXd GraphEnumeration::log_weights(
    const Graph& y, const PrivacyParams& params) const {
  if (y.node_count() != n_) {
    throw std::invalid_argument("GraphEnumeration: released graph size mismatch");
  }
  std::uint32_t ymask = 0;
  for (DyadIndex d : y.edge_dyads()) ymask |= 1u << d;
  const std::int64_t total_dyads = dyad_count(n_);
  Eigen::VectorXd lw(num_graphs());
  for (int g = 0; g < num_graphs(); ++g) {
    const std::uint32_t xmask = masks_[g];
    DyadCells cells;
    cells.n11 = std::popcount(xmask & ymask);
    cells.n10 = std::popcount(xmask & ~ymask);
    cells.n01 = std::popcount(~xmask & ymask);
    cells.n00 = total_dyads - cells.n11 - cells.n10 - cells.n01;
    lw[g] = log_conditional_cells(cells, params);
  }
  return lw;
}

double GraphEnumeration::log_normalizer_weighted(
    const Vec& theta, const Eigen::VectorXd& log_w) const {
  return log_sum_exp(stats_ * theta + log_w);
}

Vec GraphEnumeration::mean_stats_weighted(const Vec& theta,
                                          const Eigen::VectorXd& log_w) const {
  Eigen::VectorXd lm = stats_ * theta + log_w;
  lm.array() -= log_sum_exp(lm);
  const Eigen::VectorXd p = lm.array().exp();
  return stats_.transpose() * p;
}

Eigen::MatrixXd GraphEnumeration::cov_stats_weighted(
    const Vec& theta, const Eigen::VectorXd& log_w) const {
  Eigen::VectorXd lm = stats_ * theta + log_w;
  lm.array() -= log_sum_exp(lm);
  const Eigen::VectorXd p = lm.array().exp();
  const Vec mu = stats_.transpose() * p;
  Eigen::MatrixXd centered = stats_.rowwise() - mu.transpose();
  return centered.transpose() * p.asDiagonal() * centered;
}

double GraphEnumeration::log_normalizer_given(
    const Vec& theta, const Graph& y, const PrivacyParams& params) const {
  return log_normalizer_weighted(theta, log_weights(y, params));
}

Vec GraphEnumeration::mean_stats_given(const Vec& theta, const Graph& y,
                                       const PrivacyParams& params) const {
  return mean_stats_weighted(theta, log_weights(y, params));
}

Eigen::MatrixXd GraphEnumeration::cov_stats_given(
    const Vec& theta, const Graph& y, const PrivacyParams& params) const {
  return cov_stats_weighted(theta, log_weights(y, params));
}

double GraphEnumeration::log_marginal(const Vec& theta, const Graph& y,
                                      const PrivacyParams& params) const {
  return log_normalizer_given(theta, y, params) - log_normalizer(theta);
}

double log_normalizer_exact(const Vec& theta, const ModelSpec& spec,
                            const Graph& shape) {
  return GraphEnumeration(spec, shape).log_normalizer(theta);
}

double log_normalizer_exact(const Vec& theta, const ModelSpec& spec, int n) {
  return log_normalizer_exact(theta, spec, Graph(n));
}

}  // namespace privergm
