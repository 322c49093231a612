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

#ifndef PRIVERGM_ENUMERATION_HPP_
#define PRIVERGM_ENUMERATION_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "privergm/graph.hpp"
#include "privergm/model.hpp"
#include "privergm/privacy.hpp"

namespace privergm {

/// Exhaustive enumeration of all 2^(n(n-1)/2) graphs on a fixed node set.
/// The ground-truth oracle behind every stochastic code path; n <= 5 keeps
/// the state space at or below 1024 graphs.
class GraphEnumeration {
 public:
  static constexpr int kMaxNodes = 5;

  /// `shape` supplies the node count and the covariates nodematch terms need.
  GraphEnumeration(const ModelSpec& spec, const Graph& shape);

  int num_graphs() const { return static_cast<int>(masks_.size()); }
  int dim() const { return static_cast<int>(stats_.cols()); }
  int node_count() const { return n_; }

  /// Edge bitmask over dyad indices of graph g.
  std::uint32_t mask(int g) const { return masks_[g]; }
  /// Statistic vector of graph g.
  Eigen::VectorXd graph_stats(int g) const { return stats_.row(g); }

  Graph graph(int g) const;
  int index_of(const Graph& g) const;

  /// log c(theta) = log sum_x exp(theta . g(x)), by log-sum-exp.
  double log_normalizer(const Vec& theta) const;

  /// Exact probabilities P(x; theta) over all graphs.
  Eigen::VectorXd probabilities(const Vec& theta) const;

  Vec mean_stats(const Vec& theta) const;
  Eigen::MatrixXd cov_stats(const Vec& theta) const;

  /// log c(theta | y) = log sum_x P(y|x) exp(theta . g(x)).
  double log_normalizer_given(const Vec& theta, const Graph& y,
                              const PrivacyParams& params) const;

  /// Mean and covariance of g(X) under P(x | y; theta), the conditional law
  /// of the protected graph given the released one.
  Vec mean_stats_given(const Vec& theta, const Graph& y,
                       const PrivacyParams& params) const;
  Eigen::MatrixXd cov_stats_given(const Vec& theta, const Graph& y,
                                  const PrivacyParams& params) const;

  /// log P(Y = y; theta) = log c(theta|y) - log c(theta), the exact
  /// marginal likelihood of a released graph.
  double log_marginal(const Vec& theta, const Graph& y,
                      const PrivacyParams& params) const;

  /// Per-graph log privacy weights log P(y | x_g). Computing these once and
  /// reusing them across theta evaluations keeps oracle fits cheap.
  Eigen::VectorXd log_weights(const Graph& y, const PrivacyParams& params) const;

  // Variants over the weighted measure w(x) exp(theta . g(x)), given
  // precomputed per-graph log weights.
  double log_normalizer_weighted(const Vec& theta,
                                 const Eigen::VectorXd& log_w) const;
  Vec mean_stats_weighted(const Vec& theta,
                          const Eigen::VectorXd& log_w) const;
  Eigen::MatrixXd cov_stats_weighted(const Vec& theta,
                                     const Eigen::VectorXd& log_w) const;

 private:

  int n_;
  ModelSpec spec_;
  Graph shape_;
  std::vector<std::uint32_t> masks_;
  Eigen::MatrixXd stats_;  // num_graphs x q
};

/// log c(theta) by full enumeration; requires shape.node_count() <= 5.
double log_normalizer_exact(const Vec& theta, const ModelSpec& spec,
                            const Graph& shape);

/// Convenience overload for specs without covariate terms.
double log_normalizer_exact(const Vec& theta, const ModelSpec& spec, int n);

}  // namespace privergm

#endif  // PRIVERGM_ENUMERATION_HPP_
