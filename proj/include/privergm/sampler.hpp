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

#ifndef PRIVERGM_SAMPLER_HPP_
#define PRIVERGM_SAMPLER_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "privergm/graph.hpp"
#include "privergm/model.hpp"
#include "privergm/rng.hpp"

namespace privergm {

enum class ProposalKind {
  kDyadToggle,  // toggle a uniformly chosen dyad; symmetric proposal
  kTNT          // tie/no-tie: mixes uniform-edge and uniform-dyad picks
};

struct MhProposal {
  ProposalKind kind = ProposalKind::kTNT;
  double edge_prob = 0.5;  // TNT probability of picking among current edges
};

/// Metropolis-Hastings chain settings. Negative burn_in / interval select
/// the defaults 10*N and N, with N the dyad count; interval of about one
/// expected full sweep decorrelates retained draws.
///
/// A non-empty dyad_offset (one value per dyad index) tilts the target law
/// to P(x) proportional to exp{theta . g(x) + sum_d x_d offset_d}. The
/// missing-data fit uses this to sample the protected graph given a release.
struct SamplerConfig {
  std::int64_t burn_in = -1;
  std::int64_t interval = -1;
  int draws = 1000;  // M, the number of retained draws
  MhProposal proposal;
  std::uint64_t seed = 0;
  bool retain_graphs = false;   // keep dyad bitsets of retained graphs
  bool debug_recompute = false; // recompute stats at retention points
  std::vector<double> dyad_offset;  // empty: plain ERGM target
};

/// Retained draws: one statistic row per draw, plus (optionally) the graphs
/// themselves as dyad-indexed bitsets, and the settings that generated them.
class SampleSet {
 public:
  Eigen::MatrixXd stats;  // draws x q, term-aligned
  std::vector<std::string> term_names;
  Vec theta0;
  SamplerConfig config;  // resolved settings (defaults filled in)
  int node_count = 0;

  bool has_graphs() const { return !graph_bits_.empty(); }
  int num_draws() const { return static_cast<int>(stats.rows()); }

  std::span<const std::uint64_t> graph_bits(int draw) const;
  std::size_t words_per_graph() const { return words_per_graph_; }

  void reserve_graphs(int draws, std::int64_t num_dyads);
  void append_graph_bits(const Graph& g);
  void append_raw_bits(std::span<const std::uint64_t> bits);

 private:
  std::size_t words_per_graph_ = 0;
  std::vector<std::uint64_t> graph_bits_;
};

/// Dyad-indexed bitset of a graph's edges, in the SampleSet layout.
std::vector<std::uint64_t> dyad_bits(const Graph& g);

/// Probability that the proposal mechanism proposes toggling dyad d from g.
double proposal_prob(const Graph& g, DyadIndex d, const MhProposal& prop);

/// Acceptance probability of the move toggling dyad d from g, including the
/// Hastings correction for asymmetric (TNT) proposals and, when given, the
/// per-dyad tilt offsets.
double acceptance_prob(const Graph& g, DyadIndex d, const Vec& theta,
                       const ModelCalculator& calc, const MhProposal& prop,
                       const std::vector<double>* dyad_offset = nullptr);

/// One Metropolis-Hastings step from g targeting the ERGM at theta.
Graph mh_step(const Graph& g, const Vec& theta, const ModelSpec& spec,
              Rng& rng, const MhProposal& prop = MhProposal{});

/// Runs the chain from `start`: burn_in steps, then `draws` retained draws
/// spaced `interval` steps apart. Deterministic given cfg.seed. Statistics
/// are maintained incrementally; with cfg.debug_recompute they are checked
/// against a from-scratch evaluation at every retention point.
SampleSet sample(const Vec& theta0, const ModelSpec& spec, const Graph& start,
                 const SamplerConfig& cfg);

/// Merges per-chain sample sets (same theta0/spec/size) deterministically in
/// seed order. Chains must have been run with distinct seeds.
SampleSet merge_samples(std::vector<SampleSet> chains);

/// Runs the chain for `steps` steps and returns the final graph; used to
/// draw a single (approximate) ERGM realization.
Graph chain_endpoint(const Vec& theta, const ModelSpec& spec,
                     const Graph& start, std::int64_t steps,
                     std::uint64_t seed, const MhProposal& prop = MhProposal{});

}  // namespace privergm

#endif  // PRIVERGM_SAMPLER_HPP_
