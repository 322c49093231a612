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

#include "privergm/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace privergm {

namespace {

// TNT proposal probability of naming one specific dyad, given the current
// edge count. With no edges the edge branch cannot fire and the proposal
// falls back to a uniform dyad pick.
double tnt_prob(std::int64_t num_edges, std::int64_t num_dyads, bool is_edge,
                double edge_prob) {
  if (num_edges == 0) return 1.0 / static_cast<double>(num_dyads);
  const double dyad_part = (1.0 - edge_prob) / static_cast<double>(num_dyads);
  if (!is_edge) return dyad_part;
  return edge_prob / static_cast<double>(num_edges) + dyad_part;
}

// log q(d | g') - log q(d | g) for the move that toggles dyad d.
double log_hastings(const Graph& g, bool present, const MhProposal& prop) {
  if (prop.kind == ProposalKind::kDyadToggle) return 0.0;
  const std::int64_t m = g.edge_count();
  const std::int64_t num_dyads = g.num_dyads();
  const double fwd = tnt_prob(m, num_dyads, present, prop.edge_prob);
  const double rev =
      tnt_prob(present ? m - 1 : m + 1, num_dyads, !present, prop.edge_prob);
  return std::log(rev) - std::log(fwd);
}

// Single-chain state with incrementally maintained statistics. Confined to
// one thread by construction; concurrent chains get their own instance.
struct Chain {
  Chain(const ModelCalculator& calc_in, Graph start, const Vec& theta_in,
        const MhProposal& prop_in, std::uint64_t seed,
        const std::vector<double>* offset_in)
      : calc(calc_in),
        g(std::move(start)),
        theta(theta_in),
        prop(prop_in),
        offset(offset_in != nullptr && !offset_in->empty() ? offset_in
                                                           : nullptr),
        rng(seed),
        current(calc_in.stats(g)),
        delta(calc_in.dim()) {}

  void step() {
    int i;
    int j;
    bool present;
    if (prop.kind == ProposalKind::kTNT && g.edge_count() > 0 &&
        rng.uniform() < prop.edge_prob) {
      const DyadIndex d = g.edge_dyads()[rng.uniform_int(g.edge_count())];
      const Dyad pair = dyad_from_index(g.node_count(), d);
      i = pair.i;
      j = pair.j;
      present = true;
    } else {
      // Uniform unordered pair, drawn directly to skip index decoding.
      i = static_cast<int>(rng.uniform_int(g.node_count()));
      j = static_cast<int>(rng.uniform_int(g.node_count() - 1));
      if (j >= i) ++j;
      present = g.has_edge(i, j);
    }
    calc.add_change(g, i, j, delta.data());
    const double sign = present ? -1.0 : 1.0;
    double logr = sign * theta.dot(delta) + log_hastings(g, present, prop);
    if (offset != nullptr) {
      logr += sign * (*offset)[dyad_to_index(g.node_count(), i, j)];
    }
    if (logr >= 0.0 || rng.uniform() < std::exp(logr)) {
      if (present) {
        g.remove_edge(i, j);
        current -= delta;
      } else {
        g.add_edge(i, j);
        current += delta;
      }
    }
  }

  const ModelCalculator& calc;
  Graph g;
  Vec theta;
  MhProposal prop;
  const std::vector<double>* offset;
  Rng rng;
  Vec current;
  Vec delta;
};

}  // namespace

std::vector<std::uint64_t> dyad_bits(const Graph& g) {
  const std::int64_t num_dyads = g.num_dyads();
  std::vector<std::uint64_t> bits((num_dyads + 63) / 64, 0);
  for (DyadIndex d : g.edge_dyads()) {
    bits[d / 64] |= 1ULL << (d % 64);
  }
  return bits;
}

std::span<const std::uint64_t> SampleSet::graph_bits(int draw) const {
  if (!has_graphs()) {
    throw std::logic_error("SampleSet: graphs were not retained");
  }
  return {graph_bits_.data() + static_cast<std::size_t>(draw) * words_per_graph_,
          words_per_graph_};
}

void SampleSet::reserve_graphs(int draws, std::int64_t num_dyads) {
  words_per_graph_ = static_cast<std::size_t>((num_dyads + 63) / 64);
  graph_bits_.clear();
  graph_bits_.reserve(static_cast<std::size_t>(draws) * words_per_graph_);
}

void SampleSet::append_graph_bits(const Graph& g) {
  const std::vector<std::uint64_t> bits = dyad_bits(g);
  graph_bits_.insert(graph_bits_.end(), bits.begin(), bits.end());
}

void SampleSet::append_raw_bits(std::span<const std::uint64_t> bits) {
  graph_bits_.insert(graph_bits_.end(), bits.begin(), bits.end());
}

double proposal_prob(const Graph& g, DyadIndex d, const MhProposal& prop) {
  if (static_cast<std::int64_t>(d) >= g.num_dyads()) {
    throw std::out_of_range("proposal_prob: dyad index out of range");
  }
  if (prop.kind == ProposalKind::kDyadToggle) {
    return 1.0 / static_cast<double>(g.num_dyads());
  }
  return tnt_prob(g.edge_count(), g.num_dyads(), g.dyad_state(d),
                  prop.edge_prob);
}

double acceptance_prob(const Graph& g, DyadIndex d, const Vec& theta,
                       const ModelCalculator& calc, const MhProposal& prop,
                       const std::vector<double>* dyad_offset) {
  const Dyad p = dyad_from_index(g.node_count(), d);
  Vec delta(calc.dim());
  calc.add_change(g, p.i, p.j, delta.data());
  const bool present = g.dyad_state(d);
  const double sign = present ? -1.0 : 1.0;
  double logr = sign * theta.dot(delta) + log_hastings(g, present, prop);
  if (dyad_offset != nullptr && !dyad_offset->empty()) {
    logr += sign * (*dyad_offset)[d];
  }
  return std::min(1.0, std::exp(logr));
}

Graph mh_step(const Graph& g, const Vec& theta, const ModelSpec& spec,
              Rng& rng, const MhProposal& prop) {
  const ModelCalculator calc(spec, g);
  DyadIndex d;
  if (prop.kind == ProposalKind::kTNT && g.edge_count() > 0 &&
      rng.uniform() < prop.edge_prob) {
    d = g.edge_dyads()[rng.uniform_int(g.edge_count())];
  } else {
    d = static_cast<DyadIndex>(rng.uniform_int(g.num_dyads()));
  }
  if (rng.uniform() < acceptance_prob(g, d, theta, calc, prop)) {
    return g.toggled(d);
  }
  return g;
}

SampleSet sample(const Vec& theta0, const ModelSpec& spec, const Graph& start,
                 const SamplerConfig& cfg) {
  spec.validate_for(start);
  if (theta0.size() != spec.dim()) {
    throw std::invalid_argument("sample: theta0 dimension mismatch");
  }
  if (cfg.draws < 1) {
    throw std::invalid_argument("sample: draws must be >= 1");
  }
  if (cfg.proposal.kind == ProposalKind::kTNT &&
      (cfg.proposal.edge_prob <= 0.0 || cfg.proposal.edge_prob >= 1.0)) {
    throw std::invalid_argument("sample: TNT edge probability must be in (0,1)");
  }
  if (!cfg.dyad_offset.empty() &&
      cfg.dyad_offset.size() != static_cast<std::size_t>(start.num_dyads())) {
    throw std::invalid_argument("sample: dyad_offset size mismatch");
  }

  const std::int64_t num_dyads = start.num_dyads();
  SamplerConfig resolved = cfg;
  if (resolved.burn_in < 0) resolved.burn_in = 10 * num_dyads;
  if (resolved.interval < 1) resolved.interval = std::max<std::int64_t>(1, num_dyads);

  const ModelCalculator calc(spec, start);
  const int q = calc.dim();

  SampleSet out;
  out.stats.resize(resolved.draws, q);
  out.term_names = spec.term_names();
  out.theta0 = theta0;
  out.config = resolved;
  out.node_count = start.node_count();
  if (resolved.retain_graphs) {
    out.reserve_graphs(resolved.draws, num_dyads);
  }

  Chain chain(calc, start, theta0, resolved.proposal, resolved.seed,
              &resolved.dyad_offset);
  for (std::int64_t s = 0; s < resolved.burn_in; ++s) chain.step();
  for (int d = 0; d < resolved.draws; ++d) {
    for (std::int64_t s = 0; s < resolved.interval; ++s) chain.step();
    if (resolved.debug_recompute) {
      const Vec fresh = calc.stats(chain.g);
      if ((fresh - chain.current).cwiseAbs().maxCoeff() > 1e-8) {
        throw std::logic_error("sample: incremental statistics drifted");
      }
      chain.current = fresh;
    }
    out.stats.row(d) = chain.current;
    if (resolved.retain_graphs) out.append_graph_bits(chain.g);
  }
  return out;
}

Graph chain_endpoint(const Vec& theta, const ModelSpec& spec,
                     const Graph& start, std::int64_t steps,
                     std::uint64_t seed, const MhProposal& prop) {
  spec.validate_for(start);
  if (theta.size() != spec.dim()) {
    throw std::invalid_argument("chain_endpoint: theta dimension mismatch");
  }
  const ModelCalculator calc(spec, start);
  Chain chain(calc, start, theta, prop, seed, nullptr);
  for (std::int64_t s = 0; s < steps; ++s) chain.step();
  return chain.g;
}

SampleSet merge_samples(std::vector<SampleSet> chains) {
  if (chains.empty()) {
    throw std::invalid_argument("merge_samples: no chains");
  }
  std::sort(chains.begin(), chains.end(),
            [](const SampleSet& a, const SampleSet& b) {
              return a.config.seed < b.config.seed;
            });
  for (std::size_t c = 1; c < chains.size(); ++c) {
    if (chains[c].config.seed == chains[c - 1].config.seed) {
      throw std::invalid_argument("merge_samples: chains must have distinct seeds");
    }
    const bool same_theta =
        chains[c].theta0.size() == chains[0].theta0.size() &&
        (chains[c].theta0.array() == chains[0].theta0.array()).all();
    if (!same_theta || chains[c].node_count != chains[0].node_count ||
        chains[c].has_graphs() != chains[0].has_graphs()) {
      throw std::invalid_argument("merge_samples: incompatible chains");
    }
  }
  SampleSet merged = chains[0];
  for (std::size_t c = 1; c < chains.size(); ++c) {
    const SampleSet& s = chains[c];
    const Eigen::Index offset = merged.stats.rows();
    merged.stats.conservativeResize(offset + s.stats.rows(), Eigen::NoChange);
    merged.stats.bottomRows(s.stats.rows()) = s.stats;
    if (merged.has_graphs()) {
      for (int d = 0; d < s.num_draws(); ++d) {
        merged.append_raw_bits(s.graph_bits(d));
      }
    }
  }
  merged.config.draws = static_cast<int>(merged.stats.rows());
  return merged;
}

}  // namespace privergm
