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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "privergm/enumeration.hpp"
#include "privergm/sampler.hpp"
#include "test_util.hpp"

using namespace privergm;

TEST_SUITE_BEGIN("sampler");

TEST_CASE("null model accepts every dyad-toggle proposal") {
  const Graph g = testutil::random_graph(6, 0.4, 9);
  const ModelSpec spec = ModelSpec::edges_only();
  const ModelCalculator calc(spec, g);
  Vec zero(1);
  zero << 0.0;
  const MhProposal prop{ProposalKind::kDyadToggle, 0.5};
  for (DyadIndex d = 0; d < g.num_dyads(); ++d) {
    CHECK(acceptance_prob(g, d, zero, calc, prop) == doctest::Approx(1.0));
  }
}

TEST_CASE("strongly negative edge parameter rejects additions") {
  const Graph empty(5);
  const ModelSpec spec = ModelSpec::edges_only();
  const ModelCalculator calc(spec, empty);
  Vec theta(1);
  theta << -50.0;
  const MhProposal prop{ProposalKind::kDyadToggle, 0.5};
  for (DyadIndex d = 0; d < empty.num_dyads(); ++d) {
    CHECK(acceptance_prob(empty, d, theta, calc, prop) < 1e-20);
  }
}

TEST_CASE("kernel satisfies detailed balance on the 8-state space") {
  const ModelSpec spec = ModelSpec::edges_only();
  const Graph shape(3);
  const GraphEnumeration enumeration(spec, shape);
  Vec theta(1);
  theta << 0.7;
  const Eigen::VectorXd pi = enumeration.probabilities(theta);
  const ModelCalculator calc(spec, shape);

  for (const MhProposal& prop :
       {MhProposal{ProposalKind::kDyadToggle, 0.5},
        MhProposal{ProposalKind::kTNT, 0.5},
        MhProposal{ProposalKind::kTNT, 0.25}}) {
    // Full 8x8 transition matrix of the kernel.
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(8, 8);
    for (int s = 0; s < 8; ++s) {
      const Graph g = enumeration.graph(s);
      double stay = 1.0;
      for (DyadIndex d = 0; d < 3; ++d) {
        const int target = enumeration.index_of(g.toggled(d));
        const double move =
            proposal_prob(g, d, prop) * acceptance_prob(g, d, theta, calc, prop);
        P(s, target) = move;
        stay -= move;
      }
      P(s, s) = stay;
      CHECK(P.row(s).sum() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(stay >= -1e-12);
    }
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        CHECK(pi[a] * P(a, b) == doctest::Approx(pi[b] * P(b, a)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("null edges-only chain matches Binomial(6, 1/2) on n=4") {
  const ModelSpec spec = ModelSpec::edges_only();
  Vec theta(1);
  theta << 0.0;
  SamplerConfig cfg;
  cfg.draws = 20000;
  cfg.interval = 20;
  cfg.seed = 31;
  const SampleSet s = sample(theta, spec, Graph(4), cfg);

  std::vector<long long> counts(7, 0);
  for (int d = 0; d < s.num_draws(); ++d) {
    ++counts[static_cast<int>(s.stats(d, 0))];
  }
  std::vector<double> probs(7);
  const double binom[7] = {1, 6, 15, 20, 15, 6, 1};
  for (int k = 0; k <= 6; ++k) probs[k] = binom[k] / 64.0;
  const double stat = testutil::chisq_stat(counts, probs);
  CHECK(testutil::chisq_pvalue(stat, 6) > 0.001);
}

TEST_CASE("edges-only chain hits the independent-dyad mean") {
  const ModelSpec spec = ModelSpec::edges_only();
  Vec theta(1);
  theta << testutil::logit(0.2);
  SamplerConfig cfg;
  cfg.draws = 20000;
  cfg.interval = 15;
  cfg.seed = 77;
  const SampleSet s = sample(theta, spec, Graph(5), cfg);
  const double mean = s.stats.col(0).mean();
  const double sd = std::sqrt(
      (s.stats.col(0).array() - mean).square().sum() / (s.num_draws() - 1));
  const double se = sd / std::sqrt(static_cast<double>(s.num_draws()));
  CHECK(std::abs(mean - 10.0 * 0.2) <= 3.0 * se);
}

TEST_CASE("chain frequencies match exact probabilities for edges+gwesp") {
  const ModelSpec spec = ModelSpec::parse("edges + gwesp(0.5)");
  const Graph shape(3);
  const GraphEnumeration enumeration(spec, shape);
  Vec theta(2);
  theta << 0.3, 0.2;
  SamplerConfig cfg;
  cfg.draws = 20000;
  cfg.interval = 15;
  cfg.seed = 5;
  cfg.retain_graphs = true;
  const SampleSet s = sample(theta, spec, shape, cfg);

  std::vector<long long> counts(8, 0);
  for (int d = 0; d < s.num_draws(); ++d) {
    ++counts[static_cast<int>(s.graph_bits(d)[0])];
  }
  const Eigen::VectorXd probs = enumeration.probabilities(theta);
  std::vector<double> expected(probs.data(), probs.data() + 8);
  const double stat = testutil::chisq_stat(counts, expected);
  CHECK(testutil::chisq_pvalue(stat, 7) > 0.001);
}

TEST_CASE("sampling is deterministic in the seed") {
  const ModelSpec spec = ModelSpec::parse("edges + gwdegree(0.5)");
  Vec theta(2);
  theta << -0.5, 0.2;
  SamplerConfig cfg;
  cfg.draws = 200;
  cfg.seed = 99;
  cfg.retain_graphs = true;
  const Graph start = testutil::random_graph(8, 0.3, 2);
  const SampleSet a = sample(theta, spec, start, cfg);
  const SampleSet b = sample(theta, spec, start, cfg);
  CHECK((a.stats.array() == b.stats.array()).all());
  for (int d = 0; d < a.num_draws(); ++d) {
    const auto ba = a.graph_bits(d);
    const auto bb = b.graph_bits(d);
    for (std::size_t w = 0; w < ba.size(); ++w) CHECK(ba[w] == bb[w]);
  }
}

TEST_CASE("incrementally maintained statistics match recomputation") {
  const ModelSpec spec = ModelSpec::parse(
      "edges + gwesp(0.5) + gwdegree(0.5) + nodematch(drug)");
  Graph start = testutil::random_graph(10, 0.3, 12);
  start.set_covariate("drug",
                      testutil::random_binary_covariate(10, 0.4, 13));
  Vec theta(4);
  theta << -1.0, 0.3, 0.2, 0.4;
  SamplerConfig cfg;
  cfg.draws = 300;
  cfg.seed = 8;
  cfg.debug_recompute = true;  // throws if the running statistics drift
  CHECK_NOTHROW(sample(theta, spec, start, cfg));
}

TEST_CASE("TNT works from an edgeless start") {
  const ModelSpec spec = ModelSpec::edges_only();
  Vec theta(1);
  theta << 0.0;
  SamplerConfig cfg;
  cfg.draws = 50;
  cfg.seed = 3;
  const SampleSet s = sample(theta, spec, Graph(4), cfg);
  CHECK(s.num_draws() == 50);
}

TEST_CASE("mh_step changes at most one dyad and is seed-deterministic") {
  const ModelSpec spec = ModelSpec::parse("edges + gwesp(0.5)");
  const Graph g = testutil::random_graph(6, 0.4, 44);
  Vec theta(2);
  theta << -0.2, 0.1;
  Rng r1(5);
  Rng r2(5);
  const Graph a = mh_step(g, theta, spec, r1);
  const Graph b = mh_step(g, theta, spec, r2);
  CHECK(hamming(g, a) <= 1);
  CHECK(a.same_edges(b));
}

TEST_CASE("merge_samples concatenates chains in seed order") {
  const ModelSpec spec = ModelSpec::edges_only();
  Vec theta(1);
  theta << 0.0;
  SamplerConfig cfg;
  cfg.draws = 40;
  cfg.seed = 2;
  const SampleSet chain2 = sample(theta, spec, Graph(4), cfg);
  cfg.seed = 1;
  const SampleSet chain1 = sample(theta, spec, Graph(4), cfg);

  const SampleSet merged = merge_samples({chain2, chain1});
  CHECK(merged.num_draws() == 80);
  CHECK((merged.stats.topRows(40).array() == chain1.stats.array()).all());
  CHECK((merged.stats.bottomRows(40).array() == chain2.stats.array()).all());

  CHECK_THROWS_AS(merge_samples({chain1, chain1}), std::invalid_argument);
}

TEST_SUITE_END();
