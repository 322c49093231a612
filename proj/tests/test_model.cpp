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
#include <numeric>
#include <stdexcept>
#include <vector>

#include "privergm/enumeration.hpp"
#include "privergm/model.hpp"
#include "test_util.hpp"

using namespace privergm;

namespace {

Graph school_graph(int n, std::uint64_t seed) {
  Graph g = testutil::random_graph(n, 0.35, seed);
  g.set_covariate("drug", testutil::random_binary_covariate(n, 0.4, seed + 1));
  g.set_covariate("sport",
                  testutil::random_binary_covariate(n, 0.5, seed + 2));
  return g;
}

ModelSpec full_spec() {
  return ModelSpec::parse(
      "edges + gwesp(0.5) + gwdegree(0.5) + nodematch(drug) + "
      "nodematch(sport)");
}

// Direct O(n^3) shared-partner count for one edge, used as an oracle.
int shared_partners(const Graph& g, int i, int j) {
  int c = 0;
  for (int k = 0; k < g.node_count(); ++k) {
    if (k != i && k != j && g.has_edge(i, k) && g.has_edge(j, k)) ++c;
  }
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("model");

TEST_CASE("model string parsing") {
  const ModelSpec spec = ModelSpec::parse(
      "edges + gwesp(0.5) + gwdegree(0.25) + nodematch(drug)");
  REQUIRE(spec.dim() == 4);
  CHECK(spec.terms[0].kind == Term::Kind::Edges);
  CHECK(spec.terms[1].kind == Term::Kind::Gwesp);
  CHECK(spec.terms[1].decay == doctest::Approx(0.5));
  CHECK(spec.terms[2].kind == Term::Kind::Gwdegree);
  CHECK(spec.terms[2].decay == doctest::Approx(0.25));
  CHECK(spec.terms[3].attribute == "drug");
  CHECK(spec.to_string() ==
        "edges + gwesp(0.5) + gwdegree(0.25) + nodematch(drug)");

  // Missing decay falls back to the default 0.5.
  CHECK(ModelSpec::parse("gwesp").terms[0].decay == doctest::Approx(0.5));

  CHECK_THROWS_AS(ModelSpec::parse("triangles"), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec::parse("nodematch"), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec::parse("gwesp(-1)"), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec::parse("gwesp(0.5"), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec::parse("edges + "), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec::parse("edges(3)"), std::invalid_argument);
}

TEST_CASE("validate_for flags unknown attributes") {
  const Graph g = school_graph(6, 3);
  CHECK_NOTHROW(full_spec().validate_for(g));
  CHECK_THROWS_AS(ModelSpec::parse("nodematch(smoke)").validate_for(g),
                  std::invalid_argument);
}

TEST_CASE("stats on anchor graphs") {
  Graph empty(6);
  empty.set_covariate("drug", {"yes", "no", "yes", "no", "yes", "no"});
  empty.set_covariate("sport", {"yes", "no", "yes", "no", "yes", "no"});
  CHECK(stats(empty, full_spec()).cwiseAbs().maxCoeff() == 0.0);

  // Triangle: every edge's endpoints share exactly one partner, and the
  // geometric weight at count one is always 1, so gwesp is 3 at any decay.
  const Graph k3 = complete_graph(3);
  for (double tau : {0.0, 0.5, 1.0}) {
    ModelSpec spec;
    spec.terms.push_back(Term{Term::Kind::Gwesp, tau, ""});
    CHECK(stats(k3, spec)[0] == doctest::Approx(3.0).epsilon(1e-12));
  }

  // Decay zero turns gwdegree into the number of non-isolated nodes.
  ModelSpec gwd0;
  gwd0.terms.push_back(Term{Term::Kind::Gwdegree, 0.0, ""});
  CHECK(stats(k3, gwd0)[0] == doctest::Approx(3.0).epsilon(1e-12));

  // 4-cycle with attributes (A, A, B, B): edges (0,1) and (2,3) match.
  Graph cycle(4);
  cycle.add_edge(0, 1);
  cycle.add_edge(1, 2);
  cycle.add_edge(2, 3);
  cycle.add_edge(3, 0);
  cycle.set_covariate("group", {"A", "A", "B", "B"});
  CHECK(stats(cycle, ModelSpec::parse("nodematch(group)"))[0] ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("decay-zero reductions against direct counts") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = testutil::random_graph(9, 0.35, seed);

    int edges_with_partner = 0;
    for (DyadIndex d : g.edge_dyads()) {
      const Dyad p = dyad_from_index(9, d);
      if (shared_partners(g, p.i, p.j) >= 1) ++edges_with_partner;
    }
    ModelSpec esp0;
    esp0.terms.push_back(Term{Term::Kind::Gwesp, 0.0, ""});
    CHECK(stats(g, esp0)[0] ==
          doctest::Approx(static_cast<double>(edges_with_partner))
              .epsilon(1e-12));

    int non_isolated = 0;
    for (int i = 0; i < 9; ++i) {
      if (g.degree(i) > 0) ++non_isolated;
    }
    ModelSpec deg0;
    deg0.terms.push_back(Term{Term::Kind::Gwdegree, 0.0, ""});
    CHECK(stats(g, deg0)[0] ==
          doctest::Approx(static_cast<double>(non_isolated)).epsilon(1e-12));
  }
}

TEST_CASE("gwesp matches its defining sum over shared-partner counts") {
  const double tau = 0.7;
  ModelSpec spec;
  spec.terms.push_back(Term{Term::Kind::Gwesp, tau, ""});
  for (std::uint64_t seed = 11; seed <= 14; ++seed) {
    const Graph g = testutil::random_graph(10, 0.4, seed);
    // EP_i = number of edges with exactly i shared partners.
    std::vector<int> ep(10, 0);
    for (DyadIndex d : g.edge_dyads()) {
      const Dyad p = dyad_from_index(10, d);
      ++ep[shared_partners(g, p.i, p.j)];
    }
    double expected = 0.0;
    for (int i = 1; i <= 8; ++i) {
      expected += (1.0 - std::pow(1.0 - std::exp(-tau), i)) * ep[i];
    }
    expected *= std::exp(tau);
    CHECK(stats(g, spec)[0] == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("stats are invariant under node relabeling") {
  const Graph g = school_graph(8, 9);
  const ModelSpec spec = full_spec();
  const Vec before = stats(g, spec);

  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(4);
  for (int i = 7; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform_int(i + 1)]);
  }
  Graph h(8);
  for (DyadIndex d : g.edge_dyads()) {
    const Dyad p = dyad_from_index(8, d);
    h.add_edge(perm[p.i], perm[p.j]);
  }
  for (const std::string& name : g.covariate_names()) {
    std::vector<std::string> moved(8);
    for (int i = 0; i < 8; ++i) moved[perm[i]] = g.covariate(name)[i];
    h.set_covariate(name, moved);
  }
  CHECK((stats(h, spec) - before).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("change statistics basics") {
  const ModelSpec edges = ModelSpec::edges_only();
  const Graph g = testutil::random_graph(6, 0.5, 2);
  for (DyadIndex d = 0; d < g.num_dyads(); ++d) {
    CHECK(change_stats(g, d, edges)[0] == doctest::Approx(1.0));
  }

  // First edge into an empty graph creates no shared partners.
  Graph empty3(3);
  ModelSpec esp;
  esp.terms.push_back(Term{Term::Kind::Gwesp, 0.5, ""});
  for (DyadIndex d = 0; d < empty3.num_dyads(); ++d) {
    CHECK(change_stats(empty3, d, esp)[0] == doctest::Approx(0.0));
  }

  CHECK_THROWS_AS(change_stats(g, static_cast<DyadIndex>(g.num_dyads()), edges),
                  std::out_of_range);
}

TEST_CASE("change statistics agree with from-scratch recomputation") {
  const ModelSpec spec = full_spec();
  Rng rng(123);
  for (int rep = 0; rep < 100; ++rep) {
    const Graph g = school_graph(8, 1000 + rep);
    const DyadIndex d = static_cast<DyadIndex>(rng.uniform_int(g.num_dyads()));
    const Vec delta = change_stats(g, d, spec);
    const Vec diff = stats(g.toggled(d), spec) - stats(g, spec);
    // The change statistic is always the effect of adding the edge.
    const double sign = g.dyad_state(d) ? -1.0 : 1.0;
    CHECK((diff - sign * delta).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("change statistics telescope to the full statistic") {
  const ModelSpec spec = full_spec();
  const Graph target = school_graph(9, 55);
  Graph g(9);
  for (const std::string& name : target.covariate_names()) {
    g.set_covariate(name, target.covariate(name));
  }
  Vec running = stats(g, spec);
  for (DyadIndex d : target.edge_dyads()) {
    running += change_stats(g, d, spec);
    g.toggle_in_place(d);
  }
  CHECK((running - stats(target, spec)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("log_unnormalized is the dot product") {
  Vec theta(2);
  Vec s(2);
  theta << 0.0, 0.0;
  s << 5.0, -2.0;
  CHECK(log_unnormalized(theta, s) == 0.0);
  theta << 1.0, 0.0;
  s << 7.0, 3.0;
  CHECK(log_unnormalized(theta, s) == doctest::Approx(7.0));
  theta << 0.5, -0.2;
  s << 3.0, 3.0;
  CHECK(log_unnormalized(theta, s) == doctest::Approx(0.9));
  Vec bad(3);
  bad.setZero();
  CHECK_THROWS_AS(log_unnormalized(theta, bad), std::invalid_argument);
}

TEST_CASE("exact normalizer matches the independent-dyad closed form") {
  const ModelSpec edges = ModelSpec::edges_only();
  for (int n = 3; n <= 5; ++n) {
    const double num_dyads = static_cast<double>(dyad_count(n));
    for (double t : {-1.0, 0.0, 0.3, 2.0}) {
      Vec theta(1);
      theta << t;
      const double expected = num_dyads * std::log1p(std::exp(t));
      CHECK(log_normalizer_exact(theta, edges, n) ==
            doctest::Approx(expected).epsilon(1e-10));
    }
    Vec zero(1);
    zero << 0.0;
    CHECK(log_normalizer_exact(zero, edges, n) ==
          doctest::Approx(num_dyads * std::log(2.0)).epsilon(1e-12));
  }
  Vec theta(1);
  theta << 0.1;
  CHECK_THROWS_AS(log_normalizer_exact(theta, edges, 6),
                  std::invalid_argument);
}

TEST_CASE("exact normalizer matches a hand enumeration on n=3") {
  // edges + gwesp: of the eight graphs on three nodes only the triangle has
  // an edge with a shared partner; its gwesp value is 3 at any decay.
  const ModelSpec spec = ModelSpec::parse("edges + gwesp(0.5)");
  Vec theta(2);
  theta << 0.3, 0.2;
  const double expected =
      std::log(1.0 + 3.0 * std::exp(0.3) + 3.0 * std::exp(0.6) +
               std::exp(3.0 * 0.3 + 3.0 * 0.2));
  CHECK(log_normalizer_exact(theta, spec, 3) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("enumeration moments match brute-force averages") {
  const ModelSpec spec = ModelSpec::parse("edges + gwesp(0.5)");
  const Graph shape(4);
  const GraphEnumeration enumeration(spec, shape);
  Vec theta(2);
  theta << 0.4, -0.1;
  const Eigen::VectorXd probs = enumeration.probabilities(theta);
  CHECK(probs.sum() == doctest::Approx(1.0).epsilon(1e-12));
  Vec mean = Vec::Zero(2);
  for (int g = 0; g < enumeration.num_graphs(); ++g) {
    mean += probs[g] * enumeration.graph_stats(g);
  }
  CHECK((mean - enumeration.mean_stats(theta)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_SUITE_END();
