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

#include <algorithm>
#include <stdexcept>

#include "privergm/graph.hpp"
#include "test_util.hpp"

using namespace privergm;

TEST_SUITE_BEGIN("graph");

TEST_CASE("dyad index bijection is total and stable") {
  for (int n = 2; n <= 12; ++n) {
    const std::int64_t total = dyad_count(n);
    CHECK(total == static_cast<std::int64_t>(n) * (n - 1) / 2);
    DyadIndex expected = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++expected) {
        CHECK(dyad_to_index(n, i, j) == expected);
        CHECK(dyad_to_index(n, j, i) == expected);
        const Dyad p = dyad_from_index(n, expected);
        CHECK(p.i == i);
        CHECK(p.j == j);
      }
    }
    CHECK_THROWS_AS(dyad_from_index(n, static_cast<DyadIndex>(total)),
                    std::out_of_range);
    CHECK_THROWS_AS(dyad_to_index(n, 0, 0), std::out_of_range);
  }
}

TEST_CASE("hamming distance basics") {
  const Graph g = testutil::random_graph(6, 0.5, 11);
  CHECK(hamming(g, g) == 0);

  const Graph empty4(4);
  const Graph full4 = complete_graph(4);
  CHECK(hamming(empty4, full4) == 6);

  // Path 0-1-2 against the triangle on the same nodes: they differ on one
  // dyad only, (0,2).
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  Graph triangle = complete_graph(3);
  CHECK(hamming(path, triangle) == 1);
  CHECK(hamming(triangle, path) == 1);

  CHECK_THROWS_AS(hamming(Graph(3), Graph(4)), std::invalid_argument);
}

TEST_CASE("hamming triangle inequality and bound") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph a = testutil::random_graph(6, 0.4, seed * 3 + 1);
    const Graph b = testutil::random_graph(6, 0.6, seed * 3 + 2);
    const Graph c = testutil::random_graph(6, 0.5, seed * 3 + 3);
    CHECK(hamming(a, c) <= hamming(a, b) + hamming(b, c));
    CHECK(hamming(a, b) == hamming(b, a));
    CHECK(hamming(a, b) <= dyad_count(6));
  }
}

TEST_CASE("toggle is an involution that moves exactly one dyad") {
  const Graph g = testutil::random_graph(7, 0.3, 5);
  for (DyadIndex d = 0; d < g.num_dyads(); ++d) {
    const Graph once = g.toggled(d);
    CHECK(hamming(g, once) == 1);
    CHECK(once.toggled(d).same_edges(g));
  }

  Graph empty3(3);
  const Graph with_edge = empty3.toggled(dyad_to_index(3, 0, 1));
  CHECK(with_edge.edge_count() == 1);
  CHECK(with_edge.has_edge(0, 1));

  CHECK_THROWS_AS(g.toggled(static_cast<DyadIndex>(g.num_dyads())),
                  std::out_of_range);
}

TEST_CASE("dyad_state reads single dyads") {
  const Graph full = complete_graph(5);
  const Graph empty5(5);
  for (DyadIndex d = 0; d < full.num_dyads(); ++d) {
    CHECK(full.dyad_state(d));
    CHECK_FALSE(empty5.dyad_state(d));
  }

  Graph g(4);  // triangle on {0,1,2} inside n=4
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  CHECK_FALSE(g.dyad_state(dyad_to_index(4, 2, 3)));
  CHECK_THROWS_AS(g.dyad_state(static_cast<DyadIndex>(g.num_dyads())),
                  std::out_of_range);
}

TEST_CASE("dyad enumeration covers every pair once; states sum to edge count") {
  const Graph g = testutil::random_graph(8, 0.45, 77);
  int present = 0;
  for (DyadIndex d = 0; d < g.num_dyads(); ++d) {
    present += g.dyad_state(d) ? 1 : 0;
  }
  CHECK(present == g.edge_count());
}

TEST_CASE("edge and covariate validation") {
  Graph g(4);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);  // multi-edge
  CHECK_THROWS_AS(g.add_edge(2, 2), std::out_of_range);      // self loop
  CHECK_THROWS_AS(g.remove_edge(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.set_covariate("x", {"a", "b"}), std::invalid_argument);
  g.set_covariate("x", {"a", "b", "a", "b"});
  CHECK(g.covariate("x")[2] == "a");
  CHECK_THROWS_AS(g.covariate("missing"), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
}

TEST_CASE("degrees track edges") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(4) == 0);
  g.remove_edge(0, 2);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(2) == 0);
}

TEST_SUITE_END();
