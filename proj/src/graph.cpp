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

#include "privergm/graph.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace privergm {

DyadIndex dyad_to_index(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
    throw std::out_of_range("dyad_to_index: invalid node pair");
  }
  if (i > j) std::swap(i, j);
  const std::int64_t k = static_cast<std::int64_t>(i) * n -
                         static_cast<std::int64_t>(i) * (i + 1) / 2 +
                         (j - i - 1);
  return static_cast<DyadIndex>(k);
}

Dyad dyad_from_index(int n, DyadIndex k) {
  if (static_cast<std::int64_t>(k) >= dyad_count(n)) {
    throw std::out_of_range("dyad_from_index: index out of range");
  }
  std::int64_t rest = k;
  int i = 0;
  while (rest >= n - 1 - i) {
    rest -= n - 1 - i;
    ++i;
  }
  return Dyad{i, i + 1 + static_cast<int>(rest)};
}

Graph::Graph(int node_count) : n_(node_count) {
  if (node_count <= 0) {
    throw std::invalid_argument("Graph: node count must be positive");
  }
  words_ = static_cast<std::size_t>((n_ + 63) / 64);
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
  degree_.assign(n_, 0);
  edge_pos_.assign(static_cast<std::size_t>(num_dyads()), -1);
}

void Graph::check_pair(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::out_of_range("Graph: invalid node pair");
  }
}

bool Graph::has_edge(int i, int j) const {
  check_pair(i, j);
  return (adj_[static_cast<std::size_t>(i) * words_ + j / 64] >>
          (j % 64)) & 1u;
}

void Graph::add_edge(int i, int j) {
  check_pair(i, j);
  const DyadIndex d = dyad_to_index(n_, i, j);
  if (edge_pos_[d] >= 0) {
    throw std::invalid_argument("Graph::add_edge: edge already present");
  }
  adj_[static_cast<std::size_t>(i) * words_ + j / 64] |= 1ULL << (j % 64);
  adj_[static_cast<std::size_t>(j) * words_ + i / 64] |= 1ULL << (i % 64);
  ++degree_[i];
  ++degree_[j];
  edge_pos_[d] = static_cast<std::int32_t>(edges_.size());
  edges_.push_back(d);
}

void Graph::remove_edge(int i, int j) {
  check_pair(i, j);
  const DyadIndex d = dyad_to_index(n_, i, j);
  const std::int32_t pos = edge_pos_[d];
  if (pos < 0) {
    throw std::invalid_argument("Graph::remove_edge: edge not present");
  }
  adj_[static_cast<std::size_t>(i) * words_ + j / 64] &= ~(1ULL << (j % 64));
  adj_[static_cast<std::size_t>(j) * words_ + i / 64] &= ~(1ULL << (i % 64));
  --degree_[i];
  --degree_[j];
  const DyadIndex last = edges_.back();
  edges_[pos] = last;
  edge_pos_[last] = pos;
  edges_.pop_back();
  edge_pos_[d] = -1;
}

bool Graph::dyad_state(DyadIndex d) const {
  if (static_cast<std::int64_t>(d) >= num_dyads()) {
    throw std::out_of_range("Graph::dyad_state: index out of range");
  }
  return edge_pos_[d] >= 0;
}

void Graph::toggle_in_place(DyadIndex d) {
  if (static_cast<std::int64_t>(d) >= num_dyads()) {
    throw std::out_of_range("Graph::toggle_in_place: index out of range");
  }
  const Dyad p = dyad_from_index(n_, d);
  if (edge_pos_[d] >= 0) {
    remove_edge(p.i, p.j);
  } else {
    add_edge(p.i, p.j);
  }
}

Graph Graph::toggled(DyadIndex d) const {
  Graph g = *this;
  g.toggle_in_place(d);
  return g;
}

void Graph::set_covariate(const std::string& name,
                          std::vector<std::string> values) {
  if (static_cast<int>(values.size()) != n_) {
    throw std::invalid_argument("Graph::set_covariate: sequence for '" + name +
                                "' has length " +
                                std::to_string(values.size()) + ", expected " +
                                std::to_string(n_));
  }
  covariates_[name] = std::move(values);
}

const std::vector<std::string>& Graph::covariate(
    const std::string& name) const {
  auto it = covariates_.find(name);
  if (it == covariates_.end()) {
    throw std::invalid_argument("Graph: unknown covariate '" + name + "'");
  }
  return it->second;
}

bool Graph::has_covariate(const std::string& name) const {
  return covariates_.count(name) > 0;
}

std::vector<std::string> Graph::covariate_names() const {
  std::vector<std::string> names;
  names.reserve(covariates_.size());
  for (const auto& [name, values] : covariates_) names.push_back(name);
  return names;
}

bool Graph::same_edges(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

std::int64_t hamming(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count()) {
    throw std::invalid_argument("hamming: node counts differ");
  }
  std::int64_t diff = 0;
  for (int i = 0; i < a.node_count(); ++i) {
    auto ra = a.row(i);
    auto rb = b.row(i);
    for (std::size_t w = 0; w < ra.size(); ++w) {
      diff += std::popcount(ra[w] ^ rb[w]);
    }
  }
  return diff / 2;  // each differing dyad shows up in both endpoint rows
}

DyadCells dyad_cells(const Graph& x, const Graph& y) {
  if (x.node_count() != y.node_count()) {
    throw std::invalid_argument("dyad_cells: node counts differ");
  }
  std::int64_t both = 0;
  for (int i = 0; i < x.node_count(); ++i) {
    auto rx = x.row(i);
    auto ry = y.row(i);
    for (std::size_t w = 0; w < rx.size(); ++w) {
      both += std::popcount(rx[w] & ry[w]);
    }
  }
  DyadCells c;
  c.n11 = both / 2;
  c.n10 = x.edge_count() - c.n11;
  c.n01 = y.edge_count() - c.n11;
  c.n00 = x.num_dyads() - c.n11 - c.n10 - c.n01;
  return c;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

}  // namespace privergm
