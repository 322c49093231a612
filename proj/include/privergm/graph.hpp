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

#ifndef PRIVERGM_GRAPH_HPP_
#define PRIVERGM_GRAPH_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace privergm {

/// Flat index of an unordered node pair (i, j), i < j, in row-major order:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... The bijection is total and stable.
using DyadIndex = std::uint32_t;

struct Dyad {
  int i;
  int j;
};

inline std::int64_t dyad_count(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

DyadIndex dyad_to_index(int n, int i, int j);
Dyad dyad_from_index(int n, DyadIndex k);

/// Simple undirected labeled graph on nodes 0..n-1 with categorical nodal
/// covariates. No self loops, no multi-edges. Adjacency is kept as per-node
/// bit rows plus an incrementally maintained degree array and edge list, so
/// toggles and degree reads are O(1) and neighborhood scans are word-wide.
///
/// Graphs are value types: toggled() returns a new graph. toggle_in_place()
/// exists for samplers that own their state; it must stay confined to one
/// chain (see sampler.hpp).
class Graph {
 public:
  explicit Graph(int node_count);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::int64_t num_dyads() const { return dyad_count(n_); }

  bool has_edge(int i, int j) const;
  int degree(int i) const { return degree_[i]; }

  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  bool dyad_state(DyadIndex d) const;
  void toggle_in_place(DyadIndex d);
  Graph toggled(DyadIndex d) const;

  /// Dyad indices of the present edges, in insertion order.
  std::span<const DyadIndex> edge_dyads() const { return edges_; }

  /// Bit row of node i; bit j is set iff the edge (i, j) is present.
  std::span<const std::uint64_t> row(int i) const {
    return {adj_.data() + static_cast<std::size_t>(i) * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  // Covariates are categorical strings; every sequence must have length n.
  void set_covariate(const std::string& name, std::vector<std::string> values);
  const std::vector<std::string>& covariate(const std::string& name) const;
  bool has_covariate(const std::string& name) const;
  std::vector<std::string> covariate_names() const;
  const std::map<std::string, std::vector<std::string>>& covariates() const {
    return covariates_;
  }

  bool same_edges(const Graph& other) const;

 private:
  void check_pair(int i, int j) const;

  int n_ = 0;
  std::size_t words_ = 0;  // 64-bit words per adjacency row
  std::vector<std::uint64_t> adj_;
  std::vector<int> degree_;
  std::vector<DyadIndex> edges_;
  std::vector<std::int32_t> edge_pos_;  // dyad index -> slot in edges_, -1 if absent
  std::map<std::string, std::vector<std::string>> covariates_;
};

/// Number of dyads on which the two graphs differ (symmetric-difference size
/// of the edge sets). Requires equal node counts.
std::int64_t hamming(const Graph& a, const Graph& b);

/// Agreement cell counts between a protected graph x and a released graph y:
/// n11 edges in both, n10 edge only in x, n01 edge only in y, n00 in neither.
struct DyadCells {
  std::int64_t n00 = 0;
  std::int64_t n01 = 0;
  std::int64_t n10 = 0;
  std::int64_t n11 = 0;
};
DyadCells dyad_cells(const Graph& x, const Graph& y);

Graph complete_graph(int n);

}  // namespace privergm

#endif  // PRIVERGM_GRAPH_HPP_
