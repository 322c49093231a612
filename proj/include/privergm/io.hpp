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

#ifndef PRIVERGM_IO_HPP_
#define PRIVERGM_IO_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "privergm/estimation.hpp"
#include "privergm/graph.hpp"
#include "privergm/privacy.hpp"
#include "privergm/sampler.hpp"

namespace privergm {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed decimal formatting used for every emitted number, so identical runs
/// produce byte-identical files.
std::string format_double(double v);

/// A graph plus the original node labels (index -> label). Input files may
/// use arbitrary labels; nodes are renumbered 0..n-1 on ingestion and the
/// mapping is carried along for output.
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;
};

/// Edge-list format: '#' comments, a header line "n <count>", then one
/// "i j" pair per line, whitespace separated. Without a covariate file the
/// labels must be the integers 0..n-1; with one, the covariate rows define
/// the label universe and node order.
LoadedGraph read_edge_list(const std::string& path,
                           const std::vector<std::string>* label_order = nullptr);

/// Covariate table: header row, first column the node label, remaining
/// columns named covariates. Whitespace or comma delimited.
LoadedGraph read_graph(const std::string& edge_path,
                       const std::string& covariate_path = "");

void write_edge_list(const Graph& g, const std::vector<std::string>& labels,
                     const std::string& path);

/// Plain-text key-value file ("key = value", '#' comments).
std::map<std::string, std::string> read_key_values(const std::string& path);

/// Release metadata sidecar: records the public mechanism parameters and the
/// seed so every release can be reproduced and consumed downstream.
struct ReleaseMeta {
  PrivacyParams params = PrivacyParams::general(1.0, 1.0);
  std::uint64_t seed = 0;
  int node_count = 0;
};

void write_release_sidecar(const std::string& path, const ReleaseMeta& meta,
                           const std::vector<std::string>& labels);
ReleaseMeta read_release_sidecar(const std::string& path);

/// Flat key-value fit record: per-term estimate/std-error plus diagnostics.
void write_fit_result(const std::string& path, const FitResult& fit,
                      const std::string& model_string);

struct LoadedFit {
  Vec theta;
  std::vector<std::string> term_names;
  std::string model_string;
  bool converged = false;
  std::string method;
};
LoadedFit read_fit_result(const std::string& path);

/// Sample export: one row per retained draw, a draw index column plus one
/// column per model term, tab separated with a header row.
void write_sample_tsv(const std::string& path, const SampleSet& sample);

}  // namespace privergm

#endif  // PRIVERGM_IO_HPP_
