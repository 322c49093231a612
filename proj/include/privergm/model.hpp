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

#ifndef PRIVERGM_MODEL_HPP_
#define PRIVERGM_MODEL_HPP_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "privergm/graph.hpp"

namespace privergm {

using Vec = Eigen::VectorXd;  // term-aligned parameter / statistic vectors

struct Term {
  enum class Kind { Edges, Gwesp, Gwdegree, Nodematch };
  Kind kind;
  double decay = 0.0;      // Gwesp / Gwdegree; fixed, not estimated
  std::string attribute;   // Nodematch

  std::string name() const;
};

/// Ordered list of model terms defining the sufficient statistic vector g(x).
///
/// Model strings use '+'-separated term names with optional parenthesized
/// arguments, e.g. "edges + gwesp(0.5) + gwdegree(0.5) + nodematch(drug)".
struct ModelSpec {
  std::vector<Term> terms;

  int dim() const { return static_cast<int>(terms.size()); }
  std::vector<std::string> term_names() const;
  std::string to_string() const;

  /// Throws if a referenced attribute is missing from g's covariates.
  void validate_for(const Graph& g) const;

  static ModelSpec parse(const std::string& text);

  static ModelSpec edges_only() {
    return ModelSpec{{Term{Term::Kind::Edges, 0.0, ""}}};
  }
};

/// Evaluator bound to a model spec and a graph shape (node count, covariate
/// values, decay weight tables). Binding is done once; stats() and
/// add_change() are then allocation-free and cheap enough for sampler loops.
class ModelCalculator {
 public:
  ModelCalculator(const ModelSpec& spec, const Graph& shape);

  int dim() const { return spec_.dim(); }
  const ModelSpec& spec() const { return spec_; }

  /// Full statistic vector g(g).
  void stats(const Graph& g, double* out) const;
  Vec stats(const Graph& g) const;

  /// Change statistic of dyad (i, j): the effect on g of adding the edge,
  /// holding every other dyad fixed. Valid whether or not the edge is
  /// currently present in g.
  void add_change(const Graph& g, int i, int j, double* out) const;

 private:
  ModelSpec spec_;
  int n_;
  // Geometric weight tables per decayed term, indexed by count.
  std::vector<std::vector<double>> weights_;
  // Integer covariate codes per nodematch term.
  std::vector<std::vector<std::int32_t>> codes_;
};

/// Sufficient statistics g(g) for the given spec.
Vec stats(const Graph& g, const ModelSpec& spec);

/// Change statistic of dyad d (always the effect of adding the edge).
Vec change_stats(const Graph& g, DyadIndex d, const ModelSpec& spec);

/// theta . s, the log unnormalized ERGM density.
double log_unnormalized(const Vec& theta, const Vec& s);

}  // namespace privergm

#endif  // PRIVERGM_MODEL_HPP_
