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

#ifndef PRIVERGM_PRIVACY_HPP_
#define PRIVERGM_PRIVACY_HPP_

#include <cstdint>
#include <optional>

#include "privergm/graph.hpp"

namespace privergm {

/// Edge privacy level of the dyad-wise randomized response mechanism with
/// truthful-report probabilities p00 (non-edges) and p11 (edges):
///
///   epsilon = log max{ p00/(1-p11), (1-p11)/p00, (1-p00)/p11, p11/(1-p00) }
///
/// Returns +inf when p00 = 1 or p11 = 1. Requires p00, p11 in (0, 1].
double epsilon_general(double p00, double p11);

/// Symmetric case: each dyad flipped with probability pi in (0, 1/2).
/// epsilon = -log(pi / (1 - pi)), strictly decreasing in pi.
double epsilon_symmetric(double pi);

/// Inverse of epsilon_symmetric: pi = 1 / (1 + e^epsilon). Requires
/// epsilon > 0; the result lands in (0, 1/2).
double pi_for_epsilon(double epsilon);

/// Dyad-retention probabilities of the release mechanism together with the
/// privacy level they imply. Parameters are public by assumption: they are
/// written alongside every released graph, and the missing-data likelihood
/// needs them as weights.
class PrivacyParams {
 public:
  /// General mechanism. p00, p11 in (0, 1]. The fully uninformative setting
  /// (epsilon == 0) is allowed but flagged degenerate.
  static PrivacyParams general(double p00, double p11);

  /// Symmetric mechanism with flip probability pi in (0, 1/2);
  /// p00 = p11 = 1 - pi. Values >= 1/2 are rejected: past that point the
  /// released graph carries no usable signal (edges and non-edges reverse).
  static PrivacyParams symmetric(double pi);

  /// Symmetric mechanism hitting a target epsilon > 0 exactly.
  static PrivacyParams for_epsilon(double epsilon);

  double p00() const { return p00_; }
  double p11() const { return p11_; }
  double epsilon() const { return epsilon_; }
  bool is_symmetric() const { return p00_ == p11_; }
  /// Flip probability; only meaningful in the symmetric case.
  std::optional<double> pi() const;
  /// True when epsilon == 0: the release is independent of the input.
  bool degenerate() const { return epsilon_ == 0.0; }
  /// True when p00 == p11 == 1: the mechanism releases the graph unchanged.
  bool no_privacy() const { return p00_ == 1.0 && p11_ == 1.0; }

 private:
  PrivacyParams(double p00, double p11);
  double p00_;
  double p11_;
  double epsilon_;
};

/// Releases a synthetic graph: every dyad of x is reported truthfully with
/// probability p11 (edges) or p00 (non-edges) and flipped otherwise,
/// independently across dyads. Covariates are copied unchanged (nodal
/// attributes are public). Deterministic given the seed.
Graph release(const Graph& x, const PrivacyParams& params, std::uint64_t seed);

/// log P(Y = y | X = x) under the mechanism. In the symmetric case this is
/// D*log(pi) + (N-D)*log(1-pi) with D = hamming(x, y) and N the dyad count;
/// in general it is the sum of the four dyad-cell log probabilities. Kept in
/// log space: at n = 50 the product has 1225 factors and underflows linearly.
double log_conditional(const Graph& y, const Graph& x,
                       const PrivacyParams& params);

/// Same conditional log-probability evaluated from precomputed cell counts.
double log_conditional_cells(const DyadCells& cells,
                             const PrivacyParams& params);

/// Per-dyad tilt of the conditional law: entry d holds
/// log P(y_d | x_d = 1) - log P(y_d | x_d = 0), so that
/// log P(y | x) = sum_d x_d * tilt_d + const(y). Adding these as dyad
/// offsets to an ERGM sampler makes it target P(x | y; theta), the
/// conditional law of the protected graph given the release. Entries are
/// +-infinity when the mechanism reports a side exactly.
std::vector<double> conditional_tilt(const Graph& y,
                                     const PrivacyParams& params);

}  // namespace privergm

#endif  // PRIVERGM_PRIVACY_HPP_
