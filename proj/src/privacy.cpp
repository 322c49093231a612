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

#include "privergm/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "privergm/rng.hpp"

namespace privergm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_probability(double p, const char* name) {
  if (!(p > 0.0) || p > 1.0) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, 1], got " +
                                std::to_string(p));
  }
}

// log(a/b) that yields +inf for b == 0 and -inf for a == 0.
double log_ratio(double a, double b) {
  if (b == 0.0) return kInf;
  if (a == 0.0) return -kInf;
  return std::log(a / b);
}

}  // namespace

double epsilon_general(double p00, double p11) {
  check_probability(p00, "p00");
  check_probability(p11, "p11");
  const double candidates[4] = {
      log_ratio(p00, 1.0 - p11), log_ratio(1.0 - p11, p00),
      log_ratio(1.0 - p00, p11), log_ratio(p11, 1.0 - p00)};
  return *std::max_element(candidates, candidates + 4);
}

double epsilon_symmetric(double pi) {
  if (!(pi > 0.0) || !(pi < 0.5)) {
    throw std::invalid_argument("pi must lie in (0, 0.5), got " +
                                std::to_string(pi));
  }
  return -std::log(pi / (1.0 - pi));
}

double pi_for_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive, got " +
                                std::to_string(epsilon));
  }
  return 1.0 / (1.0 + std::exp(epsilon));
}

PrivacyParams::PrivacyParams(double p00, double p11)
    : p00_(p00), p11_(p11), epsilon_(epsilon_general(p00, p11)) {}

PrivacyParams PrivacyParams::general(double p00, double p11) {
  return PrivacyParams(p00, p11);
}

PrivacyParams PrivacyParams::symmetric(double pi) {
  epsilon_symmetric(pi);  // validates pi in (0, 1/2)
  return PrivacyParams(1.0 - pi, 1.0 - pi);
}

PrivacyParams PrivacyParams::for_epsilon(double epsilon) {
  return symmetric(pi_for_epsilon(epsilon));
}

std::optional<double> PrivacyParams::pi() const {
  if (!is_symmetric()) return std::nullopt;
  return 1.0 - p00_;
}

Graph release(const Graph& x, const PrivacyParams& params,
              std::uint64_t seed) {
  const int n = x.node_count();
  Graph y(n);
  Rng rng(seed);
  // Dyads are visited in index order so a seed pins the whole release.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool edge = x.has_edge(i, j);
      const double keep = edge ? params.p11() : params.p00();
      const bool truthful = rng.uniform() < keep;
      if (edge == truthful) {  // edge reported, or non-edge flipped to edge
        y.add_edge(i, j);
      }
    }
  }
  for (const auto& [name, values] : x.covariates()) {
    y.set_covariate(name, values);
  }
  return y;
}

double log_conditional_cells(const DyadCells& cells,
                             const PrivacyParams& params) {
  // Each cell count multiplies the log of its reporting probability; a zero
  // count contributes nothing even when the log is -inf.
  auto term = [](std::int64_t count, double p) {
    if (count == 0) return 0.0;
    return static_cast<double>(count) * (p == 0.0 ? -kInf : std::log(p));
  };
  return term(cells.n00, params.p00()) + term(cells.n01, 1.0 - params.p00()) +
         term(cells.n10, 1.0 - params.p11()) + term(cells.n11, params.p11());
}

double log_conditional(const Graph& y, const Graph& x,
                       const PrivacyParams& params) {
  if (y.node_count() != x.node_count()) {
    throw std::invalid_argument("log_conditional: node counts differ");
  }
  return log_conditional_cells(dyad_cells(x, y), params);
}

std::vector<double> conditional_tilt(const Graph& y,
                                     const PrivacyParams& params) {
  auto safe_log = [](double p) { return p == 0.0 ? -kInf : std::log(p); };
  // log P(y_d = s | x_d = 1) - log P(y_d = s | x_d = 0) for s in {0, 1}.
  const double when_released_edge =
      safe_log(params.p11()) - safe_log(1.0 - params.p00());
  const double when_released_nonedge =
      safe_log(1.0 - params.p11()) - safe_log(params.p00());
  std::vector<double> tilt(static_cast<std::size_t>(y.num_dyads()),
                           when_released_nonedge);
  for (DyadIndex d : y.edge_dyads()) {
    tilt[d] = when_released_edge;
  }
  return tilt;
}

}  // namespace privergm
