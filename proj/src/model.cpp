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

#include "privergm/model.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace privergm {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string format_decay(double d) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", d);
  return buf;
}

// Geometric down-weighting table w[k] = e^tau * (1 - (1 - e^-tau)^k); w[0]=0.
std::vector<double> geometric_weights(double tau, int size) {
  std::vector<double> w(size, 0.0);
  const double base = 1.0 - std::exp(-tau);
  const double scale = std::exp(tau);
  double basek = 1.0;  // base^k
  for (int k = 1; k < size; ++k) {
    basek *= base;
    w[k] = scale * (1.0 - basek);
  }
  return w;
}

inline int intersect_count(std::span<const std::uint64_t> a,
                           std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    c += std::popcount(a[w] & b[w]);
  }
  return c;
}

template <typename Fn>
inline void for_each_bit(std::span<const std::uint64_t> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t word = row[w];
    while (word) {
      fn(static_cast<int>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
}

}  // namespace

std::string Term::name() const {
  switch (kind) {
    case Kind::Edges:
      return "edges";
    case Kind::Gwesp:
      return "gwesp(" + format_decay(decay) + ")";
    case Kind::Gwdegree:
      return "gwdegree(" + format_decay(decay) + ")";
    case Kind::Nodematch:
      return "nodematch(" + attribute + ")";
  }
  return "?";
}

std::vector<std::string> ModelSpec::term_names() const {
  std::vector<std::string> names;
  names.reserve(terms.size());
  for (const Term& t : terms) names.push_back(t.name());
  return names;
}

std::string ModelSpec::to_string() const {
  std::string out;
  for (const Term& t : terms) {
    if (!out.empty()) out += " + ";
    out += t.name();
  }
  return out;
}

void ModelSpec::validate_for(const Graph& g) const {
  if (terms.empty()) {
    throw std::invalid_argument("model spec has no terms");
  }
  for (const Term& t : terms) {
    if (t.kind == Term::Kind::Nodematch && !g.has_covariate(t.attribute)) {
      throw std::invalid_argument("model references unknown attribute '" +
                                  t.attribute + "'");
    }
    if ((t.kind == Term::Kind::Gwesp || t.kind == Term::Kind::Gwdegree) &&
        t.decay < 0.0) {
      throw std::invalid_argument("decay must be non-negative in " + t.name());
    }
  }
}

ModelSpec ModelSpec::parse(const std::string& text) {
  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (;;) {
    const std::size_t plus = text.find('+', start);
    if (plus == std::string::npos) {
      pieces.push_back(trim(text.substr(start)));
      break;
    }
    pieces.push_back(trim(text.substr(start, plus - start)));
    start = plus + 1;
  }

  ModelSpec spec;
  for (const std::string& piece : pieces) {
    if (piece.empty()) {
      throw std::invalid_argument("empty term in model string");
    }
    std::string name = piece;
    std::string arg;
    const auto open = piece.find('(');
    if (open != std::string::npos) {
      if (piece.back() != ')') {
        throw std::invalid_argument("unbalanced parentheses in term '" +
                                    piece + "'");
      }
      name = trim(piece.substr(0, open));
      arg = trim(piece.substr(open + 1, piece.size() - open - 2));
    }
    Term term;
    if (name == "edges") {
      if (!arg.empty()) {
        throw std::invalid_argument("edges takes no argument");
      }
      term.kind = Term::Kind::Edges;
    } else if (name == "gwesp" || name == "gwdegree") {
      term.kind =
          name == "gwesp" ? Term::Kind::Gwesp : Term::Kind::Gwdegree;
      term.decay = 0.5;  // conventional default, recorded in output metadata
      if (!arg.empty()) {
        std::size_t used = 0;
        term.decay = std::stod(arg, &used);
        if (used != arg.size()) {
          throw std::invalid_argument("bad decay '" + arg + "' in " + name);
        }
      }
      if (term.decay < 0.0) {
        throw std::invalid_argument("decay must be non-negative in " + name);
      }
    } else if (name == "nodematch") {
      if (arg.empty()) {
        throw std::invalid_argument("nodematch requires an attribute name");
      }
      term.kind = Term::Kind::Nodematch;
      term.attribute = arg;
    } else {
      throw std::invalid_argument("unknown model term '" + name + "'");
    }
    spec.terms.push_back(term);
  }
  if (spec.terms.empty()) {
    throw std::invalid_argument("model string has no terms");
  }
  return spec;
}

ModelCalculator::ModelCalculator(const ModelSpec& spec, const Graph& shape)
    : spec_(spec), n_(shape.node_count()) {
  spec_.validate_for(shape);
  weights_.resize(spec_.terms.size());
  codes_.resize(spec_.terms.size());
  for (std::size_t t = 0; t < spec_.terms.size(); ++t) {
    const Term& term = spec_.terms[t];
    if (term.kind == Term::Kind::Gwesp || term.kind == Term::Kind::Gwdegree) {
      weights_[t] = geometric_weights(term.decay, n_ + 2);
    } else if (term.kind == Term::Kind::Nodematch) {
      const auto& values = shape.covariate(term.attribute);
      std::map<std::string, std::int32_t> dictionary;
      auto& codes = codes_[t];
      codes.resize(n_);
      for (int i = 0; i < n_; ++i) {
        auto [it, unused] = dictionary.emplace(
            values[i], static_cast<std::int32_t>(dictionary.size()));
        codes[i] = it->second;
      }
    }
  }
}

void ModelCalculator::stats(const Graph& g, double* out) const {
  if (g.node_count() != n_) {
    throw std::invalid_argument("ModelCalculator: graph size mismatch");
  }
  for (std::size_t t = 0; t < spec_.terms.size(); ++t) {
    const Term& term = spec_.terms[t];
    double value = 0.0;
    switch (term.kind) {
      case Term::Kind::Edges:
        value = g.edge_count();
        break;
      case Term::Kind::Gwdegree: {
        const auto& w = weights_[t];
        for (int i = 0; i < n_; ++i) value += w[g.degree(i)];
        break;
      }
      case Term::Kind::Gwesp: {
        const auto& w = weights_[t];
        for (DyadIndex d : g.edge_dyads()) {
          const Dyad p = dyad_from_index(n_, d);
          value += w[intersect_count(g.row(p.i), g.row(p.j))];
        }
        break;
      }
      case Term::Kind::Nodematch: {
        const auto& codes = codes_[t];
        for (DyadIndex d : g.edge_dyads()) {
          const Dyad p = dyad_from_index(n_, d);
          if (codes[p.i] == codes[p.j]) value += 1.0;
        }
        break;
      }
    }
    out[t] = value;
  }
}

Vec ModelCalculator::stats(const Graph& g) const {
  Vec out(dim());
  stats(g, out.data());
  return out;
}

void ModelCalculator::add_change(const Graph& g, int i, int j,
                                 double* out) const {
  if (g.node_count() != n_ || i == j || i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::invalid_argument("ModelCalculator::add_change: bad dyad");
  }
  // The computation pretends the edge (i, j) is absent; when it is actually
  // present its single bit inflates degree(i), degree(j) and the shared
  // partner counts of edges incident to common neighbors by exactly one.
  const int present = g.has_edge(i, j) ? 1 : 0;
  const auto row_i = g.row(i);
  const auto row_j = g.row(j);
  for (std::size_t t = 0; t < spec_.terms.size(); ++t) {
    const Term& term = spec_.terms[t];
    switch (term.kind) {
      case Term::Kind::Edges:
        out[t] = 1.0;
        break;
      case Term::Kind::Nodematch:
        out[t] = (codes_[t][i] == codes_[t][j]) ? 1.0 : 0.0;
        break;
      case Term::Kind::Gwdegree: {
        const auto& w = weights_[t];
        const int di = g.degree(i) - present;
        const int dj = g.degree(j) - present;
        out[t] = (w[di + 1] - w[di]) + (w[dj + 1] - w[dj]);
        break;
      }
      case Term::Kind::Gwesp: {
        const auto& w = weights_[t];
        // Common neighbors of i and j; the dyad's own state never enters
        // the intersection (no self loops).
        double delta = 0.0;
        int common = 0;
        for (std::size_t word = 0; word < row_i.size(); ++word) {
          std::uint64_t both = row_i[word] & row_j[word];
          common += std::popcount(both);
          while (both) {
            const int k =
                static_cast<int>(word * 64 + std::countr_zero(both));
            both &= both - 1;
            // Edges (i,k) and (j,k) each gain one shared partner.
            const auto row_k = g.row(k);
            const int s_ik = intersect_count(row_i, row_k) - present;
            const int s_jk = intersect_count(row_j, row_k) - present;
            delta += (w[s_ik + 1] - w[s_ik]) + (w[s_jk + 1] - w[s_jk]);
          }
        }
        delta += w[common];  // the new edge itself
        out[t] = delta;
        break;
      }
    }
  }
}

Vec stats(const Graph& g, const ModelSpec& spec) {
  return ModelCalculator(spec, g).stats(g);
}

Vec change_stats(const Graph& g, DyadIndex d, const ModelSpec& spec) {
  if (static_cast<std::int64_t>(d) >= g.num_dyads()) {
    throw std::out_of_range("change_stats: dyad index out of range");
  }
  const Dyad p = dyad_from_index(g.node_count(), d);
  ModelCalculator calc(spec, g);
  Vec out(spec.dim());
  calc.add_change(g, p.i, p.j, out.data());
  return out;
}

double log_unnormalized(const Vec& theta, const Vec& s) {
  if (theta.size() != s.size()) {
    throw std::invalid_argument("log_unnormalized: dimension mismatch");
  }
  return theta.dot(s);
}

}  // namespace privergm
