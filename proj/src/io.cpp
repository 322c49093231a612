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

#include "privergm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace privergm {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return trim(pos == std::string::npos ? line : line.substr(0, pos));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  if (line.find(',') != std::string::npos) {
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  } else {
    std::stringstream ss(line);
    std::string field;
    while (ss >> field) fields.push_back(field);
  }
  return fields;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

std::vector<std::string> identity_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

const std::string& require(const std::map<std::string, std::string>& kv,
                           const std::string& key, const std::string& path) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw IoError("missing key '" + key + "' in " + path);
  }
  return it->second;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

LoadedGraph read_edge_list(const std::string& path,
                           const std::vector<std::string>* label_order) {
  std::ifstream in = open_input(path);
  std::string line;
  int n = -1;
  int line_no = 0;
  std::map<std::string, int> index_of;
  if (label_order != nullptr) {
    for (std::size_t i = 0; i < label_order->size(); ++i) {
      if (!index_of.emplace((*label_order)[i], static_cast<int>(i)).second) {
        throw IoError("duplicate node label '" + (*label_order)[i] + "'");
      }
    }
  }

  LoadedGraph out{Graph(1), {}};
  bool have_graph = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (body.empty()) continue;
    const std::vector<std::string> fields = split_fields(body);
    if (!have_graph) {
      if (fields.size() != 2 || fields[0] != "n") {
        throw IoError(path + ":" + std::to_string(line_no) +
                      ": expected header 'n <count>'");
      }
      n = std::stoi(fields[1]);
      if (n <= 0) {
        throw IoError(path + ": node count must be positive");
      }
      if (label_order != nullptr &&
          static_cast<int>(label_order->size()) != n) {
        throw IoError(path + ": header declares " + std::to_string(n) +
                      " nodes but the covariate table has " +
                      std::to_string(label_order->size()) + " rows");
      }
      out.graph = Graph(n);
      out.labels =
          (label_order != nullptr) ? *label_order : identity_labels(n);
      have_graph = true;
      continue;
    }
    if (fields.size() != 2) {
      throw IoError(path + ":" + std::to_string(line_no) +
                    ": expected 'i j' edge line");
    }
    int idx[2];
    for (int t = 0; t < 2; ++t) {
      if (label_order != nullptr) {
        auto it = index_of.find(fields[t]);
        if (it == index_of.end()) {
          throw IoError(path + ":" + std::to_string(line_no) +
                        ": unknown node label '" + fields[t] + "'");
        }
        idx[t] = it->second;
      } else {
        std::size_t used = 0;
        long value = -1;
        try {
          value = std::stol(fields[t], &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != fields[t].size() || value < 0 || value >= n) {
          throw IoError(path + ":" + std::to_string(line_no) + ": label '" +
                        fields[t] +
                        "' is not an integer in [0, n); supply a covariate "
                        "table to use arbitrary labels");
        }
        idx[t] = static_cast<int>(value);
      }
    }
    try {
      out.graph.add_edge(idx[0], idx[1]);
    } catch (const std::exception& e) {
      throw IoError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_graph) {
    throw IoError(path + ": missing 'n <count>' header");
  }
  return out;
}

LoadedGraph read_graph(const std::string& edge_path,
                       const std::string& covariate_path) {
  if (covariate_path.empty()) {
    return read_edge_list(edge_path);
  }
  std::ifstream in = open_input(covariate_path);
  std::string line;
  std::vector<std::string> columns;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> values;  // per covariate column
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (body.empty()) continue;
    const std::vector<std::string> fields = split_fields(body);
    if (columns.empty()) {
      if (fields.size() < 2) {
        throw IoError(covariate_path +
                      ": header must name the label column and at least one "
                      "covariate");
      }
      columns.assign(fields.begin() + 1, fields.end());
      values.resize(columns.size());
      continue;
    }
    if (fields.size() != columns.size() + 1) {
      throw IoError(covariate_path + ":" + std::to_string(line_no) +
                    ": expected " + std::to_string(columns.size() + 1) +
                    " fields");
    }
    labels.push_back(fields[0]);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      values[c].push_back(fields[c + 1]);
    }
  }
  if (labels.empty()) {
    throw IoError(covariate_path + ": no data rows");
  }
  LoadedGraph out = read_edge_list(edge_path, &labels);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out.graph.set_covariate(columns[c], values[c]);
  }
  return out;
}

void write_edge_list(const Graph& g, const std::vector<std::string>& labels,
                     const std::string& path) {
  if (static_cast<int>(labels.size()) != g.node_count()) {
    throw std::invalid_argument("write_edge_list: label count mismatch");
  }
  std::ofstream out = open_output(path);
  out << "# edges: " << g.edge_count() << "\n";
  out << "n " << g.node_count() << "\n";
  std::vector<DyadIndex> dyads(g.edge_dyads().begin(), g.edge_dyads().end());
  std::sort(dyads.begin(), dyads.end());
  for (DyadIndex d : dyads) {
    const Dyad p = dyad_from_index(g.node_count(), d);
    out << labels[p.i] << " " << labels[p.j] << "\n";
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
  std::ifstream in = open_input(path);
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw IoError(path + ":" + std::to_string(line_no) +
                    ": expected 'key = value'");
    }
    kv[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
  }
  return kv;
}

void write_release_sidecar(const std::string& path, const ReleaseMeta& meta,
                           const std::vector<std::string>& labels) {
  std::ofstream out = open_output(path);
  out << "p00 = " << format_double(meta.params.p00()) << "\n";
  out << "p11 = " << format_double(meta.params.p11()) << "\n";
  if (meta.params.pi().has_value()) {
    out << "pi = " << format_double(*meta.params.pi()) << "\n";
  }
  out << "epsilon = " << format_double(meta.params.epsilon()) << "\n";
  out << "seed = " << meta.seed << "\n";
  out << "n = " << meta.node_count << "\n";
  out << "dyads = " << dyad_count(meta.node_count) << "\n";
  bool trivial = true;
  for (std::size_t i = 0; i < labels.size() && trivial; ++i) {
    trivial = labels[i] == std::to_string(i);
  }
  if (!trivial && !labels.empty()) {
    out << "labels = ";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      out << (i ? "," : "") << labels[i];
    }
    out << "\n";
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

ReleaseMeta read_release_sidecar(const std::string& path) {
  const auto kv = read_key_values(path);
  ReleaseMeta meta;
  const double p00 = std::stod(require(kv, "p00", path));
  const double p11 = std::stod(require(kv, "p11", path));
  meta.params = PrivacyParams::general(p00, p11);
  meta.seed = std::stoull(require(kv, "seed", path));
  meta.node_count = std::stoi(require(kv, "n", path));
  const double stored_eps = std::stod(require(kv, "epsilon", path));
  const double eps = meta.params.epsilon();
  const bool both_inf = std::isinf(stored_eps) && std::isinf(eps);
  if (!both_inf && std::abs(stored_eps - eps) > 1e-6 * std::max(1.0, eps)) {
    throw IoError(path + ": stored epsilon " + format_double(stored_eps) +
                  " does not match (p00, p11); recomputed " +
                  format_double(eps));
  }
  return meta;
}

void write_fit_result(const std::string& path, const FitResult& fit,
                      const std::string& model_string) {
  std::ofstream out = open_output(path);
  out << "method = " << fit_method_name(fit.method) << "\n";
  out << "model = " << model_string << "\n";
  out << "converged = " << (fit.converged ? "true" : "false") << "\n";
  out << "iterations = " << fit.iterations << "\n";
  out << "seed = " << fit.seed << "\n";
  out << "draws = " << fit.mc_settings.draws << "\n";
  out << "burn_in = " << fit.mc_settings.burn_in << "\n";
  out << "interval = " << fit.mc_settings.interval << "\n";
  out << "log_lik_ratio = " << format_double(fit.log_lik_ratio_at_opt) << "\n";
  if (fit.weight_ess >= 0.0) {
    out << "weight_ess = " << format_double(fit.weight_ess) << "\n";
  }
  if (!fit.message.empty()) {
    out << "message = " << fit.message << "\n";
  }
  for (std::size_t t = 0; t < fit.term_names.size(); ++t) {
    out << "estimate." << fit.term_names[t] << " = "
        << format_double(fit.theta[static_cast<Eigen::Index>(t)]) << "\n";
  }
  if (fit.converged && fit.std_errors.size() == fit.theta.size()) {
    for (std::size_t t = 0; t < fit.term_names.size(); ++t) {
      out << "stderr." << fit.term_names[t] << " = "
          << format_double(fit.std_errors[static_cast<Eigen::Index>(t)])
          << "\n";
    }
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

LoadedFit read_fit_result(const std::string& path) {
  const auto kv = read_key_values(path);
  LoadedFit fit;
  fit.model_string = require(kv, "model", path);
  fit.method = require(kv, "method", path);
  fit.converged = require(kv, "converged", path) == "true";
  const ModelSpec spec = ModelSpec::parse(fit.model_string);
  fit.term_names = spec.term_names();
  fit.theta.resize(spec.dim());
  for (int t = 0; t < spec.dim(); ++t) {
    fit.theta[t] = std::stod(require(kv, "estimate." + fit.term_names[t], path));
  }
  return fit;
}

void write_sample_tsv(const std::string& path, const SampleSet& sample) {
  std::ofstream out = open_output(path);
  out << "draw";
  for (const std::string& name : sample.term_names) out << "\t" << name;
  out << "\n";
  for (int d = 0; d < sample.num_draws(); ++d) {
    out << d;
    for (Eigen::Index c = 0; c < sample.stats.cols(); ++c) {
      out << "\t" << format_double(sample.stats(d, c));
    }
    out << "\n";
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace privergm
