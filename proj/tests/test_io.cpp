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

#include <filesystem>
#include <fstream>
#include <string>

#include "privergm/io.hpp"
#include "test_util.hpp"

using namespace privergm;

namespace {

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "privergm_io_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto path = temp_dir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("edge list round trip preserves edges") {
  const Graph g = testutil::random_graph(9, 0.35, 5);
  std::vector<std::string> labels;
  for (int i = 0; i < 9; ++i) labels.push_back(std::to_string(i));
  const std::string path = (temp_dir() / "roundtrip.edges").string();
  write_edge_list(g, labels, path);
  const LoadedGraph back = read_edge_list(path);
  CHECK(back.graph.same_edges(g));
  CHECK(back.labels == labels);
}

TEST_CASE("edge list parsing with comments and errors") {
  const std::string good = write_file("good.edges",
                                      "# a comment\n"
                                      "n 4\n"
                                      "0 1\n"
                                      "2 3  # trailing comment\n");
  const LoadedGraph g = read_edge_list(good);
  CHECK(g.graph.node_count() == 4);
  CHECK(g.graph.edge_count() == 2);
  CHECK(g.graph.has_edge(2, 3));

  CHECK_THROWS_AS(read_edge_list(write_file("nohdr.edges", "0 1\n")), IoError);
  CHECK_THROWS_AS(
      read_edge_list(write_file("badlabel.edges", "n 3\n0 7\n")), IoError);
  CHECK_THROWS_AS(
      read_edge_list(write_file("alpha.edges", "n 3\na b\n")), IoError);
  CHECK_THROWS_AS(
      read_edge_list(write_file("dup.edges", "n 3\n0 1\n1 0\n")), IoError);
  CHECK_THROWS_AS(
      read_edge_list(write_file("self.edges", "n 3\n1 1\n")), IoError);
  CHECK_THROWS_AS(read_edge_list("/nonexistent/file.edges"), IoError);
}

TEST_CASE("covariate table defines labels and node order") {
  const std::string cov = write_file("nodes.attrs",
                                     "node drug sport\n"
                                     "alice yes regular\n"
                                     "bob no irregular\n"
                                     "carol yes regular\n");
  const std::string edges = write_file("named.edges",
                                       "n 3\n"
                                       "alice carol\n");
  const LoadedGraph g = read_graph(edges, cov);
  CHECK(g.graph.node_count() == 3);
  CHECK(g.graph.has_edge(0, 2));
  CHECK(g.labels == std::vector<std::string>{"alice", "bob", "carol"});
  CHECK(g.graph.covariate("drug") ==
        std::vector<std::string>{"yes", "no", "yes"});
  CHECK(g.graph.covariate("sport")[1] == "irregular");

  // Comma-delimited variant parses the same way.
  const std::string cov_csv = write_file("nodes.csv",
                                         "node,drug,sport\n"
                                         "alice,yes,regular\n"
                                         "bob,no,irregular\n"
                                         "carol,yes,regular\n");
  const LoadedGraph g2 = read_graph(edges, cov_csv);
  CHECK(g2.graph.covariate("drug") == g.graph.covariate("drug"));

  const std::string unknown = write_file("unknown.edges", "n 3\ndave bob\n");
  CHECK_THROWS_AS(read_graph(unknown, cov), IoError);
  const std::string mismatch = write_file("mismatch.edges", "n 5\nalice bob\n");
  CHECK_THROWS_AS(read_graph(mismatch, cov), IoError);
}

TEST_CASE("release sidecar round trip and epsilon consistency check") {
  const auto path = (temp_dir() / "release.meta").string();
  ReleaseMeta meta;
  meta.params = PrivacyParams::symmetric(0.27);
  meta.seed = 123456789;
  meta.node_count = 50;
  write_release_sidecar(path, meta, {});
  const ReleaseMeta back = read_release_sidecar(path);
  CHECK(back.params.p00() == doctest::Approx(0.73).epsilon(1e-9));
  CHECK(back.params.p11() == doctest::Approx(0.73).epsilon(1e-9));
  CHECK(back.params.epsilon() ==
        doctest::Approx(meta.params.epsilon()).epsilon(1e-9));
  CHECK(back.seed == meta.seed);
  CHECK(back.node_count == 50);

  // A tampered epsilon no longer matches (p00, p11) and is rejected.
  const std::string tampered = write_file("tampered.meta",
                                          "p00 = 0.73\n"
                                          "p11 = 0.73\n"
                                          "epsilon = 2.5\n"
                                          "seed = 1\n"
                                          "n = 10\n"
                                          "dyads = 45\n");
  CHECK_THROWS_AS(read_release_sidecar(tampered), IoError);
}

TEST_CASE("fit record round trip") {
  FitResult fit;
  fit.method = FitMethod::kMissingData;
  fit.converged = true;
  fit.iterations = 9;
  fit.seed = 77;
  fit.theta.resize(2);
  fit.theta << -1.25, 0.5;
  fit.std_errors.resize(2);
  fit.std_errors << 0.2, 0.1;
  fit.term_names = {"edges", "gwesp(0.5)"};
  fit.weight_ess = 321.5;
  const std::string model = "edges + gwesp(0.5)";
  const auto path = (temp_dir() / "fit.txt").string();
  write_fit_result(path, fit, model);

  const LoadedFit back = read_fit_result(path);
  CHECK(back.model_string == model);
  CHECK(back.method == "missing");
  CHECK(back.converged);
  REQUIRE(back.theta.size() == 2);
  CHECK(back.theta[0] == doctest::Approx(-1.25).epsilon(1e-12));
  CHECK(back.theta[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("key-value parsing") {
  const std::string path = write_file("conf.txt",
                                      "# comment\n"
                                      "a = 1\n"
                                      "  b.c =  hello world \n"
                                      "\n");
  const auto kv = read_key_values(path);
  CHECK(kv.at("a") == "1");
  CHECK(kv.at("b.c") == "hello world");
  CHECK_THROWS_AS(read_key_values(write_file("bad.txt", "just text\n")),
                  IoError);
}

TEST_CASE("sample export writes one row per draw") {
  const ModelSpec spec = ModelSpec::parse("edges + gwesp(0.5)");
  Vec theta(2);
  theta.setZero();
  SamplerConfig cfg;
  cfg.draws = 25;
  cfg.seed = 3;
  const SampleSet s = sample(theta, spec, Graph(4), cfg);
  const auto path = (temp_dir() / "sample.tsv").string();
  write_sample_tsv(path, s);

  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "draw\tedges\tgwesp(0.5)");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 25);
}

TEST_SUITE_END();
