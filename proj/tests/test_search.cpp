#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>

#include "avgconn/graph_io.hpp"
#include "avgconn/search.hpp"
#include "oracles.hpp"

using namespace avgconn;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path("search_tmp_" + name) {
    std::ofstream out(path, std::ios::binary);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("mask round trip") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      CHECK(mask_to_graph(graph_to_mask(g), n) == g);
    }
  }
  Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  // pair_index(0,1) = 0, (0,2) = 1, (1,2) = 2.
  CHECK(graph_to_mask(p3) == 0b101);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (const Graph& g : enumerate_connected_graphs(n)) {
      std::uint64_t mask = graph_to_mask(g);
      std::uint64_t canon = canonical_mask(mask, n);
      CHECK(canon <= mask);
      for (int rep = 0; rep < 3; ++rep) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edge_list()) edges.emplace_back(perm[u], perm[v]);
        Graph relabeled = Graph::from_edge_list(n, edges);
        CHECK(canonical_mask(graph_to_mask(relabeled), n) == canon);
      }
    }
  }
  CHECK_THROWS_AS(canonical_mask(0, 8), std::invalid_argument);
}

TEST_CASE("isomorphism class counts match the published sequences") {
  const long long all[] = {1, 2, 4, 11, 34, 156, 1044};
  const long long connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(static_cast<long long>(enumerate_graph_classes(n).size()) == all[n - 1]);
    CHECK(static_cast<long long>(enumerate_connected_graphs(n).size()) == connected[n - 1]);
  }
  CHECK_THROWS_AS(enumerate_connected_graphs(8), std::invalid_argument);
}

TEST_CASE("ingest reads generator output") {
  TempFile file("ok.g6", "Bw\nC~\nD]o\n");
  auto res = ingest_graph6(file.path);
  REQUIRE(res.graphs.size() == 3);
  CHECK(res.graphs[0].order() == 3);
  CHECK(res.graphs[2] == decode_graph6("D]o"));
  CHECK(res.errors.empty());

  TempFile bad("bad.g6", "Bw\n!!\nC~\n");
  CHECK_THROWS_AS(ingest_graph6(bad.path), std::runtime_error);
  auto collected = ingest_graph6(bad.path, {.stop_on_error = false});
  CHECK(collected.graphs.size() == 2);
  REQUIRE(collected.errors.size() == 1);
  CHECK(collected.errors[0].line_no == 2);

  CHECK_THROWS_AS(ingest_graph6("no_such_file.g6"), std::runtime_error);
}

TEST_CASE("optimum search at order five") {
  auto report = find_optimal_native(5, 2, Mode::vertex);
  CHECK(report.n == 5);
  CHECK(report.k == 2);
  CHECK(report.count_candidates == 21);
  REQUIRE(report.best_value.has_value());
  CHECK(*report.best_value == Rational(21, 10));
  REQUIRE(report.optima.size() == 1);
  CHECK(report.optima[0] == "D]o");  // the complete bipartite graph on 2 + 3
  CHECK(report.all_optima_degree_partitioned);
  REQUIRE(report.bound_satisfied.has_value());
  CHECK(*report.bound_satisfied);
}

TEST_CASE("optimum search below the admissible order") {
  // At order four the only minimally 3-connected graph is complete, which is
  // regular, so the conjecture machinery must stand down: no partition, no
  // bound verdict.
  auto report = find_optimal_native(4, 3, Mode::vertex);
  REQUIRE(report.best_value.has_value());
  CHECK(*report.best_value == Rational(3));
  CHECK(report.count_minimal == 1);
  CHECK(report.optima == std::vector<std::string>{"C~"});
  CHECK_FALSE(report.all_optima_degree_partitioned);
  CHECK_FALSE(report.bound_satisfied.has_value());
}

TEST_CASE("optimum search over an explicit candidate list") {
  auto candidates = enumerate_connected_graphs(5);
  auto native = find_optimal_native(5, 2, Mode::edge);
  auto from_list = find_optimal(5, 2, Mode::edge, candidates);
  CHECK(from_list.best_value == native.best_value);
  CHECK(from_list.optima == native.optima);
  CHECK(from_list.count_minimal == native.count_minimal);

  // Candidates of the wrong order are rejected.
  auto wrong = enumerate_connected_graphs(4);
  CHECK_THROWS_AS(find_optimal(5, 2, Mode::edge, wrong), std::invalid_argument);
  // No candidates at all is a usable (empty) outcome.
  auto empty = find_optimal(5, 2, Mode::edge, {});
  CHECK_FALSE(empty.best_value.has_value());
  CHECK(empty.optima.empty());
  CHECK_FALSE(empty.all_optima_degree_partitioned);
  CHECK_FALSE(empty.bound_satisfied.has_value());
}

TEST_CASE("evidence sweep") {
  auto ev = conjecture_evidence(2, 5, 7, Mode::vertex);
  CHECK(ev.consistent);
  CHECK(ev.counterexample.empty());
  REQUIRE(ev.reports.size() == 3);
  CHECK(ev.reports[0].n == 5);
  CHECK(ev.reports[2].n == 7);
  for (const auto& r : ev.reports) {
    CHECK(r.all_optima_degree_partitioned);
    REQUIRE(r.bound_satisfied.has_value());
    CHECK(*r.bound_satisfied);
  }
  CHECK_THROWS_AS(conjecture_evidence(2, 4, 6, Mode::vertex), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_evidence(2, 6, 5, Mode::vertex), std::invalid_argument);
}

TEST_CASE("search report serialization") {
  auto report = find_optimal_native(5, 2, Mode::vertex);
  std::string json = search_report_to_json(report);
  CHECK(json.find("\"n\": 5") != std::string::npos);
  CHECK(json.find("\"k\": 2") != std::string::npos);
  CHECK(json.find("\"mode\": \"vertex\"") != std::string::npos);
  CHECK(json.find("\"best_value\": {\"num\": 21, \"den\": 10}") != std::string::npos);
  CHECK(json.find("\"D]o\"") != std::string::npos);
  CHECK(json.find("\"bound_satisfied\": true") != std::string::npos);

  auto none = find_optimal(5, 2, Mode::edge, {});
  std::string njson = search_report_to_json(none);
  CHECK(njson.find("\"best_value\": null") != std::string::npos);
  CHECK(njson.find("\"bound_satisfied\": null") != std::string::npos);

  auto ev = conjecture_evidence(2, 5, 6, Mode::vertex);
  std::string ejson = evidence_to_json(ev);
  CHECK(ejson.find("\"consistent\": true") != std::string::npos);
  CHECK(ejson.find("\"reports\"") != std::string::npos);
}
