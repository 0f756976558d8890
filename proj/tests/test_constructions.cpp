#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "avgconn/connectivity.hpp"
#include "avgconn/constructions.hpp"
#include "avgconn/graph.hpp"

using namespace avgconn;

TEST_CASE("family names round trip") {
  for (Family f : {Family::gkp, Family::gamma, Family::psi, Family::phi}) {
    CHECK(family_from_name(family_name(f)) == f);
  }
  CHECK_THROWS_AS(family_from_name("theta"), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(spec_gkp(3, 2), std::invalid_argument);   // p < k
  CHECK_THROWS_AS(spec_gkp(2, 5), std::invalid_argument);   // k < 3
  CHECK_THROWS_AS(spec_gamma(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(spec_psi(3, 60), std::invalid_argument);  // p < 4s = 72
  CHECK_THROWS_AS(spec_psi(6, 720), std::invalid_argument); // k gated to {3,4,5}
  CHECK(spec_psi(6, 720, true).s == 180);                   // gate lifted explicitly
  CHECK_THROWS_AS(spec_psi(2, 100, true), std::invalid_argument);  // k < 3 stays hard
  CHECK_THROWS_AS(spec_phi(5, 6), std::invalid_argument);   // k < 6
  CHECK_THROWS_AS(spec_phi(6, 6), std::invalid_argument);   // r < k + 1

  CHECK(psi_stride_total(3) == 18);
  CHECK(psi_stride_total(4) == 48);
  CHECK(psi_stride_total(5) == 100);
  CHECK(spec_psi(3, 72).s == 18);
  CHECK(spec_phi(6, 7).p == 251);
  CHECK(spec_phi(6, 7).order() == 1004);
  CHECK(spec_gkp(3, 20).order() == 40);
}

TEST_CASE("single-block family is k-regular with the stride-1 fan") {
  Graph g = build_gkp(3, 20);
  CHECK(g.order() == 40);
  CHECK(g.size() == 60);
  CHECK(g.min_degree() == 3);
  CHECK(g.max_degree() == 3);

  Graph g35 = build_gkp(3, 5);
  CHECK(neighbourhood(g35, 0) == VertexSet{5, 6, 7});
  CHECK(neighbourhood(g35, 4) == VertexSet{5, 6, 9});  // wraps: x_4, x_0, x_1

  // Removing w_0's fan isolates it.
  Graph cut = g35.delete_vertices({5, 6, 7});
  CHECK_FALSE(cut.is_connected());
  CHECK(cut.degree(0) == 0);
}

TEST_CASE("p = k collapses to the complete bipartite graph") {
  Graph g = build_gkp(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) CHECK(g.has_edge(i, j));
  }
  CHECK(g.size() == 9);
  auto parts = g.bipartition();
  REQUIRE(parts.has_value());
  CHECK(parts->first.size() + parts->second.size() == 6);
}

TEST_CASE("three-fan family") {
  Graph g = build_gamma(3, 4);
  CHECK(g.order() == 16);
  CHECK(g.size() == 36);
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 9);
  for (int v = 4; v < 16; ++v) CHECK(g.degree(v) == 3);
  auto parts = g.bipartition();
  REQUIRE(parts.has_value());
  CHECK(parts->first.size() == 4);
  CHECK(parts->second.size() == 12);

  // Each block together with the hub set induces a copy of the single-block
  // family on the same parameters.
  Graph base = build_gkp(3, 4);
  for (int block = 1; block <= 3; ++block) {
    VertexSet keep{0, 1, 2, 3};
    for (int i = 0; i < 4; ++i) keep.push_back(4 * block + i);
    CHECK(g.induced_subgraph(keep).graph == base);
  }
}

TEST_CASE("strided family") {
  Graph g = build_psi(3, 72);
  int p = 72, s = 18;
  CHECK(g.order() == 288);
  for (int v = 0; v < p; ++v) CHECK(g.degree(v) == 9);
  for (int v = p; v < 4 * p; ++v) CHECK(g.degree(v) == 3);

  // Stride 1 towards X, stride k towards Y, stride k^2 towards Z.
  CHECK(set_intersection(neighbourhood(g, 0), VertexSet{p + 0, p + 1, p + 2}) ==
        VertexSet{p + 0, p + 1, p + 2});
  VertexSet y_nbrs;
  for (int v : neighbourhood(g, 0)) {
    if (v >= 2 * p && v < 3 * p) y_nbrs.push_back(v);
  }
  CHECK(y_nbrs == VertexSet{2 * p + 0, 2 * p + 3, 2 * p + 6});
  for (int i = 0; i < p; ++i) {
    CHECK(g.has_edge(i, 3 * p + i));
    CHECK(g.has_edge(i, 3 * p + (i + s) % p));
  }

  // The hub set with the stride-1 block is again the single-block family.
  VertexSet keep(2 * p);
  std::iota(keep.begin(), keep.end(), 0);
  CHECK(g.induced_subgraph(keep).graph == build_gkp(3, 72));
}

TEST_CASE("permuted family") {
  int k = 6, r = 7, p = 251;
  auto pi1 = phi_pi1(k, p);
  auto pi2 = phi_pi2(k, p);
  CHECK(pi1[0] == 0);
  CHECK(pi1[1] == 6);
  CHECK(pi2[1] == 36);
  CHECK(pi1[42] == 1);  // 6 * 42 = 252 = 1 mod 251
  auto is_permutation = [p](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    for (int i = 0; i < p; ++i) {
      if (v[i] != i) return false;
    }
    return true;
  };
  CHECK(is_permutation(pi1));
  CHECK(is_permutation(pi2));

  Graph g = build_phi(k, r);
  CHECK(g.order() == 1004);
  CHECK(g.size() == 3 * k * p);
  for (int v = 0; v < p; ++v) CHECK(g.degree(v) == 18);
  for (int v = p; v < 4 * p; ++v) CHECK(g.degree(v) == 6);
  for (int i : {0, 1, 17, 250}) {
    for (int j = 0; j < k; ++j) {
      CHECK(g.has_edge(i, p + (i + j) % p));
      CHECK(g.has_edge(pi1[i], 2 * p + (i + j) % p));
      CHECK(g.has_edge(pi2[i], 3 * p + (i + j) % p));
    }
  }
}

TEST_CASE("spec dispatch builds the same graphs") {
  CHECK(build(spec_gkp(3, 5)) == build_gkp(3, 5));
  CHECK(build(spec_gamma(3, 4)) == build_gamma(3, 4));
  CHECK(build(spec_psi(3, 72)) == build_psi(3, 72));
  CHECK(build(spec_phi(6, 7)) == build_phi(6, 7));
}

TEST_CASE("degree partition holds for the three-block families only") {
  CHECK(is_degree_partitioned(build_gamma(3, 4), 3));
  CHECK(is_degree_partitioned(build_psi(3, 72), 3));
  CHECK(is_degree_partitioned(build_phi(6, 7), 6));
  CHECK_FALSE(is_degree_partitioned(build_gkp(3, 5), 3));  // k-regular: no deg > k part
}

TEST_CASE("labels, block size and cyclic lookup") {
  Graph g35 = build_gkp(3, 5);
  CHECK(block_size(g35) == 5);
  CHECK(block_size(build_gamma(3, 4)) == 4);
  CHECK(labelled_vertex(g35, Block::W, 3) == 3);
  CHECK(labelled_vertex(g35, Block::X, 0) == 5);
  CHECK(labelled_vertex(g35, Block::X, -1) == 9);   // wraps to x_4
  CHECK(labelled_vertex(g35, Block::X, 7) == 7);    // wraps to x_2
  CHECK(labelled_vertex(g35, Block::W, -6) == 4);
  CHECK_THROWS_AS(labelled_vertex(g35, Block::Y, 0), std::invalid_argument);

  Graph unlabelled = Graph::from_edge_list(2, {{0, 1}});
  CHECK_THROWS_AS(block_size(unlabelled), std::invalid_argument);
  Graph reordered = unlabelled.with_labels({{Block::X, 0}, {Block::W, 0}});
  CHECK_THROWS_AS(block_size(reordered), std::invalid_argument);

  CHECK(label_name(Family::gkp, {Block::W, 3}) == "w3");
  CHECK(label_name(Family::gkp, {Block::X, 0}) == "x0");
  CHECK(label_name(Family::gamma, {Block::X, 2}) == "x1_2");
  CHECK(label_name(Family::gamma, {Block::Y, 1}) == "x2_1");
  CHECK(label_name(Family::gamma, {Block::Z, 0}) == "x3_0");
  CHECK(label_name(Family::gamma, {Block::W, 1}) == "w1");
  CHECK(label_name(Family::psi, {Block::Z, 5}) == "z5");
  CHECK(label_name(Family::phi, {Block::Y, 10}) == "y10");
}

TEST_CASE("sidecar serialization") {
  auto spec = spec_psi(3, 72);
  std::string json = sidecar_json(spec, build(spec));
  CHECK(json.find("\"family\": \"psi\"") != std::string::npos);
  CHECK(json.find("\"s\": 18") != std::string::npos);
  CHECK(json.find("\"order\": 288") != std::string::npos);
  CHECK(json.find("{\"id\": 0, \"name\": \"w0\"}") != std::string::npos);
  CHECK(json.find("{\"id\": 287, \"name\": \"z71\"}") != std::string::npos);
  CHECK(json.find("\"r\":") == std::string::npos);

  auto gspec = spec_gamma(3, 4);
  std::string gjson = sidecar_json(gspec, build(gspec));
  CHECK(gjson.find("\"family\": \"gamma\"") != std::string::npos);
  CHECK(gjson.find("{\"id\": 8, \"name\": \"x2_0\"}") != std::string::npos);
}
