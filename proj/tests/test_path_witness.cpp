#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "avgconn/constructions.hpp"
#include "avgconn/graph.hpp"
#include "avgconn/path_witness.hpp"

using namespace avgconn;

namespace {

VertexSet fronts(const PathSystem& sys) {
  VertexSet out;
  for (const auto& p : sys.paths) out.push_back(p.front());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet backs(const PathSystem& sys) {
  VertexSet out;
  for (const auto& p : sys.paths) out.push_back(p.back());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("window membership with wraparound") {
  Window w{-2, 1};
  CHECK(window_contains(w, 72, 0));
  CHECK(window_contains(w, 72, 1));
  CHECK(window_contains(w, 72, 70));
  CHECK(window_contains(w, 72, 71));
  CHECK_FALSE(window_contains(w, 72, 2));
  CHECK_FALSE(window_contains(w, 72, 69));

  Window above{70, 74};  // indices 70..74 reduce to {70, 71, 0, 1, 2}
  CHECK(window_contains(above, 72, 0));
  CHECK(window_contains(above, 72, 2));
  CHECK_FALSE(window_contains(above, 72, 3));

  CHECK_THROWS_AS(window_contains(Window{3, 2}, 72, 0), std::invalid_argument);
  CHECK_THROWS_AS(window_contains(Window{0, 72}, 72, 0), std::invalid_argument);  // width 73
}

TEST_CASE("window vertex expansion covers every block") {
  Graph g = build_gkp(3, 5);
  CHECK(window_vertices(g, Window{-1, 1}) == VertexSet{0, 1, 4, 5, 6, 9});
  CHECK(window_vertices(g, Window{0, 4}).size() == 10);  // the whole graph
  CHECK_THROWS_AS(window_vertices(g, Window{0, 5}), std::invalid_argument);

  Graph psi = build_psi(3, 72);
  auto ids = window_vertices(psi, Window{70, 73});
  CHECK(ids.size() == 16);
  CHECK(set_contains(ids, 70));            // w_70
  CHECK(set_contains(ids, 1));             // w_1 via 73
  CHECK(set_contains(ids, 3 * 72 + 71));   // z_71
  CHECK_FALSE(set_contains(ids, 2));
}

TEST_CASE("path system violations") {
  Graph k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

  PathSystem ok;
  ok.paths = {{0, 1}, {2, 3}};
  CHECK(path_system_violations(k4, ok).empty());

  PathSystem repeats;
  repeats.paths = {{0, 1, 0}};
  CHECK_FALSE(path_system_violations(k4, repeats).empty());

  Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  PathSystem nonedge;
  nonedge.paths = {{0, 2}};
  CHECK_FALSE(path_system_violations(p4, nonedge).empty());

  PathSystem undeclared;
  undeclared.paths = {{0, 1}, {2, 1}};
  CHECK_FALSE(path_system_violations(k4, undeclared).empty());
  undeclared.shared_endpoints = {1};
  CHECK(path_system_violations(k4, undeclared).empty());

  PathSystem interior;
  interior.paths = {{0, 1, 2}, {3, 1}};
  interior.shared_endpoints = {1};  // declared, but interior in the first path
  CHECK_FALSE(path_system_violations(k4, interior).empty());

  PathSystem empty_path;
  empty_path.paths = {{}};
  CHECK_FALSE(path_system_violations(k4, empty_path).empty());

  Graph g35 = build_gkp(3, 5);
  PathSystem windowed;
  windowed.paths = {{0, 6}};  // w_0 - x_1, both indices in {0, 1}
  windowed.window = Window{0, 1};
  CHECK(path_system_violations(g35, windowed).empty());
  windowed.paths = {{4, 9}};  // w_4 - x_4 is an edge but lies outside
  CHECK(path_system_violations(g35, windowed).size() == 2);
}

TEST_CASE("disjoint path extraction") {
  Graph k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto sys = max_disjoint_paths(k4, 0, {1, 2, 3}, 3, std::nullopt);
  REQUIRE(sys.has_value());
  CHECK(sys->paths.size() == 3);
  CHECK(fronts(*sys) == VertexSet{0, 0, 0});
  CHECK(backs(*sys) == VertexSet{1, 2, 3});
  CHECK(path_system_violations(k4, *sys).empty());

  Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(max_disjoint_paths(star, 1, {2, 3}, 2, std::nullopt).has_value());
  CHECK(max_disjoint_paths(star, 1, {2, 3}, 1, std::nullopt).has_value());

  CHECK_THROWS_AS(max_disjoint_paths(k4, 0, {1}, 0, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(max_disjoint_paths(k4, 0, {0, 1}, 1, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(max_disjoint_paths(k4, 0, {1, 2}, 3, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(max_disjoint_paths(k4, 0, {}, 1, std::nullopt), std::invalid_argument);

  // A single target absorbs all paths.
  Graph psi = build_psi(3, 72);
  auto direct = max_disjoint_paths(psi, 0, {1}, 9, Window{-9, 19});
  REQUIRE(direct.has_value());
  CHECK(direct->paths.size() == 9);
  for (const auto& path : direct->paths) {
    CHECK(path.front() == 0);
    CHECK(path.back() == 1);
  }
  CHECK(path_system_violations(psi, *direct).empty());

  // The same demand cannot fit in a window that cuts off the stride blocks.
  CHECK_FALSE(max_disjoint_paths(psi, 0, {1}, 9, Window{0, 1}).has_value());
}

TEST_CASE("direct witness stage") {
  Graph g = build_psi(3, 72);
  auto spec = spec_psi(3, 72);
  for (int t : {1, 5, 17, 35}) {
    auto sys = direct_witness(g, spec, t);
    REQUIRE(sys.has_value());
    CHECK(sys->paths.size() == 9);
    CHECK(fronts(*sys) == VertexSet(9, 0));
    CHECK(backs(*sys) == VertexSet(9, t));
    CHECK(path_system_violations(g, *sys).empty());
  }
  CHECK_THROWS_AS(direct_witness(g, spec, 0), std::invalid_argument);
  CHECK_THROWS_AS(direct_witness(g, spec, 36), std::invalid_argument);  // 2s
}

TEST_CASE("fanout stage") {
  Graph g = build_psi(3, 72);
  auto spec = spec_psi(3, 72);
  auto sys = source_fanout(g, spec, 0);
  REQUIRE(sys.has_value());
  CHECK(sys->paths.size() == 9);
  CHECK(backs(*sys) == VertexSet{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(path_system_violations(g, *sys).empty());

  auto shifted = source_fanout(g, spec, 17);
  REQUIRE(shifted.has_value());
  CHECK(backs(*shifted) == VertexSet{18, 19, 20, 21, 22, 23, 24, 25, 26});

  CHECK_THROWS_AS(source_fanout(g, spec, -1), std::invalid_argument);
  CHECK_THROWS_AS(source_fanout(g, spec, 18), std::invalid_argument);  // r = s
}

TEST_CASE("ladder stage") {
  Graph g = build_psi(3, 72);
  auto spec = spec_psi(3, 72);
  auto sys = ladder_segment(g, spec, 36);  // r = 0, q = 2: single rung each
  CHECK(sys.paths.size() == 9);
  CHECK(fronts(sys) == VertexSet{1, 2, 3, 4, 5, 6, 7, 8, 9});
  VertexSet want_backs;
  for (int j = 1; j <= 9; ++j) want_backs.push_back(3 * 72 + 18 + j);
  CHECK(backs(sys) == want_backs);
  CHECK_THROWS_AS(ladder_segment(g, spec, 20), std::invalid_argument);  // below 2s
  CHECK_THROWS_AS(ladder_segment(g, spec, 37), std::invalid_argument);  // above p/2

  // A deeper instance exercises a real ladder with interior rungs.
  Graph big = build_psi(3, 120);
  auto big_spec = spec_psi(3, 120);
  auto deep = ladder_segment(big, big_spec, 60);  // r = 6, q = 3
  CHECK(deep.paths.size() == 9);
  for (int j = 1; j <= 9; ++j) {
    const auto& path = deep.paths[j - 1];
    REQUIRE(path.size() == 4);
    CHECK(path[0] == 6 + j);                 // w_{r+j}
    CHECK(path[1] == 3 * 120 + 24 + j);      // z_{r+j+s}
    CHECK(path[2] == 24 + j);                // w_{r+j+s}
    CHECK(path[3] == 3 * 120 + 42 + j);      // z_{t-s+j}
  }
  CHECK(path_system_violations(big, deep).empty());
}

TEST_CASE("funnel stage") {
  Graph g = build_psi(3, 72);
  auto spec = spec_psi(3, 72);
  auto sys = target_funnel(g, spec, 36);
  REQUIRE(sys.has_value());
  CHECK(sys->paths.size() == 9);
  VertexSet want_fronts;
  for (int j = 1; j <= 9; ++j) want_fronts.push_back(3 * 72 + 18 + j);
  CHECK(fronts(*sys) == want_fronts);
  CHECK(backs(*sys) == VertexSet(9, 36));
  CHECK(path_system_violations(g, *sys).empty());
  CHECK_THROWS_AS(target_funnel(g, spec, 35), std::invalid_argument);
}

TEST_CASE("full witness for both regimes") {
  Graph g = build_psi(3, 72);
  auto spec = spec_psi(3, 72);

  auto direct = w_pair_witness(g, spec, 5);
  CHECK(direct.ok);
  CHECK(direct.system.paths.size() == 9);
  CHECK(backs(direct.system) == VertexSet(9, 5));

  auto assembled = w_pair_witness(g, spec, 36);
  CHECK(assembled.ok);
  CHECK(assembled.failed_stage.empty());
  CHECK(assembled.system.paths.size() == 9);
  CHECK(fronts(assembled.system) == VertexSet(9, 0));
  CHECK(backs(assembled.system) == VertexSet(9, 36));
  CHECK(assembled.system.shared_endpoints == VertexSet{0, 36});
  REQUIRE(assembled.system.window.has_value());
  CHECK(assembled.system.window->lo == -9);
  CHECK(assembled.system.window->hi == 54);
  CHECK(path_system_violations(g, assembled.system).empty());

  CHECK_THROWS_AS(w_pair_witness(g, spec, 0), std::invalid_argument);
  CHECK_THROWS_AS(w_pair_witness(g, spec, 37), std::invalid_argument);

  Graph big = build_psi(3, 120);
  auto big_spec = spec_psi(3, 120);
  auto deep = w_pair_witness(big, big_spec, 60);
  CHECK(deep.ok);
  CHECK(deep.system.paths.size() == 9);
  CHECK(backs(deep.system) == VertexSet(9, 60));
}

TEST_CASE("witness serialization") {
  Graph g = build_psi(3, 72);
  auto spec = spec_psi(3, 72);
  auto res = w_pair_witness(g, spec, 36);
  REQUIRE(res.ok);
  std::string json = path_system_to_json(g, spec.family, res.system);
  CHECK(json.find("w0") != std::string::npos);
  CHECK(json.find("w36") != std::string::npos);
  CHECK(json.find("\"paths\"") != std::string::npos);
}
