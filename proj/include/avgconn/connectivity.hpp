#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avgconn/graph.hpp"
#include "avgconn/rational.hpp"

namespace avgconn {

enum class Mode { vertex, edge };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& name);

// Maximum number of internally disjoint u-v paths, computed as integral max
// flow on the vertex-split digraph. For adjacent pairs this is
// 1 + (the same quantity with the edge uv removed). A disconnected pair
// yields 0; u == v is an error.
int local_vertex_connectivity(const Graph& g, int u, int v);

// Maximum number of edge-disjoint u-v paths (unit-capacity flow, both
// orientations per edge).
int local_edge_connectivity(const Graph& g, int u, int v);

int local_connectivity(const Graph& g, Mode mode, int u, int v);

// Exact global (vertex or edge) connectivity. Vertex mode runs flows only
// for a minimum-degree vertex v against its non-neighbours plus nonadjacent
// pairs inside N(v): every minimum separator is caught by one of those
// pairs, and a complete graph falls back to n - 1. Requires order >= 2.
int global_connectivity(const Graph& g, Mode mode);

struct PairConnectivityReport {
  Mode mode = Mode::vertex;
  int n = 0;
  std::vector<int> values;  // indexed by pair_index(u, v)
  long long total = 0;      // sum over unordered pairs
  Rational average;         // total / C(n, 2)
  int global = 0;           // min over pairs; equals global_connectivity(g, mode)

  int value(int u, int v) const { return values[pair_index(u, v)]; }
};

struct ReportOptions {
  int threads = 0;
  // When set, pairs whose smaller endpoint degree equals the global
  // connectivity are filled in without a flow call (the value is squeezed:
  // global <= local <= min degree). Sound for every graph; flows still run
  // for all other pairs.
  bool degree_shortcut = false;
};

PairConnectivityReport all_pairs_report(const Graph& g, Mode mode, const ReportOptions& opts = {});

// JSON object with mode, n, global, total/average as {num, den}, and sorted
// [u, v, value] triples. Key order is fixed, so equal inputs give equal bytes.
std::string report_to_json(const PairConnectivityReport& report);
// "u,v,value" rows after a header line.
std::string report_to_csv(const PairConnectivityReport& report);

struct MinimalityResult {
  bool minimal = false;
  int global = 0;  // connectivity of the input graph
  // An edge whose removal keeps connectivity >= k (witness when the graph is
  // k-connected but not minimally so).
  std::optional<std::pair<int, int>> slack_edge;
};

// Checks connectivity == k and that deleting any single edge drops it below
// k. The default recomputes global connectivity per edge deletion; the
// endpoint shortcut instead tests only the deleted edge's own pair, which is
// equivalent (tests assert this against the safe path on the exhaustive
// small-order corpus).
MinimalityResult is_minimally_k_connected(const Graph& g, int k, Mode mode,
                                          bool endpoint_shortcut = false);

// True when the graph is bipartite with parts exactly {deg == k} and
// {deg > k}, both nonempty. A vertex of degree < k is a contract violation.
bool is_degree_partitioned(const Graph& g, int k);

}  // namespace avgconn
