#include "avgconn/connectivity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "avgconn/maxflow.hpp"
#include "avgconn/parallel.hpp"

namespace avgconn {
namespace {

void check_pair(const Graph& g, int u, int v, const char* what) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw std::invalid_argument(std::string(what) + ": vertex id out of range");
  }
  if (u == v) throw std::invalid_argument(std::string(what) + ": identical endpoints");
}

// Builds the standard vertex-split network: v -> in 2v, out 2v+1, split arc
// capacity 1, edge arcs capacity +inf in both directions.
MaxFlow split_network(const Graph& g) {
  MaxFlow net(2 * g.order());
  for (int v = 0; v < g.order(); ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (auto [a, b] : g.edge_list()) {
    net.add_arc(2 * a + 1, 2 * b, MaxFlow::kInf);
    net.add_arc(2 * b + 1, 2 * a, MaxFlow::kInf);
  }
  return net;
}

int vertex_flow(const Graph& g, int u, int v) {
  MaxFlow net = split_network(g);
  return net.run(2 * u + 1, 2 * v);
}

}  // namespace

const char* mode_name(Mode m) { return m == Mode::vertex ? "vertex" : "edge"; }

Mode mode_from_name(const std::string& name) {
  if (name == "vertex") return Mode::vertex;
  if (name == "edge") return Mode::edge;
  throw std::invalid_argument("unknown mode: " + name);
}

int local_vertex_connectivity(const Graph& g, int u, int v) {
  check_pair(g, u, v, "local_vertex_connectivity");
  if (g.has_edge(u, v)) return 1 + vertex_flow(g.delete_edge(u, v), u, v);
  return vertex_flow(g, u, v);
}

int local_edge_connectivity(const Graph& g, int u, int v) {
  check_pair(g, u, v, "local_edge_connectivity");
  MaxFlow net(g.order());
  for (auto [a, b] : g.edge_list()) net.add_arc(a, b, 1, 1);
  return net.run(u, v);
}

int local_connectivity(const Graph& g, Mode mode, int u, int v) {
  return mode == Mode::vertex ? local_vertex_connectivity(g, u, v)
                              : local_edge_connectivity(g, u, v);
}

int global_connectivity(const Graph& g, Mode mode) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("global_connectivity: order < 2");
  if (mode == Mode::edge) {
    int best = g.min_degree();
    for (int v = 1; v < n; ++v) {
      best = std::min(best, local_edge_connectivity(g, 0, v));
      if (best == 0) break;
    }
    return best;
  }
  int pivot = 0;
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(pivot)) pivot = v;
  }
  int best = n - 1;  // complete-graph fallback; also caps at min degree below
  best = std::min(best, g.min_degree());
  const auto& nb = g.neighbours(pivot);
  for (int v = 0; v < n && best > 0; ++v) {
    if (v == pivot || g.has_edge(pivot, v)) continue;
    best = std::min(best, vertex_flow(g, pivot, v));
  }
  for (size_t i = 0; i < nb.size() && best > 0; ++i) {
    for (size_t j = i + 1; j < nb.size() && best > 0; ++j) {
      if (g.has_edge(nb[i], nb[j])) continue;
      best = std::min(best, vertex_flow(g, nb[i], nb[j]));
    }
  }
  return best;
}

PairConnectivityReport all_pairs_report(const Graph& g, Mode mode, const ReportOptions& opts) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("all_pairs_report: order < 2");
  PairConnectivityReport report;
  report.mode = mode;
  report.n = n;
  report.values.assign(pair_count(n), -1);

  std::optional<int> shortcut_value;
  if (opts.degree_shortcut) shortcut_value = global_connectivity(g, mode);

  struct Pair {
    int u, v;
  };
  std::vector<Pair> todo;
  todo.reserve(report.values.size());
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (shortcut_value && std::min(g.degree(u), g.degree(v)) == *shortcut_value) {
        report.values[pair_index(u, v)] = *shortcut_value;
      } else {
        todo.push_back({u, v});
      }
    }
  }
  parallel_for(static_cast<int>(todo.size()), opts.threads, [&](int i) {
    auto [u, v] = todo[i];
    report.values[pair_index(u, v)] = local_connectivity(g, mode, u, v);
  });

  report.total = 0;
  report.global = n;
  for (int value : report.values) {
    report.total += value;
    report.global = std::min(report.global, value);
  }
  report.average = Rational(report.total, pair_count(n));
  return report;
}

std::string report_to_json(const PairConnectivityReport& report) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"mode\": \"" << mode_name(report.mode) << "\",\n";
  os << "  \"n\": " << report.n << ",\n";
  os << "  \"global\": " << report.global << ",\n";
  os << "  \"total\": {\"num\": " << report.total << ", \"den\": 1},\n";
  os << "  \"average\": {\"num\": " << report.average.num() << ", \"den\": " << report.average.den()
     << "},\n";
  os << "  \"pairs\": [";
  bool first = true;
  for (int v = 1; v < report.n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (!first) os << ", ";
      first = false;
      os << "[" << u << ", " << v << ", " << report.value(u, v) << "]";
    }
  }
  os << "]\n}\n";
  return os.str();
}

std::string report_to_csv(const PairConnectivityReport& report) {
  std::ostringstream os;
  os << "u,v,value\n";
  for (int v = 1; v < report.n; ++v) {
    for (int u = 0; u < v; ++u) os << u << ',' << v << ',' << report.value(u, v) << '\n';
  }
  return os.str();
}

MinimalityResult is_minimally_k_connected(const Graph& g, int k, Mode mode,
                                          bool endpoint_shortcut) {
  if (k < 1) throw std::invalid_argument("is_minimally_k_connected: k must be >= 1");
  if (g.order() < 2) throw std::invalid_argument("is_minimally_k_connected: order < 2");
  MinimalityResult result;
  result.global = global_connectivity(g, mode);
  if (result.global != k) return result;  // minimal=false, witness is the value itself
  for (auto [u, v] : g.edge_list()) {
    Graph h = g.delete_edge(u, v);
    bool drops;
    if (endpoint_shortcut) {
      drops = local_connectivity(h, mode, u, v) < k;
    } else {
      drops = global_connectivity(h, mode) < k;
    }
    if (!drops) {
      result.slack_edge = {u, v};
      return result;
    }
  }
  result.minimal = true;
  return result;
}

bool is_degree_partitioned(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("is_degree_partitioned: k must be >= 1");
  VertexSet low, high;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d < k) throw std::invalid_argument("is_degree_partitioned: vertex of degree < k");
    (d == k ? low : high).push_back(v);
  }
  if (low.empty() || high.empty()) return false;
  // Bipartite with parts exactly {deg == k} and {deg > k}: no edge may stay
  // inside either part.
  for (auto [u, v] : g.edge_list()) {
    if ((g.degree(u) == k) == (g.degree(v) == k)) return false;
  }
  return true;
}

}  // namespace avgconn
