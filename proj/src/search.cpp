#include "avgconn/search.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "avgconn/bounds.hpp"
#include "avgconn/parallel.hpp"

namespace avgconn {
namespace {

constexpr int kNativeLimit = 7;

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// pair_index remap tables for every permutation of 0..n-1.
std::vector<std::vector<int>> pair_remaps(int n) {
  auto perms = permutations_of(n);
  std::vector<std::vector<int>> tables;
  tables.reserve(perms.size());
  const int pairs = static_cast<int>(pair_count(n));
  for (const auto& perm : perms) {
    std::vector<int> table(pairs);
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) table[pair_index(u, v)] = pair_index(perm[u], perm[v]);
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

std::uint64_t remap_mask(std::uint64_t mask, const std::vector<int>& table) {
  std::uint64_t out = 0;
  while (mask) {
    int bit = __builtin_ctzll(mask);
    mask &= mask - 1;
    out |= 1ULL << table[bit];
  }
  return out;
}

std::uint64_t canonical_with_tables(std::uint64_t mask, const std::vector<std::vector<int>>& tables) {
  std::uint64_t best = ~0ULL;
  for (const auto& table : tables) best = std::min(best, remap_mask(mask, table));
  return best;
}

bool mask_connected(std::uint64_t mask, int n) {
  if (n <= 1) return true;
  std::vector<std::uint64_t> adj(n, 0);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (mask >> pair_index(u, v) & 1) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
      }
    }
  }
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    int v = __builtin_ctzll(frontier);
    frontier &= frontier - 1;
    std::uint64_t fresh = adj[v] & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == (1ULL << n) - 1;
}

struct Candidate {
  Rational value;
  Graph graph;
};

// graph6 uses ASCII 63..126, which includes the backslash.
std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::uint64_t graph_to_mask(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("graph_to_mask: order too large for a mask");
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edge_list()) mask |= 1ULL << pair_index(u, v);
  return mask;
}

Graph mask_to_graph(std::uint64_t mask, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (mask >> pair_index(u, v) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::uint64_t canonical_mask(std::uint64_t mask, int n) {
  if (n > kNativeLimit) {
    throw std::invalid_argument("canonical_mask: n exceeds the brute-force limit");
  }
  return canonical_with_tables(mask, pair_remaps(n));
}

std::vector<std::uint64_t> enumerate_graph_classes(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_graph_classes: n must be positive");
  if (n > kNativeLimit) {
    throw std::invalid_argument("enumerate_graph_classes: n exceeds the native limit, ingest instead");
  }
  std::vector<std::uint64_t> classes = {0};  // the single graph on one vertex
  for (int t = 2; t <= n; ++t) {
    auto tables = pair_remaps(t);
    const int base = static_cast<int>(pair_count(t - 1));
    std::vector<std::uint64_t> candidates;
    candidates.reserve(classes.size() << (t - 1));
    for (std::uint64_t h : classes) {
      for (std::uint64_t attach = 0; attach < (1ULL << (t - 1)); ++attach) {
        candidates.push_back(h | (attach << base));
      }
    }
    std::vector<std::uint64_t> canon(candidates.size());
    parallel_for(static_cast<int>(candidates.size()), 0, [&](int i) {
      canon[i] = canonical_with_tables(candidates[i], tables);
    });
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    classes = std::move(canon);
  }
  return classes;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for (std::uint64_t mask : enumerate_graph_classes(n)) {
    if (mask_connected(mask, n)) out.push_back(mask_to_graph(mask, n));
  }
  return out;
}

Graph6File ingest_graph6(const std::string& path, const IngestOptions& opts) {
  return read_graph6_file(path, opts.stop_on_error);
}

SearchReport find_optimal(int n, int k, Mode mode, const std::vector<Graph>& candidates,
                          int threads) {
  if (n < k + 1) throw std::invalid_argument("find_optimal: need n >= k + 1");
  SearchReport report;
  report.n = n;
  report.k = k;
  report.mode = mode;
  report.count_candidates = static_cast<long long>(candidates.size());

  std::vector<std::optional<Rational>> values(candidates.size());
  parallel_for(static_cast<int>(candidates.size()), threads, [&](int i) {
    const Graph& g = candidates[i];
    if (g.order() != n) throw std::invalid_argument("find_optimal: candidate of wrong order");
    if (g.min_degree() < k) return;
    if (!is_minimally_k_connected(g, k, mode).minimal) return;
    values[i] = all_pairs_report(g, mode, {.threads = 1}).average;
  });

  std::vector<Candidate> optima;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (!values[i]) continue;
    report.count_minimal += 1;
    if (!report.best_value || *report.best_value < *values[i]) {
      report.best_value = values[i];
      optima.clear();
    }
    if (*values[i] == *report.best_value) {
      optima.push_back({*values[i], candidates[i]});
    }
  }

  report.all_optima_degree_partitioned = !optima.empty();
  for (auto& c : optima) {
    // Survivors are k-connected, so min degree >= k and the predicate's
    // contract holds.
    if (!is_degree_partitioned(c.graph, k)) report.all_optima_degree_partitioned = false;
    if (!is_minimally_k_connected(c.graph, k, mode).minimal) {
      throw std::logic_error("find_optimal: optimum failed re-verification");
    }
  }
  std::vector<std::string> encoded;
  encoded.reserve(optima.size());
  for (const auto& c : optima) encoded.push_back(encode_graph6(c.graph));
  std::sort(encoded.begin(), encoded.end());
  encoded.erase(std::unique(encoded.begin(), encoded.end()), encoded.end());
  report.optima = std::move(encoded);

  if (!optima.empty() && report.all_optima_degree_partitioned && n >= 2 * k + 1 && k >= 2) {
    report.bound_satisfied = *report.best_value <= kappa_bar_upper(k, n);
  }
  return report;
}

SearchReport find_optimal_native(int n, int k, Mode mode, int threads) {
  return find_optimal(n, k, mode, enumerate_connected_graphs(n), threads);
}

EvidenceResult conjecture_evidence(int k, int n_lo, int n_hi, Mode mode, int threads) {
  if (n_lo > n_hi) throw std::invalid_argument("conjecture_evidence: empty order range");
  if (n_lo < 2 * k + 1) {
    throw std::invalid_argument("conjecture_evidence: the claim needs n >= 2k + 1");
  }
  EvidenceResult out;
  for (int n = n_lo; n <= n_hi; ++n) {
    SearchReport report = find_optimal_native(n, k, mode, threads);
    if (!report.optima.empty() && !report.all_optima_degree_partitioned && out.consistent) {
      out.consistent = false;
      for (const auto& g6 : report.optima) {
        if (!is_degree_partitioned(decode_graph6(g6), k)) {
          out.counterexample = g6;
          break;
        }
      }
    }
    out.reports.push_back(std::move(report));
  }
  return out;
}

std::string search_report_to_json(const SearchReport& report) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"n\": " << report.n << ",\n";
  os << "  \"k\": " << report.k << ",\n";
  os << "  \"mode\": \"" << mode_name(report.mode) << "\",\n";
  os << "  \"count_candidates\": " << report.count_candidates << ",\n";
  os << "  \"count_minimal\": " << report.count_minimal << ",\n";
  os << "  \"best_value\": ";
  if (report.best_value) {
    os << "{\"num\": " << report.best_value->num() << ", \"den\": " << report.best_value->den()
       << "}";
  } else {
    os << "null";
  }
  os << ",\n  \"optima\": [";
  for (size_t i = 0; i < report.optima.size(); ++i) {
    if (i) os << ", ";
    os << json_quote(report.optima[i]);
  }
  os << "],\n";
  os << "  \"all_optima_degree_partitioned\": "
     << (report.all_optima_degree_partitioned ? "true" : "false") << ",\n";
  os << "  \"bound_satisfied\": ";
  if (report.bound_satisfied) {
    os << (*report.bound_satisfied ? "true" : "false");
  } else {
    os << "null";
  }
  os << "\n}\n";
  return os.str();
}

std::string evidence_to_json(const EvidenceResult& evidence) {
  std::ostringstream os;
  os << "{\n  \"consistent\": " << (evidence.consistent ? "true" : "false") << ",\n";
  os << "  \"counterexample\": ";
  if (evidence.counterexample.empty()) {
    os << "null";
  } else {
    os << json_quote(evidence.counterexample);
  }
  os << ",\n  \"reports\": [\n";
  for (size_t i = 0; i < evidence.reports.size(); ++i) {
    std::istringstream is(search_report_to_json(evidence.reports[i]));
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
      if (!first) os << '\n';
      os << "    " << line;
      first = false;
    }
    if (i + 1 < evidence.reports.size()) os << ',';
    os << '\n';
  }
  os << "  ]\n}\n";
  return os.str();
}

}  // namespace avgconn
