#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avgconn/connectivity.hpp"
#include "avgconn/graph.hpp"
#include "avgconn/graph_io.hpp"
#include "avgconn/rational.hpp"

namespace avgconn {

// Graphs on n <= 11 vertices pack into a bitmask over pair_index positions.
std::uint64_t graph_to_mask(const Graph& g);
Graph mask_to_graph(std::uint64_t mask, int n);

// Reference canonical form: minimum of the edge bitmask over all n!
// relabelings. Deliberately brute force; n is capped at 7 (5040
// permutations) to keep it exact and honest.
std::uint64_t canonical_mask(std::uint64_t mask, int n);

// One representative per isomorphism class, built by extending each class on
// n-1 vertices with a new vertex in every possible attachment and
// deduplicating via canonical_mask. Sorted by canonical mask.
std::vector<std::uint64_t> enumerate_graph_classes(int n);

// Connected classes only, as graphs. n <= 7; larger orders must come from an
// ingested generator file instead.
std::vector<Graph> enumerate_connected_graphs(int n);

struct IngestOptions {
  bool stop_on_error = true;
};

// graph6 stream from an external isomorph-free generator. No dedup is
// performed (the generator is trusted); bad lines abort or are collected per
// the options.
Graph6File ingest_graph6(const std::string& path, const IngestOptions& opts = {});

struct SearchReport {
  int n = 0;
  int k = 0;
  Mode mode = Mode::vertex;
  long long count_candidates = 0;  // connected classes examined
  long long count_minimal = 0;     // minimally k-connected survivors
  std::optional<Rational> best_value;
  std::vector<std::string> optima;  // graph6, sorted, isomorph-free
  bool all_optima_degree_partitioned = false;
  // best_value <= kappa_bar_upper(k, n); only meaningful when the optima are
  // degree-partitioned and n >= 2k + 1, absent otherwise.
  std::optional<bool> bound_satisfied;
};

// Maximum average connectivity among minimally k-connected graphs in the
// candidate list (every candidate must have order n).
SearchReport find_optimal(int n, int k, Mode mode, const std::vector<Graph>& candidates,
                          int threads = 0);
SearchReport find_optimal_native(int n, int k, Mode mode, int threads = 0);

struct EvidenceResult {
  std::vector<SearchReport> reports;
  bool consistent = true;         // every optimum over the range is degree-partitioned
  std::string counterexample;     // graph6 of the first violation, if any
};

EvidenceResult conjecture_evidence(int k, int n_lo, int n_hi, Mode mode, int threads = 0);

std::string search_report_to_json(const SearchReport& report);
std::string evidence_to_json(const EvidenceResult& evidence);

}  // namespace avgconn
