#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "avgconn/graph.hpp"

namespace avgconn {

// graph6: 6-bit printable encoding of the upper adjacency triangle in
// column-major order. Encoding picks the shortest size class for n
// (1 byte for n <= 62, '~' + 3 bytes to 258047, '~~' + 6 bytes beyond);
// decoding accepts all three. Both directions are bit-exact: malformed
// characters, truncated payloads and trailing bytes are errors.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view line);

// Plain text edge list: "n m" header line, then one "u v" pair per line.
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(std::string_view text);

// Graphviz export; vertex labels become node labels when present.
std::string to_dot(const Graph& g);

struct LineError {
  int line_no;  // 1-based
  std::string message;
};

struct Graph6File {
  std::vector<Graph> graphs;
  std::vector<LineError> errors;
};

// Reads one graph6 value per line; blank lines and an optional ">>graph6<<"
// header are skipped. With stop_on_error the first bad line throws
// std::runtime_error; otherwise bad lines are collected and skipped.
Graph6File read_graph6_file(const std::string& path, bool stop_on_error = true);

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

// Writes via a temporary file in the same directory plus an atomic rename,
// so readers never observe a partial report.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace avgconn
