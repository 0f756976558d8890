#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace avgconn {

// Strictly increasing list of vertex ids.
using VertexSet = std::vector<int>;

bool is_vertex_set(const VertexSet& s);
// Throws std::invalid_argument unless s is strictly increasing and within [0, n).
void validate_vertex_set(const VertexSet& s, int n, const char* what);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);

// Structured vertex labels for the constructed families: a block tag plus an
// index within the block. Families with three same-stride blocks use X, Y, Z
// for their second, third and fourth blocks.
enum class Block : std::uint8_t { W, X, Y, Z };

char block_letter(Block b);

struct VertexLabel {
  Block block;
  int index;
  bool operator==(const VertexLabel& o) const { return block == o.block && index == o.index; }
};

// Flat pair index for u < v in an n-vertex graph: column-major upper triangle,
// the same order the graph6 encoding walks.
inline int pair_index(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}
inline long long pair_count(long long n) { return n * (n - 1) / 2; }

// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency
// lists. All mutating operations return a new graph.
class Graph {
 public:
  Graph() = default;

  // Validates everything: ids in range, no self-loops, no duplicate edges
  // (in either orientation). Throws std::invalid_argument on violations.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return m_; }
  const std::vector<int>& neighbours(int v) const;
  int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
  bool has_edge(int u, int v) const;
  int min_degree() const;
  int max_degree() const;
  std::vector<int> degrees() const;
  // Sorted pairs (u, v) with u < v.
  std::vector<std::pair<int, int>> edge_list() const;

  bool is_connected() const;
  // Component of `start` in the graph with `removed` vertices deleted.
  VertexSet component_of(int start, const std::vector<bool>& removed) const;
  // Two-colouring if one exists; for disconnected graphs each component's
  // side containing its smallest vertex goes into the first part, so the
  // result is deterministic.
  std::optional<std::pair<VertexSet, VertexSet>> bipartition() const;

  Graph add_edge(int u, int v) const;
  Graph delete_edge(int u, int v) const;
  Graph delete_vertices(const VertexSet& s) const;

  struct Induced;  // defined after the class; holds the subgraph + id remaps
  Induced induced_subgraph(const VertexSet& keep) const;

  const std::optional<std::vector<VertexLabel>>& labels() const { return labels_; }
  // Labels must cover every vertex exactly once with distinct (block, index).
  Graph with_labels(std::vector<VertexLabel> labels) const;

  // Structural equality: order and adjacency (labels not compared).
  bool operator==(const Graph& o) const { return adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
  std::optional<std::vector<VertexLabel>> labels_;

  void check_vertex(int v, const char* what) const;
};

struct Graph::Induced {
  Graph graph;
  std::vector<int> old_of_new;  // new id -> original id
  std::vector<int> new_of_old;  // original id -> new id, -1 if dropped
};

VertexSet neighbourhood(const Graph& g, int v);
VertexSet neighbourhood(const Graph& g, const VertexSet& vs);  // N(S), excludes S itself

}  // namespace avgconn
