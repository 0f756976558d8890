#pragma once

#include <vector>

namespace avgconn {

// Dinic max flow over int capacities. Arcs are scanned in insertion order and
// ties always break towards the lowest arc id, so flows (and the path
// decompositions built on top of them) are reproducible.
class MaxFlow {
 public:
  static constexpr int kInf = 1 << 29;

  explicit MaxFlow(int node_count);

  // Adds from->to with capacity cap and the paired reverse arc with rev_cap
  // (0 for a plain directed arc, cap for an undirected unit edge). Returns
  // the forward arc id; the reverse arc is id ^ 1.
  int add_arc(int from, int to, int cap, int rev_cap = 0);

  int node_count() const { return static_cast<int>(head_.size()); }
  int run(int source, int sink);

  // Flow currently on an arc (original capacity minus residual).
  int flow(int arc_id) const;
  int arc_to(int arc_id) const { return arcs_[arc_id].to; }
  // Takes one unit off an arc (used by path decomposition).
  void drain_unit(int arc_id);
  const std::vector<int>& arcs_from(int node) const { return head_[node]; }

  // After run(): nodes reachable from the source in the residual network,
  // i.e. the source side of a minimum cut.
  std::vector<bool> source_side() const;

 private:
  struct Arc {
    int to;
    int cap;
  };

  bool bfs();
  int dfs(int v, int limit);

  std::vector<Arc> arcs_;
  std::vector<int> original_cap_;
  std::vector<std::vector<int>> head_;
  std::vector<int> level_;
  std::vector<size_t> iter_;
  int source_ = -1;
  int sink_ = -1;
};

}  // namespace avgconn
