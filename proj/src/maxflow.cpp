#include "avgconn/maxflow.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace avgconn {

MaxFlow::MaxFlow(int node_count) : head_(node_count) {
  if (node_count <= 0) throw std::invalid_argument("MaxFlow: node count must be positive");
}

int MaxFlow::add_arc(int from, int to, int cap, int rev_cap) {
  if (from < 0 || from >= node_count() || to < 0 || to >= node_count()) {
    throw std::invalid_argument("MaxFlow: arc endpoint out of range");
  }
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, cap});
  arcs_.push_back({from, rev_cap});
  original_cap_.push_back(cap);
  original_cap_.push_back(rev_cap);
  head_[from].push_back(id);
  head_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::bfs() {
  level_.assign(node_count(), -1);
  std::queue<int> q;
  level_[source_] = 0;
  q.push(source_);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int id : head_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && level_[a.to] == -1) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[sink_] != -1;
}

int MaxFlow::dfs(int v, int limit) {
  if (v == sink_) return limit;
  for (size_t& i = iter_[v]; i < head_[v].size(); ++i) {
    int id = head_[v][i];
    Arc& a = arcs_[id];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    int pushed = dfs(a.to, std::min(limit, a.cap));
    if (pushed > 0) {
      a.cap -= pushed;
      arcs_[id ^ 1].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

int MaxFlow::run(int source, int sink) {
  if (source == sink) throw std::invalid_argument("MaxFlow: source equals sink");
  source_ = source;
  sink_ = sink;
  int total = 0;
  while (bfs()) {
    iter_.assign(node_count(), 0);
    while (int pushed = dfs(source_, kInf)) total += pushed;
  }
  return total;
}

int MaxFlow::flow(int arc_id) const { return original_cap_[arc_id] - arcs_[arc_id].cap; }

void MaxFlow::drain_unit(int arc_id) {
  if (flow(arc_id) <= 0) throw std::logic_error("MaxFlow: draining arc without flow");
  arcs_[arc_id].cap += 1;
  arcs_[arc_id ^ 1].cap -= 1;
}

std::vector<bool> MaxFlow::source_side() const {
  if (source_ < 0) throw std::logic_error("MaxFlow: source_side before run");
  std::vector<bool> seen(node_count(), false);
  std::queue<int> q;
  seen[source_] = true;
  q.push(source_);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int id : head_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = true;
        q.push(a.to);
      }
    }
  }
  return seen;
}

}  // namespace avgconn
