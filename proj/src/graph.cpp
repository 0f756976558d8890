#include "avgconn/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace avgconn {

bool is_vertex_set(const VertexSet& s) {
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) return false;
  }
  return true;
}

void validate_vertex_set(const VertexSet& s, int n, const char* what) {
  if (!is_vertex_set(s)) throw std::invalid_argument(std::string(what) + ": not strictly increasing");
  if (!s.empty() && (s.front() < 0 || s.back() >= n)) {
    throw std::invalid_argument(std::string(what) + ": vertex id out of range");
  }
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

char block_letter(Block b) {
  switch (b) {
    case Block::W: return 'w';
    case Block::X: return 'x';
    case Block::Y: return 'y';
    case Block::Z: return 'z';
  }
  throw std::logic_error("bad block tag");
}

void Graph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= order()) throw std::invalid_argument(std::string(what) + ": vertex id out of range");
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("from_edge_list: negative order");
  Graph g;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("from_edge_list: vertex id out of range");
    }
    if (u == v) throw std::invalid_argument("from_edge_list: self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw std::invalid_argument("from_edge_list: duplicate edge");
    }
  }
  g.m_ = static_cast<int>(edges.size());
  return g;
}

const std::vector<int>& Graph::neighbours(int v) const {
  check_vertex(v, "neighbours");
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u, "has_edge");
  check_vertex(v, "has_edge");
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::min_degree() const {
  if (order() == 0) throw std::invalid_argument("min_degree of empty graph");
  int d = order();
  for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(order());
  for (int v = 0; v < order(); ++v) out[v] = static_cast<int>(adj_[v].size());
  return out;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::component_of(int start, const std::vector<bool>& removed) const {
  check_vertex(start, "component_of");
  if (static_cast<int>(removed.size()) != order()) {
    throw std::invalid_argument("component_of: removed mask has wrong size");
  }
  if (removed[start]) throw std::invalid_argument("component_of: start vertex removed");
  std::vector<bool> seen(order(), false);
  seen[start] = true;
  std::queue<int> q;
  q.push(start);
  VertexSet comp;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    comp.push_back(v);
    for (int w : adj_[v]) {
      if (!seen[w] && !removed[w]) {
        seen[w] = true;
        q.push(w);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  std::vector<bool> removed(order(), false);
  return static_cast<int>(component_of(0, removed).size()) == order();
}

std::optional<std::pair<VertexSet, VertexSet>> Graph::bipartition() const {
  std::vector<int> colour(order(), -1);
  VertexSet a, b;
  for (int root = 0; root < order(); ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;  // root is the smallest vertex of its component
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      (colour[v] == 0 ? a : b).push_back(v);
      for (int w : adj_[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::make_pair(std::move(a), std::move(b));
}

Graph Graph::add_edge(int u, int v) const {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("add_edge: edge already present");
  Graph g = *this;
  g.adj_[u].insert(std::upper_bound(g.adj_[u].begin(), g.adj_[u].end(), v), v);
  g.adj_[v].insert(std::upper_bound(g.adj_[v].begin(), g.adj_[v].end(), u), u);
  g.m_ += 1;
  return g;
}

Graph Graph::delete_edge(int u, int v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("delete_edge: edge not present");
  Graph g = *this;
  auto erase_from = [](std::vector<int>& nb, int x) {
    nb.erase(std::lower_bound(nb.begin(), nb.end(), x));
  };
  erase_from(g.adj_[u], v);
  erase_from(g.adj_[v], u);
  g.m_ -= 1;
  return g;
}

Graph::Induced Graph::induced_subgraph(const VertexSet& keep) const {
  validate_vertex_set(keep, order(), "induced_subgraph");
  Induced out;
  out.old_of_new = keep;
  out.new_of_old.assign(order(), -1);
  for (size_t i = 0; i < keep.size(); ++i) out.new_of_old[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int u : keep) {
    for (int v : adj_[u]) {
      if (u < v && out.new_of_old[v] != -1) {
        edges.emplace_back(out.new_of_old[u], out.new_of_old[v]);
      }
    }
  }
  out.graph = from_edge_list(static_cast<int>(keep.size()), edges);
  if (labels_) {
    std::vector<VertexLabel> kept;
    kept.reserve(keep.size());
    for (int v : keep) kept.push_back((*labels_)[v]);
    out.graph = out.graph.with_labels(std::move(kept));
  }
  return out;
}

Graph Graph::delete_vertices(const VertexSet& s) const {
  validate_vertex_set(s, order(), "delete_vertices");
  VertexSet keep;
  keep.reserve(order() - s.size());
  for (int v = 0; v < order(); ++v) {
    if (!set_contains(s, v)) keep.push_back(v);
  }
  return induced_subgraph(keep).graph;
}

Graph Graph::with_labels(std::vector<VertexLabel> labels) const {
  if (static_cast<int>(labels.size()) != order()) {
    throw std::invalid_argument("with_labels: label count differs from order");
  }
  std::vector<std::pair<int, int>> keys;
  keys.reserve(labels.size());
  for (const auto& l : labels) keys.emplace_back(static_cast<int>(l.block), l.index);
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("with_labels: duplicate label");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

VertexSet neighbourhood(const Graph& g, int v) { return g.neighbours(v); }

VertexSet neighbourhood(const Graph& g, const VertexSet& vs) {
  validate_vertex_set(vs, g.order(), "neighbourhood");
  std::vector<bool> in(g.order(), false), out(g.order(), false);
  for (int v : vs) in[v] = true;
  for (int v : vs) {
    for (int w : g.neighbours(v)) {
      if (!in[w]) out[w] = true;
    }
  }
  VertexSet res;
  for (int v = 0; v < g.order(); ++v) {
    if (out[v]) res.push_back(v);
  }
  return res;
}

}  // namespace avgconn
