#include "avgconn/path_witness.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "avgconn/maxflow.hpp"

namespace avgconn {
namespace {

int mod(long long value, int p) {
  long long m = value % p;
  if (m < 0) m += p;
  return static_cast<int>(m);
}

void check_window(const Window& w, int p) {
  if (w.lo > w.hi) throw std::invalid_argument("window: lo > hi");
  if (w.hi - w.lo + 1 > p) throw std::invalid_argument("window: wider than the cycle");
}

void check_psi(const ConstructionSpec& spec) {
  if (spec.family != Family::psi) {
    throw std::invalid_argument("path witness stages require a psi instance");
  }
}

}  // namespace

bool window_contains(const Window& w, int p, int vertex_index) {
  check_window(w, p);
  // Some integer i in [lo, hi] reduces to vertex_index mod p exactly when
  // the index lands within the first (hi - lo + 1) residues above lo.
  return mod(vertex_index - w.lo, p) <= w.hi - w.lo;
}

VertexSet window_vertices(const Graph& g, const Window& w) {
  const int p = block_size(g);
  check_window(w, p);
  const int blocks = g.order() / p;
  VertexSet out;
  out.reserve(static_cast<size_t>(blocks) * (w.hi - w.lo + 1));
  for (int b = 0; b < blocks; ++b) {
    for (long long i = w.lo; i <= w.hi; ++i) out.push_back(b * p + mod(i, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> path_system_violations(const Graph& g, const PathSystem& sys) {
  std::vector<std::string> out;
  std::optional<VertexSet> allowed;
  if (sys.window) allowed = window_vertices(g, *sys.window);
  std::vector<int> touch(g.order(), 0);
  std::vector<bool> endpoint_only(g.order(), true);
  for (size_t pi = 0; pi < sys.paths.size(); ++pi) {
    const auto& path = sys.paths[pi];
    std::string tag = "path " + std::to_string(pi);
    if (path.empty()) {
      out.push_back(tag + ": empty");
      continue;
    }
    std::vector<bool> seen(g.order(), false);
    for (size_t i = 0; i < path.size(); ++i) {
      int v = path[i];
      if (v < 0 || v >= g.order()) {
        out.push_back(tag + ": vertex out of range");
        break;
      }
      if (seen[v]) out.push_back(tag + ": repeats vertex " + std::to_string(v));
      seen[v] = true;
      if (allowed && !set_contains(*allowed, v)) {
        out.push_back(tag + ": vertex " + std::to_string(v) + " outside window");
      }
      if (i > 0 && !g.has_edge(path[i - 1], v)) {
        out.push_back(tag + ": " + std::to_string(path[i - 1]) + "-" + std::to_string(v) +
                      " is not an edge");
      }
      touch[v] += 1;
      if (i != 0 && i + 1 != path.size()) endpoint_only[v] = false;
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (touch[v] <= 1) continue;
    if (!set_contains(sys.shared_endpoints, v)) {
      out.push_back("vertex " + std::to_string(v) + " shared by " + std::to_string(touch[v]) +
                    " paths but not a declared shared endpoint");
    } else if (!endpoint_only[v]) {
      out.push_back("shared vertex " + std::to_string(v) + " used as an interior vertex");
    }
  }
  return out;
}

std::optional<PathSystem> max_disjoint_paths(const Graph& g, int source, const VertexSet& targets,
                                             int demand, std::optional<Window> window) {
  if (demand <= 0) throw std::invalid_argument("max_disjoint_paths: demand must be positive");
  if (source < 0 || source >= g.order()) {
    throw std::invalid_argument("max_disjoint_paths: source out of range");
  }
  validate_vertex_set(targets, g.order(), "max_disjoint_paths targets");
  if (targets.empty()) throw std::invalid_argument("max_disjoint_paths: no targets");
  if (set_contains(targets, source)) {
    throw std::invalid_argument("max_disjoint_paths: source is a target");
  }
  const bool single_target = targets.size() == 1;
  if (!single_target && demand > static_cast<int>(targets.size())) {
    throw std::invalid_argument("max_disjoint_paths: demand exceeds target count");
  }

  // Work on the window-induced subgraph when a window is set.
  Graph::Induced induced;
  const Graph* work = &g;
  std::vector<int> to_old;
  int src = source;
  VertexSet tgts = targets;
  if (window) {
    VertexSet keep = window_vertices(g, *window);
    if (!set_contains(keep, source)) {
      throw std::invalid_argument("max_disjoint_paths: source outside window");
    }
    for (int t : targets) {
      if (!set_contains(keep, t)) {
        throw std::invalid_argument("max_disjoint_paths: target outside window");
      }
    }
    induced = g.induced_subgraph(keep);
    work = &induced.graph;
    to_old = induced.old_of_new;
    src = induced.new_of_old[source];
    for (auto& t : tgts) t = induced.new_of_old[t];
    std::sort(tgts.begin(), tgts.end());
  }

  const int n = work->order();
  const int sink = 2 * n;  // super sink after the split nodes
  MaxFlow net(2 * n + 1);
  for (int v = 0; v < n; ++v) {
    int cap = 1;
    if (v == src) cap = demand;
    if (set_contains(tgts, v)) cap = single_target ? demand : 1;
    net.add_arc(2 * v, 2 * v + 1, cap);
  }
  for (auto [a, b] : work->edge_list()) {
    net.add_arc(2 * a + 1, 2 * b, MaxFlow::kInf);
    net.add_arc(2 * b + 1, 2 * a, MaxFlow::kInf);
  }
  for (int t : tgts) net.add_arc(2 * t + 1, sink, single_target ? demand : 1);

  int value = net.run(2 * src + 1, sink);
  if (value < demand) return std::nullopt;
  if (value > demand) throw std::logic_error("max_disjoint_paths: flow exceeds demand cap");

  // Unit vertex capacities make the decomposition a plain walk: follow the
  // lowest-id positive-flow arc until the sink, draining as we go.
  PathSystem sys;
  sys.window = window;
  sys.shared_endpoints.push_back(source);
  if (single_target) sys.shared_endpoints.push_back(targets[0]);
  std::sort(sys.shared_endpoints.begin(), sys.shared_endpoints.end());
  sys.shared_endpoints.erase(std::unique(sys.shared_endpoints.begin(), sys.shared_endpoints.end()),
                             sys.shared_endpoints.end());
  for (int path_no = 0; path_no < demand; ++path_no) {
    std::vector<int> path;
    path.push_back(src);
    int node = 2 * src + 1;
    while (node != sink) {
      int next = -1;
      for (int id : net.arcs_from(node)) {
        if (!(id & 1) && net.flow(id) > 0) {
          next = id;
          break;
        }
      }
      if (next == -1) throw std::logic_error("max_disjoint_paths: flow walk stuck");
      net.drain_unit(next);
      node = net.arc_to(next);
      if (node != sink && !(node & 1)) path.push_back(node / 2);
    }
    sys.paths.push_back(std::move(path));
  }
  if (!to_old.empty()) {
    for (auto& path : sys.paths) {
      for (auto& v : path) v = to_old[v];
    }
  }
  auto violations = path_system_violations(g, sys);
  if (!violations.empty()) {
    throw std::logic_error("max_disjoint_paths: invalid decomposition: " + violations.front());
  }
  return sys;
}

std::optional<PathSystem> direct_witness(const Graph& g, const ConstructionSpec& spec, int t) {
  check_psi(spec);
  if (t < 1 || t >= 2 * spec.s) {
    throw std::invalid_argument("direct_witness: t must satisfy 1 <= t < 2s");
  }
  const long long k2 = static_cast<long long>(spec.k) * spec.k;
  Window win{-k2, t + spec.s};
  int w0 = labelled_vertex(g, Block::W, 0);
  int wt = labelled_vertex(g, Block::W, t);
  return max_disjoint_paths(g, w0, {wt}, 3 * spec.k, win);
}

std::optional<PathSystem> source_fanout(const Graph& g, const ConstructionSpec& spec, int r) {
  check_psi(spec);
  if (r < 0 || r >= spec.s) throw std::invalid_argument("source_fanout: r must satisfy 0 <= r < s");
  const long long k2 = static_cast<long long>(spec.k) * spec.k;
  Window win{-k2, r + spec.s};
  int w0 = labelled_vertex(g, Block::W, 0);
  VertexSet targets;
  for (int j = 1; j <= 3 * spec.k; ++j) targets.push_back(labelled_vertex(g, Block::W, r + j));
  std::sort(targets.begin(), targets.end());
  return max_disjoint_paths(g, w0, targets, 3 * spec.k, win);
}

PathSystem ladder_segment(const Graph& g, const ConstructionSpec& spec, int t) {
  check_psi(spec);
  const int s = spec.s, k = spec.k;
  if (t < 2 * s || t > spec.p / 2) {
    throw std::invalid_argument("ladder_segment: t must satisfy 2s <= t <= p/2");
  }
  const int r = t % s;
  const int q = (t - r) / s;
  const long long internal_lo = r + s + 1;
  const long long internal_hi = static_cast<long long>(t) - s + 3 * k;
  PathSystem sys;
  for (int j = 1; j <= 3 * k; ++j) {
    std::vector<int> path;
    std::vector<long long> internal_indices;
    for (int a = 0; a <= q - 2; ++a) {
      long long wi = r + j + static_cast<long long>(a) * s;
      long long zi = wi + s;
      path.push_back(labelled_vertex(g, Block::W, wi));
      path.push_back(labelled_vertex(g, Block::Z, zi));
      if (a > 0) internal_indices.push_back(wi);
      if (a < q - 2) internal_indices.push_back(zi);
    }
    for (size_t i = 1; i < path.size(); ++i) {
      if (!g.has_edge(path[i - 1], path[i])) {
        throw std::logic_error("ladder_segment: rung is not an edge");
      }
    }
    for (long long idx : internal_indices) {
      if (idx < internal_lo || idx > internal_hi) {
        throw std::logic_error("ladder_segment: internal vertex outside its window");
      }
    }
    sys.paths.push_back(std::move(path));
  }
  auto violations = path_system_violations(g, sys);
  if (!violations.empty()) {
    throw std::logic_error("ladder_segment: invalid system: " + violations.front());
  }
  return sys;
}

std::optional<PathSystem> target_funnel(const Graph& g, const ConstructionSpec& spec, int t) {
  check_psi(spec);
  const int s = spec.s, k = spec.k;
  if (t < 2 * s || t > spec.p / 2) {
    throw std::invalid_argument("target_funnel: t must satisfy 2s <= t <= p/2");
  }
  Window win{static_cast<long long>(t) - s + 1, static_cast<long long>(t) + s};
  int wt = labelled_vertex(g, Block::W, t);
  VertexSet sources;
  for (int j = 1; j <= 3 * k; ++j) {
    sources.push_back(labelled_vertex(g, Block::Z, static_cast<long long>(t) - s + j));
  }
  std::sort(sources.begin(), sources.end());
  // Undirected graph: run the flow from w_t into the z set, then flip.
  auto sys = max_disjoint_paths(g, wt, sources, 3 * k, win);
  if (!sys) return std::nullopt;
  for (auto& path : sys->paths) std::reverse(path.begin(), path.end());
  return sys;
}

WitnessResult w_pair_witness(const Graph& g, const ConstructionSpec& spec, int t) {
  check_psi(spec);
  const int s = spec.s, k = spec.k;
  if (t < 1 || t > spec.p / 2) {
    throw std::invalid_argument("w_pair_witness: t must satisfy 1 <= t <= p/2");
  }
  WitnessResult result;
  if (t < 2 * s) {
    auto sys = direct_witness(g, spec, t);
    if (!sys) {
      result.failed_stage = "direct";
      result.problems.push_back("flow below demand in the direct window");
      return result;
    }
    result.ok = true;
    result.system = std::move(*sys);
    return result;
  }

  const int r = t % s;
  auto fan = source_fanout(g, spec, r);
  if (!fan) {
    result.failed_stage = "fanout";
    result.problems.push_back("flow below demand in the fanout window");
    return result;
  }
  PathSystem ladders = ladder_segment(g, spec, t);
  auto funnel = target_funnel(g, spec, t);
  if (!funnel) {
    result.failed_stage = "funnel";
    result.problems.push_back("flow below demand in the funnel window");
    return result;
  }

  std::map<int, const std::vector<int>*> ladder_by_start, funnel_by_start;
  for (const auto& path : ladders.paths) ladder_by_start[path.front()] = &path;
  for (const auto& path : funnel->paths) funnel_by_start[path.front()] = &path;

  const long long k2 = static_cast<long long>(k) * k;
  PathSystem full;
  full.window = Window{-k2, static_cast<long long>(t) + s};
  full.shared_endpoints = {labelled_vertex(g, Block::W, 0), labelled_vertex(g, Block::W, t)};
  std::sort(full.shared_endpoints.begin(), full.shared_endpoints.end());
  for (const auto& fan_path : fan->paths) {
    auto lad = ladder_by_start.find(fan_path.back());
    if (lad == ladder_by_start.end()) {
      result.failed_stage = "assembly";
      result.problems.push_back("fanout path ends off the ladder starts");
      return result;
    }
    std::vector<int> joined = fan_path;
    joined.insert(joined.end(), lad->second->begin() + 1, lad->second->end());
    auto fun = funnel_by_start.find(joined.back());
    if (fun == funnel_by_start.end()) {
      result.failed_stage = "assembly";
      result.problems.push_back("ladder ends off the funnel starts");
      return result;
    }
    joined.insert(joined.end(), fun->second->begin() + 1, fun->second->end());
    full.paths.push_back(std::move(joined));
  }
  result.problems = path_system_violations(g, full);
  if (!result.problems.empty()) {
    result.failed_stage = "assembly";
    return result;
  }
  result.ok = true;
  result.system = std::move(full);
  return result;
}

std::string path_system_to_json(const Graph& g, Family family, const PathSystem& sys) {
  const auto& labels = g.labels();
  auto name = [&](int v) {
    if (labels) return label_name(family, (*labels)[v]);
    return std::to_string(v);
  };
  std::ostringstream os;
  os << "{\n  \"paths\": [";
  for (size_t i = 0; i < sys.paths.size(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (size_t j = 0; j < sys.paths[i].size(); ++j) {
      if (j) os << ", ";
      os << '"' << name(sys.paths[i][j]) << '"';
    }
    os << "]";
  }
  os << "],\n  \"shared\": [";
  for (size_t i = 0; i < sys.shared_endpoints.size(); ++i) {
    if (i) os << ", ";
    os << '"' << name(sys.shared_endpoints[i]) << '"';
  }
  os << "],\n  \"window\": ";
  if (sys.window) {
    os << "[" << sys.window->lo << ", " << sys.window->hi << "]";
  } else {
    os << "null";
  }
  os << "\n}\n";
  return os.str();
}

}  // namespace avgconn
