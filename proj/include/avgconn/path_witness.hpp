#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avgconn/constructions.hpp"
#include "avgconn/graph.hpp"

namespace avgconn {

// Integer index interval [lo, hi] over the cyclic vertex indices of a
// block-labelled graph. Kept pre-reduction: membership of a vertex with
// index m means some integer i in [lo, hi] has i = m (mod p), and the width
// may not exceed p so the interval geometry is unambiguous.
struct Window {
  long long lo = 0;
  long long hi = 0;
};

// All vertex ids realized by the window (every block present). Throws on
// lo > hi or width > p.
VertexSet window_vertices(const Graph& g, const Window& w);
bool window_contains(const Window& w, int p, int vertex_index);

struct PathSystem {
  std::vector<std::vector<int>> paths;  // vertex id sequences
  // Vertices allowed to appear in more than one path; they must be an
  // endpoint of every path that touches them.
  VertexSet shared_endpoints;
  std::optional<Window> window;  // when set, every path vertex must lie inside
};

// Empty when the system is valid: every sequence is a path of g without
// repeated vertices, the paths are internally disjoint (shared vertices only
// as declared endpoints), and all vertices sit inside the window if one is
// declared.
std::vector<std::string> path_system_violations(const Graph& g, const PathSystem& sys);

// Up to `demand` internally disjoint paths from source into the target set
// (each target terminates at most one path; a single target absorbs all of
// them), restricted to the window when given. Returns the witness system or
// nullopt when the flow value falls short. Returned systems are validated
// before being handed out; they are never trusted blindly.
std::optional<PathSystem> max_disjoint_paths(const Graph& g, int source, const VertexSet& targets,
                                             int demand, std::optional<Window> window);

// --- psi-family witnesses for pairs w_0, w_t (1 <= t <= p/2) -------------
//
// For t below 2s a single flow inside window [-k^2, t+s] suffices. For
// larger t the witness is assembled from three stages, glued at shared
// junction vertices:
//   fanout:  3k paths from w_0 to w_{r+1}..w_{r+3k} inside [-k^2, r+s],
//            where r = t mod s;
//   ladders: explicit alternating w/z ladders advancing by the stride s,
//            from w_{r+j} to z_{t-s+j}, internal vertices inside
//            [r+s+1, t-s+3k];
//   funnel:  3k paths from z_{t-s+1}..z_{t-s+3k} into w_t inside
//            [t-s+1, t+s].

std::optional<PathSystem> direct_witness(const Graph& g, const ConstructionSpec& spec, int t);
std::optional<PathSystem> source_fanout(const Graph& g, const ConstructionSpec& spec, int r);
// Purely arithmetic; adjacency and window membership are asserted.
PathSystem ladder_segment(const Graph& g, const ConstructionSpec& spec, int t);
std::optional<PathSystem> target_funnel(const Graph& g, const ConstructionSpec& spec, int t);

struct WitnessResult {
  bool ok = false;
  // Which stage failed: "direct", "fanout", "funnel" or "assembly".
  std::string failed_stage;
  std::vector<std::string> problems;
  PathSystem system;
};

// Full 3k-path witness between w_0 and w_t, routed through the direct check
// for t < 2s and through fanout + ladders + funnel otherwise.
WitnessResult w_pair_witness(const Graph& g, const ConstructionSpec& spec, int t);

std::string path_system_to_json(const Graph& g, Family family, const PathSystem& sys);

}  // namespace avgconn
