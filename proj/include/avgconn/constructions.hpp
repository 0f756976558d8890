#pragma once

#include <string>
#include <vector>

#include "avgconn/graph.hpp"

namespace avgconn {

// The four bipartite families share one canonical layout: a block W of p
// vertices (ids 0..p-1) joined to one or three blocks of p vertices each
// (ids p.., 2p.., 3p..), every edge running between W and a non-W block.
// Indices are cyclic mod p.
enum class Family { gkp, gamma, psi, phi };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct ConstructionSpec {
  Family family = Family::gkp;
  int k = 0;
  int p = 0;
  int r = 0;  // phi only: p = r * k^2 - 1
  int s = 0;  // psi only: total Z-stride k^3 - k^2

  int order() const { return family == Family::gkp ? 2 * p : 4 * p; }
};

// Validated parameter bundles; each throws std::invalid_argument on a bad
// combination and fills in derived fields.
ConstructionSpec spec_gkp(int k, int p);
ConstructionSpec spec_gamma(int k, int p);
// psi is defined for k in {3, 4, 5}; allow_any_k lifts that gate for
// experiments while keeping p >= 4s.
ConstructionSpec spec_psi(int k, int p, bool allow_any_k = false);
ConstructionSpec spec_phi(int k, int r);

int psi_stride_total(int k);  // k^3 - k^2

// i -> k*i mod p and i -> k^2*i mod p; bijections because gcd(k, p) = 1.
std::vector<int> phi_pi1(int k, int p);
std::vector<int> phi_pi2(int k, int p);

// W joined to one block X: w_i ~ x_{i+j} for j = 0..k-1. k-regular, 2p
// vertices, kp edges.
Graph build_gkp(int k, int p);
// Three stride-1 copies sharing W: w_i ~ x_{i+j}, y_{i+j}, z_{i+j}.
Graph build_gamma(int k, int p);
// Strides 1, k, k^2 towards X, Y, Z; in particular w_i ~ z_i and z_{i+s}.
Graph build_psi(int k, int p, bool allow_any_k = false);
// Stride-1 attachments but the Y and Z fans are rooted at permuted W
// vertices: w_{pi1(i)} ~ y_{i+j}, w_{pi2(i)} ~ z_{i+j}.
Graph build_phi(int k, int r);

Graph build(const ConstructionSpec& spec);

// Label text such as "w3"; gamma's three stride-1 blocks print x1_/x2_/x3_.
std::string label_name(Family family, const VertexLabel& label);

// Block size p recovered from labels; validates the canonical layout
// (id = block offset + index). Throws if labels are missing or reordered.
int block_size(const Graph& g);
// Vertex id for a possibly negative or >= p cyclic index.
int labelled_vertex(const Graph& g, Block block, long long index);

// Deterministic JSON with family, parameters and the full label table.
std::string sidecar_json(const ConstructionSpec& spec, const Graph& g);

}  // namespace avgconn
