#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avgconn/constructions.hpp"
#include "avgconn/graph.hpp"

namespace avgconn {

struct SeparatorCertificate {
  int u = -1;
  int v = -1;
  VertexSet separator;
  VertexSet u_side;  // component of u in g - separator
  VertexSet v_side;  // component of v in g - separator
};

// Empty when the certificate is internally consistent: endpoints outside the
// separator, sides are exactly the components of the endpoints in
// g - separator, the sides differ, and every separator vertex has a
// neighbour in both sides (inclusion-minimality).
std::vector<std::string> certificate_violations(const Graph& g, const SeparatorCertificate& cert);

// A minimum u-v separator extracted from the vertex-split max-flow min cut.
// Requires u, v distinct and nonadjacent; |separator| equals the local
// vertex connectivity (empty for a disconnected pair).
SeparatorCertificate minimum_separator(const Graph& g, int u, int v);

// All inclusion-minimal u-v separators by exhaustive subset scan, filtered by
// (a) separates and (b) every separator vertex sees both sides. Guarded by
// max_order since the scan is exponential. Result sorted lexicographically.
std::vector<SeparatorCertificate> enumerate_minimal_separators(const Graph& g, int u, int v,
                                                               int max_order = 16);

// Shape taxonomy for minimal separators of the gkp family. Every minimal
// separator there either is a full endpoint neighbourhood (size k) or splits
// into two runs of consecutive vertices flanking the side component's W- and
// X-intervals, k-1 vertices per flank (size 2k-2).
enum class SeparatorShape { endpoint_neighbourhood, two_runs, other };

const char* shape_name(SeparatorShape s);

struct CyclicRun {
  int start = 0;
  int length = 0;  // vertices start..start+length-1 mod p; length 0 = empty
};

struct RunDecomposition {
  CyclicRun left_w, right_w, left_x, right_x;
};

struct Classification {
  SeparatorShape shape = SeparatorShape::other;
  std::optional<RunDecomposition> runs;  // populated for two_runs
  // An attempted decomposition hit an ambiguous full wrap: the flanks meet
  // around the cycle and cannot be split apart. Such certificates classify
  // as `other` but carry this flag so they can be inspected rather than
  // silently bucketed.
  bool wrapped_runs = false;
};

// Classifies a certificate coming from a gkp instance (labels required).
Classification classify_separator(const Graph& g, const SeparatorCertificate& cert,
                                  const ConstructionSpec& spec);

std::string certificate_to_json(const SeparatorCertificate& cert,
                                const std::optional<Classification>& cls = std::nullopt);

}  // namespace avgconn
