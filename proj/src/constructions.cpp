#include "avgconn/constructions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace avgconn {
namespace {

int mod(long long value, int p) {
  long long m = value % p;
  if (m < 0) m += p;
  return static_cast<int>(m);
}

std::vector<VertexLabel> block_labels(int p, int blocks) {
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<size_t>(p) * blocks);
  static constexpr Block kOrder[] = {Block::W, Block::X, Block::Y, Block::Z};
  for (int b = 0; b < blocks; ++b) {
    for (int i = 0; i < p; ++i) labels.push_back({kOrder[b], i});
  }
  return labels;
}

void check_regularity(const Graph& g, int p, int w_degree, int other_degree, const char* what) {
  for (int v = 0; v < g.order(); ++v) {
    int want = v < p ? w_degree : other_degree;
    if (g.degree(v) != want) {
      throw std::logic_error(std::string(what) + ": degree self-check failed");
    }
  }
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::gkp: return "gkp";
    case Family::gamma: return "gamma";
    case Family::psi: return "psi";
    case Family::phi: return "phi";
  }
  throw std::logic_error("bad family tag");
}

Family family_from_name(const std::string& name) {
  if (name == "gkp") return Family::gkp;
  if (name == "gamma") return Family::gamma;
  if (name == "psi") return Family::psi;
  if (name == "phi") return Family::phi;
  throw std::invalid_argument("unknown family: " + name);
}

ConstructionSpec spec_gkp(int k, int p) {
  if (k < 3) throw std::invalid_argument("gkp: k must be >= 3");
  if (p < k) throw std::invalid_argument("gkp: p must be >= k");
  return {Family::gkp, k, p, 0, 0};
}

ConstructionSpec spec_gamma(int k, int p) {
  if (k < 3) throw std::invalid_argument("gamma: k must be >= 3");
  if (p < k) throw std::invalid_argument("gamma: p must be >= k");
  return {Family::gamma, k, p, 0, 0};
}

int psi_stride_total(int k) { return k * k * k - k * k; }

ConstructionSpec spec_psi(int k, int p, bool allow_any_k) {
  if (!allow_any_k && k != 3 && k != 4 && k != 5) {
    throw std::invalid_argument("psi: k must be 3, 4 or 5");
  }
  if (k < 3) throw std::invalid_argument("psi: k must be >= 3");
  int s = psi_stride_total(k);
  if (p < 4 * s) throw std::invalid_argument("psi: p must be >= 4*(k^3 - k^2)");
  return {Family::psi, k, p, 0, s};
}

ConstructionSpec spec_phi(int k, int r) {
  if (k < 6) throw std::invalid_argument("phi: k must be >= 6");
  if (r < k + 1) throw std::invalid_argument("phi: r must be >= k + 1");
  long long p = static_cast<long long>(r) * k * k - 1;
  if (p > (1 << 20)) throw std::invalid_argument("phi: parameters too large");
  return {Family::phi, k, static_cast<int>(p), r, 0};
}

std::vector<int> phi_pi1(int k, int p) {
  std::vector<int> pi(p);
  for (int i = 0; i < p; ++i) pi[i] = mod(static_cast<long long>(k) * i, p);
  return pi;
}

std::vector<int> phi_pi2(int k, int p) {
  std::vector<int> pi(p);
  for (int i = 0; i < p; ++i) pi[i] = mod(static_cast<long long>(k) * k * i, p);
  return pi;
}

Graph build_gkp(int k, int p) {
  ConstructionSpec spec = spec_gkp(k, p);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(k) * p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < k; ++j) edges.emplace_back(i, p + mod(i + j, p));
  }
  Graph g = Graph::from_edge_list(spec.order(), edges).with_labels(block_labels(p, 2));
  check_regularity(g, p, k, k, "build_gkp");
  return g;
}

Graph build_gamma(int k, int p) {
  ConstructionSpec spec = spec_gamma(k, p);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(3) * k * p);
  for (int block = 1; block <= 3; ++block) {
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < k; ++j) edges.emplace_back(i, block * p + mod(i + j, p));
    }
  }
  Graph g = Graph::from_edge_list(spec.order(), edges).with_labels(block_labels(p, 4));
  check_regularity(g, p, 3 * k, k, "build_gamma");
  return g;
}

Graph build_psi(int k, int p, bool allow_any_k) {
  ConstructionSpec spec = spec_psi(k, p, allow_any_k);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(3) * k * p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < k; ++j) {
      edges.emplace_back(i, p + mod(i + j, p));                                    // X, stride 1
      edges.emplace_back(i, 2 * p + mod(i + static_cast<long long>(k) * j, p));    // Y, stride k
      edges.emplace_back(i, 3 * p + mod(i + static_cast<long long>(k) * k * j, p));  // Z, stride k^2
    }
  }
  Graph g = Graph::from_edge_list(spec.order(), edges).with_labels(block_labels(p, 4));
  check_regularity(g, p, 3 * k, k, "build_psi");
  // The ladder segments of the path witnesses rely on w_i ~ z_i and
  // w_i ~ z_{i+s}; fail loudly here rather than deep inside a witness.
  for (int i = 0; i < p; ++i) {
    if (!g.has_edge(i, 3 * p + i) || !g.has_edge(i, 3 * p + mod(i + spec.s, p))) {
      throw std::logic_error("build_psi: Z-stride self-check failed");
    }
  }
  return g;
}

Graph build_phi(int k, int r) {
  ConstructionSpec spec = spec_phi(k, r);
  const int p = spec.p;
  std::vector<int> pi1 = phi_pi1(k, p), pi2 = phi_pi2(k, p);
  auto check_bijection = [p](const std::vector<int>& pi) {
    std::vector<bool> hit(p, false);
    for (int v : pi) {
      if (hit[v]) throw std::logic_error("build_phi: permutation self-check failed");
      hit[v] = true;
    }
  };
  check_bijection(pi1);
  check_bijection(pi2);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(3) * k * p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < k; ++j) {
      edges.emplace_back(i, p + mod(i + j, p));
      edges.emplace_back(pi1[i], 2 * p + mod(i + j, p));
      edges.emplace_back(pi2[i], 3 * p + mod(i + j, p));
    }
  }
  Graph g = Graph::from_edge_list(spec.order(), edges).with_labels(block_labels(p, 4));
  check_regularity(g, p, 3 * k, k, "build_phi");
  return g;
}

Graph build(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::gkp: return build_gkp(spec.k, spec.p);
    case Family::gamma: return build_gamma(spec.k, spec.p);
    case Family::psi: return build_psi(spec.k, spec.p, true);
    case Family::phi: return build_phi(spec.k, spec.r);
  }
  throw std::logic_error("bad family tag");
}

std::string label_name(Family family, const VertexLabel& label) {
  if (family == Family::gamma && label.block != Block::W) {
    int block_no = static_cast<int>(label.block);  // X=1, Y=2, Z=3
    return "x" + std::to_string(block_no) + "_" + std::to_string(label.index);
  }
  return std::string(1, block_letter(label.block)) + std::to_string(label.index);
}

int block_size(const Graph& g) {
  const auto& labels = g.labels();
  if (!labels) throw std::invalid_argument("block_size: graph has no labels");
  int p = 0;
  for (const auto& l : *labels) {
    if (l.block == Block::W) ++p;
  }
  if (p == 0 || (g.order() != 2 * p && g.order() != 4 * p)) {
    throw std::invalid_argument("block_size: not a canonical block layout");
  }
  int blocks = g.order() / p;
  for (int b = 0; b < blocks; ++b) {
    for (int i = 0; i < p; ++i) {
      const VertexLabel& l = (*labels)[b * p + i];
      if (static_cast<int>(l.block) != b || l.index != i) {
        throw std::invalid_argument("block_size: labels out of canonical order");
      }
    }
  }
  return p;
}

int labelled_vertex(const Graph& g, Block block, long long index) {
  int p = block_size(g);
  int offset = static_cast<int>(block) * p;
  if (offset >= g.order()) throw std::invalid_argument("labelled_vertex: block not present");
  return offset + mod(index, p);
}

std::string sidecar_json(const ConstructionSpec& spec, const Graph& g) {
  const auto& labels = g.labels();
  if (!labels) throw std::invalid_argument("sidecar_json: graph has no labels");
  std::ostringstream os;
  os << "{\n";
  os << "  \"family\": \"" << family_name(spec.family) << "\",\n";
  os << "  \"k\": " << spec.k << ",\n";
  os << "  \"p\": " << spec.p << ",\n";
  if (spec.family == Family::phi) os << "  \"r\": " << spec.r << ",\n";
  if (spec.family == Family::psi) os << "  \"s\": " << spec.s << ",\n";
  os << "  \"order\": " << g.order() << ",\n";
  os << "  \"edges\": " << g.size() << ",\n";
  os << "  \"labels\": [";
  for (int v = 0; v < g.order(); ++v) {
    if (v > 0) os << ", ";
    os << "{\"id\": " << v << ", \"name\": \"" << label_name(spec.family, (*labels)[v]) << "\"}";
  }
  os << "]\n}\n";
  return os.str();
}

}  // namespace avgconn
