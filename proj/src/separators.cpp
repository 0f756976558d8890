#include "avgconn/separators.hpp"

#include <algorithm>
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

bool sees(const Graph& g, int s, const VertexSet& side) {
  for (int w : g.neighbours(s)) {
    if (set_contains(side, w)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> certificate_violations(const Graph& g, const SeparatorCertificate& cert) {
  std::vector<std::string> out;
  const int n = g.order();
  if (cert.u < 0 || cert.u >= n || cert.v < 0 || cert.v >= n || cert.u == cert.v) {
    out.push_back("bad endpoints");
    return out;
  }
  if (!is_vertex_set(cert.separator)) out.push_back("separator not a vertex set");
  if (set_contains(cert.separator, cert.u) || set_contains(cert.separator, cert.v)) {
    out.push_back("separator contains an endpoint");
  }
  std::vector<bool> removed(n, false);
  for (int s : cert.separator) {
    if (s < 0 || s >= n) {
      out.push_back("separator vertex out of range");
      return out;
    }
    removed[s] = true;
  }
  if (!out.empty()) return out;
  VertexSet cu = g.component_of(cert.u, removed);
  VertexSet cv = g.component_of(cert.v, removed);
  if (cu != cert.u_side) out.push_back("u_side is not the component of u");
  if (cv != cert.v_side) out.push_back("v_side is not the component of v");
  if (set_contains(cu, cert.v)) out.push_back("separator does not separate the pair");
  for (int s : cert.separator) {
    if (!sees(g, s, cu) || !sees(g, s, cv)) {
      out.push_back("separator vertex " + std::to_string(s) + " does not see both sides");
    }
  }
  return out;
}

SeparatorCertificate minimum_separator(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v) {
    throw std::invalid_argument("minimum_separator: bad endpoints");
  }
  if (g.has_edge(u, v)) {
    throw std::invalid_argument("minimum_separator: endpoints are adjacent");
  }
  MaxFlow net(2 * g.order());
  for (int w = 0; w < g.order(); ++w) net.add_arc(2 * w, 2 * w + 1, 1);
  for (auto [a, b] : g.edge_list()) {
    net.add_arc(2 * a + 1, 2 * b, MaxFlow::kInf);
    net.add_arc(2 * b + 1, 2 * a, MaxFlow::kInf);
  }
  int value = net.run(2 * u + 1, 2 * v);
  std::vector<bool> source_side = net.source_side();
  SeparatorCertificate cert;
  cert.u = u;
  cert.v = v;
  for (int w = 0; w < g.order(); ++w) {
    if (w != u && w != v && source_side[2 * w] && !source_side[2 * w + 1]) {
      cert.separator.push_back(w);
    }
  }
  if (static_cast<int>(cert.separator.size()) != value) {
    throw std::logic_error("minimum_separator: cut size differs from flow value");
  }
  std::vector<bool> removed(g.order(), false);
  for (int s : cert.separator) removed[s] = true;
  cert.u_side = g.component_of(u, removed);
  cert.v_side = g.component_of(v, removed);
  if (!certificate_violations(g, cert).empty()) {
    throw std::logic_error("minimum_separator: produced an invalid certificate");
  }
  return cert;
}

std::vector<SeparatorCertificate> enumerate_minimal_separators(const Graph& g, int u, int v,
                                                               int max_order) {
  const int n = g.order();
  if (n > max_order) {
    throw std::invalid_argument("enumerate_minimal_separators: order exceeds max_order guard");
  }
  if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
    throw std::invalid_argument("enumerate_minimal_separators: bad endpoints");
  }
  if (g.has_edge(u, v)) {
    throw std::invalid_argument("enumerate_minimal_separators: endpoints are adjacent");
  }
  VertexSet rest;
  for (int w = 0; w < n; ++w) {
    if (w != u && w != v) rest.push_back(w);
  }
  std::vector<SeparatorCertificate> out;
  const unsigned long long limit = 1ULL << rest.size();
  std::vector<bool> removed(n, false);
  for (unsigned long long mask = 0; mask < limit; ++mask) {
    std::fill(removed.begin(), removed.end(), false);
    VertexSet sep;
    for (size_t i = 0; i < rest.size(); ++i) {
      if (mask >> i & 1) {
        sep.push_back(rest[i]);
        removed[rest[i]] = true;
      }
    }
    VertexSet cu = g.component_of(u, removed);
    if (set_contains(cu, v)) continue;
    VertexSet cv = g.component_of(v, removed);
    bool minimal = true;
    for (int s : sep) {
      if (!sees(g, s, cu) || !sees(g, s, cv)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    SeparatorCertificate cert;
    cert.u = u;
    cert.v = v;
    cert.separator = std::move(sep);
    cert.u_side = std::move(cu);
    cert.v_side = std::move(cv);
    out.push_back(std::move(cert));
  }
  std::sort(out.begin(), out.end(), [](const SeparatorCertificate& a, const SeparatorCertificate& b) {
    return a.separator < b.separator;
  });
  return out;
}

const char* shape_name(SeparatorShape s) {
  switch (s) {
    case SeparatorShape::endpoint_neighbourhood: return "endpoint-neighbourhood";
    case SeparatorShape::two_runs: return "two-runs";
    case SeparatorShape::other: return "other";
  }
  throw std::logic_error("bad separator shape");
}

namespace {

// Cyclic interval test: at most one element of `in` has its successor outside.
// Returns the interval as (start, length); full-circle sets report start 0.
std::optional<CyclicRun> as_cyclic_interval(const std::vector<bool>& in, int count, int p) {
  if (count == 0) return CyclicRun{0, 0};
  if (count == p) return CyclicRun{0, p};
  int start = -1;
  int breaks = 0;
  for (int i = 0; i < p; ++i) {
    if (in[i] && !in[mod(i - 1, p)]) {
      start = i;
      ++breaks;
    }
  }
  if (breaks != 1) return std::nullopt;
  for (int off = 0; off < count; ++off) {
    if (!in[mod(start + off, p)]) return std::nullopt;
  }
  return CyclicRun{start, count};
}

struct FlankAttempt {
  CyclicRun left, right;
  bool overlap = false;
};

// Walks the separator indices immediately before and after the interval.
FlankAttempt flanks(const std::vector<bool>& sep, int sep_count, const CyclicRun& interval, int p) {
  FlankAttempt out;
  if (interval.length == p) return out;  // no room for flanks
  int i = mod(interval.start - 1, p);
  while (sep[i] && out.left.length < sep_count) {
    out.left.length += 1;
    out.left.start = i;
    i = mod(i - 1, p);
  }
  i = mod(interval.start + interval.length, p);
  out.right.start = i;
  while (sep[i] && out.right.length < sep_count) {
    out.right.length += 1;
    i = mod(i + 1, p);
  }
  if (out.left.length + out.right.length > sep_count) out.overlap = true;
  return out;
}

}  // namespace

Classification classify_separator(const Graph& g, const SeparatorCertificate& cert,
                                  const ConstructionSpec& spec) {
  if (spec.family != Family::gkp) {
    throw std::invalid_argument("classify_separator: only gkp instances are classified");
  }
  const int p = block_size(g);
  if (p != spec.p || g.order() != 2 * p) {
    throw std::invalid_argument("classify_separator: graph does not match spec");
  }
  const int k = spec.k;

  Classification cls;
  if (cert.separator == neighbourhood(g, cert.u) || cert.separator == neighbourhood(g, cert.v)) {
    cls.shape = SeparatorShape::endpoint_neighbourhood;
    return cls;
  }

  std::vector<bool> sep_w(p, false), sep_x(p, false);
  int sep_w_count = 0, sep_x_count = 0;
  for (int s : cert.separator) {
    if (s < p) {
      sep_w[s] = true;
      ++sep_w_count;
    } else {
      sep_x[s - p] = true;
      ++sep_x_count;
    }
  }

  for (const VertexSet* side : {&cert.u_side, &cert.v_side}) {
    std::vector<bool> cw(p, false), cx(p, false);
    int cw_count = 0, cx_count = 0;
    for (int v : *side) {
      if (v < p) {
        cw[v] = true;
        ++cw_count;
      } else {
        cx[v - p] = true;
        ++cx_count;
      }
    }
    if (cw_count == 0 || cx_count == 0) continue;
    auto iw = as_cyclic_interval(cw, cw_count, p);
    auto ix = as_cyclic_interval(cx, cx_count, p);
    if (!iw || !ix) continue;
    FlankAttempt fw = flanks(sep_w, sep_w_count, *iw, p);
    FlankAttempt fx = flanks(sep_x, sep_x_count, *ix, p);
    if (fw.overlap || fx.overlap) {
      cls.wrapped_runs = true;
      continue;
    }
    if (fw.left.length + fw.right.length != sep_w_count) continue;
    if (fx.left.length + fx.right.length != sep_x_count) continue;
    if (fw.left.length > k - 1 || fw.right.length > k - 1) continue;
    if (fx.left.length > k - 1 || fx.right.length > k - 1) continue;
    if (fw.left.length + fx.left.length != k - 1) continue;
    if (fw.right.length + fx.right.length != k - 1) continue;
    RunDecomposition runs;
    runs.left_w = fw.left;
    runs.right_w = fw.right;
    runs.left_x = fx.left;
    runs.right_x = fx.right;
    cls.shape = SeparatorShape::two_runs;
    cls.runs = runs;
    return cls;
  }
  cls.shape = SeparatorShape::other;
  return cls;
}

std::string certificate_to_json(const SeparatorCertificate& cert,
                                const std::optional<Classification>& cls) {
  auto emit_set = [](std::ostringstream& os, const VertexSet& s) {
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) os << ", ";
      os << s[i];
    }
    os << "]";
  };
  std::ostringstream os;
  os << "{\"u\": " << cert.u << ", \"v\": " << cert.v << ", \"separator\": ";
  emit_set(os, cert.separator);
  os << ", \"size\": " << cert.separator.size();
  os << ", \"u_side\": ";
  emit_set(os, cert.u_side);
  os << ", \"v_side\": ";
  emit_set(os, cert.v_side);
  if (cls) {
    os << ", \"shape\": \"" << shape_name(cls->shape) << "\"";
    if (cls->runs) {
      const RunDecomposition& r = *cls->runs;
      os << ", \"runs\": {"
         << "\"left_w\": [" << r.left_w.start << ", " << r.left_w.length << "], "
         << "\"right_w\": [" << r.right_w.start << ", " << r.right_w.length << "], "
         << "\"left_x\": [" << r.left_x.start << ", " << r.left_x.length << "], "
         << "\"right_x\": [" << r.right_x.start << ", " << r.right_x.length << "]}";
    }
  }
  os << "}";
  return os.str();
}

}  // namespace avgconn
