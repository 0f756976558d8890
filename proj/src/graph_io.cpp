#include "avgconn/graph_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace avgconn {
namespace {

constexpr int kG6Bias = 63;           // all payload bytes live in ['?', '~']
constexpr long long kShortMax = 62;
constexpr long long kMediumMax = 258047;          // 2^18 - 1
constexpr long long kLongMax = 68719476735LL;     // 2^36 - 1

void append_size(std::string& out, long long n) {
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else if (n <= kMediumMax) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Bias));
    }
  } else if (n <= kLongMax) {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Bias));
    }
  } else {
    throw std::invalid_argument("encode_graph6: order exceeds format limit");
  }
}

int payload_value(char c, const char* what) {
  if (c < kG6Bias || c > '~') {
    throw std::invalid_argument(std::string(what) + ": malformed character");
  }
  return c - kG6Bias;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kG6Bias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) {
    acc <<= (6 - bits);
    out.push_back(static_cast<char>(acc + kG6Bias));
  }
  return out;
}

Graph decode_graph6(std::string_view line) {
  if (line.empty()) throw std::invalid_argument("decode_graph6: empty input");
  size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = payload_value(line[0], "decode_graph6");
    pos = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw std::invalid_argument("decode_graph6: truncated size");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | payload_value(line[pos], "decode_graph6");
  } else {
    if (line.size() < 8) throw std::invalid_argument("decode_graph6: truncated size");
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | payload_value(line[pos], "decode_graph6");
  }
  const long long bit_count = pair_count(n);
  const size_t payload = static_cast<size_t>((bit_count + 5) / 6);
  if (line.size() - pos < payload) throw std::invalid_argument("decode_graph6: truncated payload");
  if (line.size() - pos > payload) throw std::invalid_argument("decode_graph6: trailing bytes");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (size_t i = pos; i < line.size(); ++i) {
    int word = payload_value(line[i], "decode_graph6");
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      if (bit >= bit_count) {
        if ((word >> shift) & 1) {
          throw std::invalid_argument("decode_graph6: nonzero padding");
        }
        continue;
      }
      if ((word >> shift) & 1) {
        // Recover (u, v) with u < v from the flat column-major position.
        long long b = bit;
        int v = 1;
        while (b >= v) b -= v++;
        edges.emplace_back(static_cast<int>(b), v);
      }
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edge_list()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long n = 0, m = 0;
  if (!(is >> n >> m)) throw std::invalid_argument("edge list: missing n m header");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header value");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  long long u, v;
  while (is >> u >> v) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  if (static_cast<long long>(edges.size()) != m) {
    throw std::invalid_argument("edge list: edge count differs from header");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  const auto& labels = g.labels();
  for (int v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (labels) {
      os << " [label=\"" << block_letter((*labels)[v].block) << (*labels)[v].index << "\"]";
    }
    os << ";\n";
  }
  for (auto [u, v] : g.edge_list()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

Graph6File read_graph6_file(const std::string& path, bool stop_on_error) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Graph6File out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view = line;
    if (view.rfind(">>graph6<<", 0) == 0) view.remove_prefix(10);
    if (view.empty()) continue;
    try {
      out.graphs.push_back(decode_graph6(view));
    } catch (const std::invalid_argument& e) {
      if (stop_on_error) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
      }
      out.errors.push_back({line_no, e.what()});
    }
  }
  return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::string content;
  for (const auto& g : graphs) {
    content += encode_graph6(g);
    content += '\n';
  }
  write_file_atomic(path, content);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace avgconn
