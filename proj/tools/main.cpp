#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "avgconn/bounds.hpp"
#include "avgconn/connectivity.hpp"
#include "avgconn/constructions.hpp"
#include "avgconn/graph_io.hpp"
#include "avgconn/parallel.hpp"
#include "avgconn/path_witness.hpp"
#include "avgconn/rational.hpp"
#include "avgconn/search.hpp"
#include "avgconn/separators.hpp"

namespace {

using namespace avgconn;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
  auto bad = [&] {
    throw std::invalid_argument(std::string(what) + ": expected A:B with integers A <= B, got '" +
                                text + "'");
  };
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) bad();
  Range r;
  try {
    size_t used = 0;
    r.lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon) bad();
    std::string rest = text.substr(colon + 1);
    r.hi = std::stoi(rest, &used);
    if (used != rest.size()) bad();
  } catch (const std::invalid_argument&) {
    bad();
  } catch (const std::out_of_range&) {
    bad();
  }
  if (r.lo > r.hi) bad();
  return r;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(out_path, content);
  }
}

std::vector<Graph> load_graphs(const std::string& path) {
  return read_graph6_file(path, /*stop_on_error=*/true).graphs;
}

Graph load_single_graph(const std::string& path) {
  auto graphs = load_graphs(path);
  if (graphs.size() != 1) {
    throw std::invalid_argument(path + ": expected exactly one graph6 line, found " +
                                std::to_string(graphs.size()));
  }
  return graphs.front();
}

std::string approx(const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", r.to_double());
  return buf;
}

std::string rational_json(const Rational& r) {
  std::ostringstream os;
  os << "{\"num\": " << r.num() << ", \"den\": " << r.den() << "}";
  return os.str();
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

// ---------------------------------------------------------------- construct

int run_construct(const std::string& family_str, int k, int p, int r, const std::string& format,
                  const std::string& out, const std::string& sidecar) {
  Family family = family_from_name(family_str);
  ConstructionSpec spec;
  if (family == Family::phi) {
    if (r <= 0) throw std::invalid_argument("construct: phi needs --r (p is derived as r*k^2 - 1)");
    if (p != 0) throw std::invalid_argument("construct: phi derives p from --r; drop --p");
    spec = spec_phi(k, r);
  } else {
    if (p <= 0) throw std::invalid_argument("construct: --p is required for this family");
    if (r != 0) throw std::invalid_argument("construct: --r applies to phi only");
    if (family == Family::gkp) spec = spec_gkp(k, p);
    if (family == Family::gamma) spec = spec_gamma(k, p);
    if (family == Family::psi) spec = spec_psi(k, p);
  }
  Graph g = build(spec);
  std::string payload;
  if (format == "graph6") {
    payload = encode_graph6(g) + "\n";
  } else if (format == "edgelist") {
    payload = to_edge_list_text(g);
  } else if (format == "dot") {
    payload = to_dot(g);
  } else {
    throw std::invalid_argument("construct: unknown format '" + format + "'");
  }
  emit(payload, out);
  if (!sidecar.empty()) write_file_atomic(sidecar, sidecar_json(spec, g));
  return kExitPass;
}

// ------------------------------------------------------------------ analyze

int run_analyze(const std::string& in, const std::string& mode_str, const std::string& format,
                const std::string& out, bool degree_shortcut, double spot_check,
                unsigned long long seed, int threads) {
  if (spot_check < 0.0 || spot_check > 1.0) {
    throw std::invalid_argument("analyze: --spot-check must lie in [0, 1]");
  }
  Graph g = load_single_graph(in);
  Mode mode = mode_from_name(mode_str);
  auto report = all_pairs_report(g, mode, {.threads = threads, .degree_shortcut = degree_shortcut});
  if (format == "json") {
    emit(report_to_json(report), out);
  } else if (format == "csv") {
    emit(report_to_csv(report), out);
  } else {
    throw std::invalid_argument("analyze: unknown format '" + format + "'");
  }

  if (spot_check > 0.0) {
    const int n = g.order();
    std::vector<long long> all(pair_count(n));
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<long long>(i);
    auto want = static_cast<size_t>(spot_check * static_cast<double>(all.size()));
    want = std::max<size_t>(want, 1);
    std::vector<long long> picked;
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(picked), want, rng);
    std::vector<int> fresh(picked.size());
    parallel_for(static_cast<int>(picked.size()), threads, [&](int i) {
      long long idx = picked[i];
      int v = 1;
      long long b = idx;
      while (b >= v) b -= v++;
      fresh[i] = local_connectivity(g, mode, static_cast<int>(b), v);
    });
    for (size_t i = 0; i < picked.size(); ++i) {
      if (fresh[i] != report.values[picked[i]]) {
        std::cerr << "spot check FAILED: pair index " << picked[i] << " reported "
                  << report.values[picked[i]] << " but recomputes to " << fresh[i] << "\n";
        return kExitVerificationFail;
      }
    }
    std::cerr << "spot check: " << picked.size() << " pairs recomputed, all match\n";
  }
  return kExitPass;
}

// ------------------------------------------------------------ verify minimal

int run_verify_minimal(const std::string& in, int k, const std::string& mode_str,
                       bool endpoint_shortcut, const std::string& report_path) {
  auto graphs = load_graphs(in);
  if (graphs.empty()) throw std::invalid_argument(in + ": no graphs to verify");
  Mode mode = mode_from_name(mode_str);
  bool all_ok = true;
  std::ostringstream json;
  json << "{\n  \"check\": \"minimal\",\n  \"mode\": \"" << mode_name(mode)
       << "\",\n  \"k\": " << k << ",\n  \"graphs\": [\n";
  for (size_t i = 0; i < graphs.size(); ++i) {
    auto res = is_minimally_k_connected(graphs[i], k, mode, endpoint_shortcut);
    all_ok = all_ok && res.minimal;
    std::cout << "graph " << i << " n=" << graphs[i].order() << ": ";
    if (res.minimal) {
      std::cout << "pass\n";
    } else if (res.global != k) {
      std::cout << "FAIL connectivity=" << res.global << " != " << k << "\n";
    } else {
      std::cout << "FAIL slack edge (" << res.slack_edge->first << ", " << res.slack_edge->second
                << ")\n";
    }
    json << "    {\"index\": " << i << ", \"n\": " << graphs[i].order()
         << ", \"minimal\": " << (res.minimal ? "true" : "false")
         << ", \"global\": " << res.global << ", \"slack_edge\": ";
    if (res.slack_edge) {
      json << "[" << res.slack_edge->first << ", " << res.slack_edge->second << "]";
    } else {
      json << "null";
    }
    json << "}" << (i + 1 < graphs.size() ? "," : "") << "\n";
  }
  json << "  ],\n  \"pass\": " << (all_ok ? "true" : "false") << "\n}\n";
  if (!report_path.empty()) write_file_atomic(report_path, json.str());
  std::cout << (all_ok ? "all minimal" : "verification FAILED") << "\n";
  return all_ok ? kExitPass : kExitVerificationFail;
}

// --------------------------------------------------------- verify separators

int run_verify_separators(int k, int p, const std::string& report_path, int threads) {
  ConstructionSpec spec = spec_gkp(k, p);
  Graph g = build(spec);
  if (g.order() > 16) {
    throw std::invalid_argument(
        "verify separators: order 2p = " + std::to_string(g.order()) +
        " exceeds the exhaustive enumeration limit of 16");
  }
  const auto& labels = *g.labels();
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < g.order(); ++v) {
    for (int u = 0; u < v; ++u) {
      if (!g.has_edge(u, v)) pairs.emplace_back(u, v);
    }
  }
  struct Row {
    std::string line;
    std::string json;
    bool ok = false;
  };
  std::vector<Row> rows(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), threads, [&](int i) {
    auto [u, v] = pairs[i];
    auto certs = enumerate_minimal_separators(g, u, v);
    bool ok = true;
    std::string detail;
    for (const auto& cert : certs) {
      const int size = static_cast<int>(cert.separator.size());
      const bool size_ok = size == k || size == 2 * k - 2;
      auto cls = classify_separator(g, cert, spec);
      const bool shape_ok = cls.shape != SeparatorShape::other;
      if (!size_ok || !shape_ok) {
        ok = false;
        detail = " (size=" + std::to_string(size) + " shape=" + shape_name(cls.shape) + ")";
        break;
      }
    }
    const std::string name_u = label_name(spec.family, labels[u]);
    const std::string name_v = label_name(spec.family, labels[v]);
    std::ostringstream line;
    line << name_u << " " << name_v << " separators=" << certs.size()
         << (ok ? " pass" : " FAIL" + detail);
    std::ostringstream json;
    json << "    {\"u\": \"" << name_u << "\", \"v\": \"" << name_v
         << "\", \"count\": " << certs.size() << ", \"pass\": " << (ok ? "true" : "false") << "}";
    rows[i] = {line.str(), json.str(), ok};
  });
  bool all_ok = true;
  std::ostringstream json;
  json << "{\n  \"check\": \"separators\",\n  \"k\": " << k << ",\n  \"p\": " << p
       << ",\n  \"pairs\": [\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    std::cout << rows[i].line << "\n";
    json << rows[i].json << (i + 1 < rows.size() ? "," : "") << "\n";
    all_ok = all_ok && rows[i].ok;
  }
  json << "  ],\n  \"pass\": " << (all_ok ? "true" : "false") << "\n}\n";
  if (!report_path.empty()) write_file_atomic(report_path, json.str());
  std::cout << "pairs=" << rows.size() << (all_ok ? " all pass" : " verification FAILED") << "\n";
  return all_ok ? kExitPass : kExitVerificationFail;
}

// -------------------------------------------------------------- verify paths

int run_verify_paths(int k, int p, const std::string& t_range_str, const std::string& r_range_str,
                     const std::string& tier, const std::string& report_path, int threads) {
  ConstructionSpec spec = p > 0 ? spec_psi(k, p) : spec_psi(k, 4 * psi_stride_total(k));
  const int s = spec.s;
  p = spec.p;
  const bool default_sweep = t_range_str.empty() && r_range_str.empty();
  if (default_sweep && k == 5 && tier != "long") {
    throw std::invalid_argument(
        "verify paths: the full k=5 sweep runs under --tier long; "
        "pass explicit --t-range/--r-range for a smaller check");
  }

  struct Check {
    enum Kind { witness, fanout } kind;
    int value;
  };
  std::vector<Check> checks;
  auto add_t = [&](int t) {
    if (t < 1 || t > p / 2) {
      throw std::invalid_argument("verify paths: t must satisfy 1 <= t <= p/2 = " +
                                  std::to_string(p / 2));
    }
    checks.push_back({Check::witness, t});
  };
  auto add_r = [&](int r) {
    if (r < 0 || r >= s) {
      throw std::invalid_argument("verify paths: r must satisfy 0 <= r < s = " +
                                  std::to_string(s));
    }
    checks.push_back({Check::fanout, r});
  };
  if (default_sweep) {
    for (int t = 1; t <= std::min(2 * s - 1, p / 2); ++t) add_t(t);
    for (int r = 0; r < s; ++r) add_r(r);
    if (2 * s <= p / 2) add_t(2 * s);  // one assembled fanout+ladder+funnel witness
  } else {
    if (!t_range_str.empty()) {
      Range tr = parse_range(t_range_str, "--t-range");
      for (int t = tr.lo; t <= tr.hi; ++t) add_t(t);
    }
    if (!r_range_str.empty()) {
      Range rr = parse_range(r_range_str, "--r-range");
      for (int r = rr.lo; r <= rr.hi; ++r) add_r(r);
    }
  }

  Graph g = build(spec);
  struct Row {
    std::string line;
    std::string json;
    bool ok = false;
  };
  std::vector<Row> rows(checks.size());
  parallel_for(static_cast<int>(checks.size()), threads, [&](int i) {
    const Check& c = checks[i];
    std::ostringstream line, json;
    bool ok = false;
    std::string failure;
    if (c.kind == Check::witness) {
      auto res = w_pair_witness(g, spec, c.value);
      ok = res.ok;
      if (!ok) {
        failure = "stage=" + res.failed_stage;
        if (!res.problems.empty()) failure += " " + res.problems.front();
      }
      line << "witness t=" << c.value << " paths=" << (ok ? res.system.paths.size() : 0)
           << (ok ? " pass" : " FAIL " + failure);
      json << "    {\"check\": \"witness\", \"t\": " << c.value
           << ", \"pass\": " << (ok ? "true" : "false");
      if (!ok) json << ", \"failure\": " << json_quote(failure);
      json << "}";
    } else {
      auto sys = source_fanout(g, spec, c.value);
      ok = sys.has_value();
      line << "fanout r=" << c.value << (ok ? " pass" : " FAIL flow short of 3k");
      json << "    {\"check\": \"fanout\", \"r\": " << c.value
           << ", \"pass\": " << (ok ? "true" : "false") << "}";
    }
    rows[i] = {line.str(), json.str(), ok};
  });

  bool all_ok = true;
  std::ostringstream json;
  json << "{\n  \"check\": \"paths\",\n  \"k\": " << k << ",\n  \"p\": " << p
       << ",\n  \"s\": " << s << ",\n  \"checks\": [\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    std::cout << rows[i].line << "\n";
    json << rows[i].json << (i + 1 < rows.size() ? "," : "") << "\n";
    all_ok = all_ok && rows[i].ok;
  }
  json << "  ],\n  \"pass\": " << (all_ok ? "true" : "false") << "\n}\n";
  if (!report_path.empty()) write_file_atomic(report_path, json.str());
  std::cout << "checks=" << rows.size() << (all_ok ? " all pass" : " verification FAILED") << "\n";
  return all_ok ? kExitPass : kExitVerificationFail;
}

// -------------------------------------------------------------- verify bound

int run_verify_bound(const std::string& in, int k, const std::string& mode_str,
                     const std::string& report_path, int threads) {
  auto graphs = load_graphs(in);
  if (graphs.empty()) throw std::invalid_argument(in + ": no graphs to verify");
  Mode mode = mode_from_name(mode_str);
  bool all_ok = true;
  std::ostringstream json;
  json << "{\n  \"check\": \"bound\",\n  \"mode\": \"" << mode_name(mode)
       << "\",\n  \"k\": " << k << ",\n  \"graphs\": [\n";
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const int n = g.order();
    auto reject = [&](const std::string& why) {
      throw std::invalid_argument("graph " + std::to_string(i) + ": " + why +
                                  "; the bound applies to degree-partitioned minimally " +
                                  std::to_string(k) + "-connected graphs of order >= 2k+1");
    };
    if (n < 2 || g.min_degree() < k) reject("a vertex has degree below k");
    if (!is_degree_partitioned(g, k)) reject("not degree-partitioned");
    if (!is_minimally_k_connected(g, k, mode).minimal) {
      reject(std::string("not minimally k-") +
             (mode == Mode::edge ? "edge-connected" : "connected"));
    }
    if (n < 2 * k + 1) reject("order below 2k+1");
    Rational average = all_pairs_report(g, mode, {.threads = threads}).average;
    Rational bound = kappa_bar_upper(k, n);
    Rational cap = nine_eighths(k);
    Rational margin = bound - average;
    const bool ok = average <= bound && bound < cap;
    all_ok = all_ok && ok;
    std::cout << "graph " << i << " n=" << n << ": average=" << average.str() << " (~"
              << approx(average) << ") bound=" << bound.str() << " (~" << approx(bound)
              << ") margin=" << margin.str() << " cap=" << cap.str()
              << (ok ? " pass" : " FAIL") << "\n";
    json << "    {\"index\": " << i << ", \"n\": " << n
         << ", \"average\": " << rational_json(average) << ", \"bound\": " << rational_json(bound)
         << ", \"margin\": " << rational_json(margin) << ", \"pass\": " << (ok ? "true" : "false")
         << "}" << (i + 1 < graphs.size() ? "," : "") << "\n";
  }
  json << "  ],\n  \"pass\": " << (all_ok ? "true" : "false") << "\n}\n";
  if (!report_path.empty()) write_file_atomic(report_path, json.str());
  std::cout << (all_ok ? "bound holds" : "verification FAILED") << "\n";
  return all_ok ? kExitPass : kExitVerificationFail;
}

// ------------------------------------------------------------ search optimal

int run_search_optimal(int n, int k, const std::string& mode_str, const std::string& source,
                       const std::string& in, const std::string& report_path,
                       std::string optima_path, int threads) {
  Mode mode = mode_from_name(mode_str);
  if (source == "file" && in.empty()) {
    throw std::invalid_argument("search optimal: --source file needs --in");
  }
  SearchReport report;
  if (!in.empty()) {
    report = find_optimal(n, k, mode, ingest_graph6(in).graphs, threads);
  } else {
    report = find_optimal_native(n, k, mode, threads);
  }
  emit(search_report_to_json(report), report_path);
  if (optima_path.empty() && !report_path.empty()) {
    std::filesystem::path base(report_path);
    base.replace_extension(".g6");
    optima_path = base.string();
    if (optima_path == report_path) optima_path += ".optima";
  }
  if (!optima_path.empty()) {
    std::vector<Graph> optima;
    optima.reserve(report.optima.size());
    for (const auto& line : report.optima) optima.push_back(decode_graph6(line));
    write_graph6_file(optima_path, optima);
  }
  if (report.bound_satisfied && !*report.bound_satisfied) return kExitVerificationFail;
  return kExitPass;
}

// ----------------------------------------------------------- search evidence

int run_search_evidence(int k, const std::string& n_range_str, const std::string& mode_str,
                        const std::string& report_path, int threads) {
  Range range = parse_range(n_range_str, "--n-range");
  Mode mode = mode_from_name(mode_str);
  EvidenceResult evidence = conjecture_evidence(k, range.lo, range.hi, mode, threads);
  emit(evidence_to_json(evidence), report_path);
  return evidence.consistent ? kExitPass : kExitVerificationFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"avgconn: exact average vertex/edge connectivity, extremal bipartite "
               "constructions, separator certificates, disjoint-path witnesses and "
               "small-order extremal search"};
  app.require_subcommand(1);

  int threads = 0;
  unsigned long long seed = 1729;
  std::string tier = "default";
  app.add_option("--threads", threads, "worker threads (0 = AVGCONN_THREADS env or hardware)")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized spot checks")->capture_default_str();
  app.add_option("--tier", tier, "default|long: gates long-running sweeps")
      ->check(CLI::IsMember({"default", "long"}))
      ->capture_default_str();

  std::function<int()> task;

  // construct
  std::string c_family, c_format = "graph6", c_out, c_sidecar;
  int c_k = 0, c_p = 0, c_r = 0;
  auto* construct = app.add_subcommand("construct", "emit a construction-family graph");
  construct->fallthrough();
  construct->add_option("--family", c_family, "gkp|gamma|psi|phi")->required();
  construct->add_option("--k", c_k, "connectivity parameter (>= 3)")->required();
  construct->add_option("--p", c_p, "cycle length (gkp/gamma/psi)");
  construct->add_option("--r", c_r, "phi multiplier: p = r*k^2 - 1");
  construct->add_option("--format", c_format, "graph6|edgelist|dot")->capture_default_str();
  construct->add_option("--out", c_out, "output file (stdout when omitted)");
  construct->add_option("--sidecar", c_sidecar, "write a JSON sidecar with parameters and labels");
  construct->callback([&] {
    task = [&] { return run_construct(c_family, c_k, c_p, c_r, c_format, c_out, c_sidecar); };
  });

  // analyze
  std::string a_in, a_mode = "vertex", a_format = "json", a_out;
  bool a_shortcut = false;
  double a_spot = 0.0;
  auto* analyze = app.add_subcommand("analyze", "all-pairs connectivity report for one graph");
  analyze->fallthrough();
  analyze->add_option("--in", a_in, "graph6 file with exactly one graph")->required();
  analyze->add_option("--mode", a_mode, "vertex|edge")->capture_default_str();
  analyze->add_option("--format", a_format, "json|csv")->capture_default_str();
  analyze->add_option("--out", a_out, "report file (stdout when omitted)");
  analyze->add_flag("--degree-shortcut", a_shortcut,
                    "fill squeezed pairs (min degree equals global) without flows");
  analyze->add_option("--spot-check", a_spot,
                      "recompute a seeded random fraction of pairs with direct flows");
  analyze->callback([&] {
    task = [&] {
      return run_analyze(a_in, a_mode, a_format, a_out, a_shortcut, a_spot, seed, threads);
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check structural claims; exit 1 on violation");
  verify->require_subcommand(1);
  verify->fallthrough();

  std::string vm_in, vm_mode = "vertex", vm_report;
  int vm_k = 0;
  bool vm_shortcut = false;
  auto* v_minimal = verify->add_subcommand("minimal", "minimal k-(edge-)connectivity per graph");
  v_minimal->fallthrough();
  v_minimal->add_option("--in", vm_in, "graph6 file")->required();
  v_minimal->add_option("--k", vm_k, "target connectivity")->required();
  v_minimal->add_option("--mode", vm_mode, "vertex|edge")->capture_default_str();
  v_minimal->add_flag("--endpoint-shortcut", vm_shortcut,
                      "test only the deleted edge's endpoint pair per deletion");
  v_minimal->add_option("--report", vm_report, "write a JSON verdict file");
  v_minimal->callback([&] {
    task = [&] { return run_verify_minimal(vm_in, vm_k, vm_mode, vm_shortcut, vm_report); };
  });

  std::string vs_report;
  int vs_k = 0, vs_p = 0;
  auto* v_sep = verify->add_subcommand(
      "separators", "enumerate minimal separators of the gkp family and classify each");
  v_sep->fallthrough();
  v_sep->add_option("--k", vs_k, "family parameter k")->required();
  v_sep->add_option("--p", vs_p, "family parameter p")->required();
  v_sep->add_option("--report", vs_report, "write a JSON verdict file");
  v_sep->callback([&] {
    task = [&] { return run_verify_separators(vs_k, vs_p, vs_report, threads); };
  });

  std::string vp_t_range, vp_r_range, vp_report;
  int vp_k = 0, vp_p = 0;
  auto* v_paths = verify->add_subcommand(
      "paths", "disjoint-path witnesses between W-pairs of the psi family");
  v_paths->fallthrough();
  v_paths->add_option("--k", vp_k, "family parameter k (3, 4 or 5)")->required();
  v_paths->add_option("--p", vp_p, "cycle length (default 4s)");
  v_paths->add_option("--t-range", vp_t_range, "A:B inclusive range of W-pair offsets t");
  v_paths->add_option("--r-range", vp_r_range, "A:B inclusive range of fanout offsets r");
  v_paths->add_option("--report", vp_report, "write a JSON verdict file");
  v_paths->callback([&] {
    task = [&] {
      return run_verify_paths(vp_k, vp_p, vp_t_range, vp_r_range, tier, vp_report, threads);
    };
  });

  std::string vb_in, vb_mode = "vertex", vb_report;
  int vb_k = 0;
  auto* v_bound = verify->add_subcommand(
      "bound", "average-connectivity upper bound for degree-partitioned minimal graphs");
  v_bound->fallthrough();
  v_bound->add_option("--in", vb_in, "graph6 file")->required();
  v_bound->add_option("--k", vb_k, "connectivity parameter")->required();
  v_bound->add_option("--mode", vb_mode, "vertex|edge")->capture_default_str();
  v_bound->add_option("--report", vb_report, "write a JSON verdict file");
  v_bound->callback([&] {
    task = [&] { return run_verify_bound(vb_in, vb_k, vb_mode, vb_report, threads); };
  });

  // search
  auto* search = app.add_subcommand("search", "small-order extremal search");
  search->require_subcommand(1);
  search->fallthrough();

  std::string so_mode = "vertex", so_source = "native", so_in, so_report, so_optima;
  int so_n = 0, so_k = 0;
  auto* s_optimal = search->add_subcommand(
      "optimal", "maximize average connectivity over minimally k-connected graphs of order n");
  s_optimal->fallthrough();
  s_optimal->add_option("--n", so_n, "graph order")->required();
  s_optimal->add_option("--k", so_k, "connectivity parameter")->required();
  s_optimal->add_option("--mode", so_mode, "vertex|edge")->capture_default_str();
  s_optimal->add_option("--source", so_source, "native|file")
      ->check(CLI::IsMember({"native", "file"}))
      ->capture_default_str();
  s_optimal->add_option("--in", so_in, "graph6 candidate file (implies --source file)");
  s_optimal->add_option("--report", so_report, "JSON report path (stdout when omitted)");
  s_optimal->add_option("--optima", so_optima,
                        "graph6 file for the optima (defaults next to --report)");
  s_optimal->callback([&] {
    task = [&] {
      return run_search_optimal(so_n, so_k, so_mode, so_source, so_in, so_report, so_optima,
                                threads);
    };
  });

  std::string se_mode = "vertex", se_range, se_report;
  int se_k = 0;
  auto* s_evidence = search->add_subcommand(
      "evidence", "degree-partitioned verdict for every optimum over an order range");
  s_evidence->fallthrough();
  s_evidence->add_option("--k", se_k, "connectivity parameter")->required();
  s_evidence->add_option("--n-range", se_range, "A:B inclusive order range (A >= 2k+1)")
      ->required();
  s_evidence->add_option("--mode", se_mode, "vertex|edge")->capture_default_str();
  s_evidence->add_option("--report", se_report, "JSON report path (stdout when omitted)");
  s_evidence->callback([&] {
    task = [&] { return run_search_evidence(se_k, se_range, se_mode, se_report, threads); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    return task();
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency check failed: " << e.what() << "\n";
    return kExitVerificationFail;
  } catch (const std::overflow_error& e) {
    std::cerr << "arithmetic overflow: " << e.what() << "\n";
    return kExitVerificationFail;
  } catch (const std::runtime_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFail;
  }
}
