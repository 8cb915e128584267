#include "nonsep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

#include "json.hpp"
#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/graph_finder.hpp"
#include "nonsep/oracle.hpp"

namespace nonsep {

namespace {

struct ResolvedRandom {
  int lo = 0;
  int hi = 0;
  int delta = 0;
};

SweepMode resolve_mode(const SweepConfig& cfg) {
  if (cfg.mode != SweepMode::Auto) return cfg.mode;
  return cfg.probe ? SweepMode::Oracle : SweepMode::Finder;
}

ResolvedRandom resolve_random(const SweepConfig& cfg) {
  const bool directed = cfg.shape.directed();
  const int m = cfg.shape.m;
  ResolvedRandom r;
  r.delta = cfg.probe ? m : (cfg.delta >= 0 ? cfg.delta : (directed ? m + 1 : m + 2));
  const int floor_n = std::max({directed ? m + 2 : m + 3, r.delta + 1, 3});
  r.lo = cfg.n_lo > 0 ? cfg.n_lo : floor_n;
  if (cfg.n_hi > 0) {
    r.hi = cfg.n_hi;
  } else if (resolve_mode(cfg) == SweepMode::Oracle) {
    r.hi = std::max(r.lo, 12);  // exhaustive search: keep the default desk-scale
  } else {
    r.hi = std::max(r.lo, directed ? 30 : 25);
  }
  if (r.lo < std::max(m + 1, r.delta + 1))
    throw parse_error("sweep: host range too small for the shape");
  if (r.hi < r.lo) throw parse_error("sweep: empty host range");
  return r;
}

struct Host {
  std::optional<Graph> graph;
  std::optional<Digraph> digraph;
};

Host make_host(const SweepConfig& cfg, std::uint64_t iseed) {
  const bool directed = cfg.shape.directed();
  Host host;
  if (cfg.family == "random") {
    const ResolvedRandom r = resolve_random(cfg);
    std::mt19937_64 meta(iseed);
    const int n = r.lo + static_cast<int>(uniform_below(meta, r.hi - r.lo + 1));
    const std::uint64_t gseed = meta();
    if (directed)
      host.digraph = gen_random_digraph(n, r.delta, gseed);
    else
      host.graph = gen_random_graph(n, r.delta, 2, gseed);
    return host;
  }
  if (cfg.family.rfind("named:", 0) == 0) {
    if (directed) throw parse_error("sweep: the named catalog is undirected");
    host.graph = named_graph(cfg.family.substr(6));
    return host;
  }
  if (cfg.family.rfind("file:", 0) == 0) {
    EdgeListFile f = read_edge_list_file(cfg.family.substr(5));
    if (f.directed != directed)
      throw parse_error("sweep: host file direction does not match the shape");
    if (directed)
      host.digraph = std::move(f.digraph);
    else
      host.graph = std::move(f.graph);
    return host;
  }
  throw parse_error("sweep: unknown family '" + cfg.family + "'");
}

// Finder results are re-verified by the elementary oracle; oracle results
// by the flow/articulation kernel.  Either way the two independent
// implementations must agree before "found" is reported.
bool cross_verified(const Host& host, const Embedding& e, bool found_by_oracle) {
  if (host.digraph) {
    if (!embedding_valid(*host.digraph, e)) return false;
    const VertexSet t = embedding_vertices(e, host.digraph->order());
    return found_by_oracle ? nonseparating(*host.digraph, e)
                           : oracle_strong_excluding(*host.digraph, t);
  }
  if (!embedding_valid(*host.graph, e)) return false;
  const VertexSet t = embedding_vertices(e, host.graph->order());
  return found_by_oracle ? nonseparating(*host.graph, e, 2)
                         : oracle_k_connected_excluding(*host.graph, t, 2);
}

std::string host_text(const Host& host) {
  return host.digraph ? to_edge_list(*host.digraph) : to_edge_list(*host.graph);
}

void dump_witness(const SweepConfig& cfg, const InstanceReport& rep, const Host& host,
                  const std::string& message, const std::string& witness) {
  if (cfg.witness_dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(cfg.witness_dir, ec);
  const std::string path = cfg.witness_dir + "/sweep-" + std::to_string(cfg.seed) + "-" +
                           std::to_string(rep.instance) + ".txt";
  std::ofstream out(path);
  auto comment_block = [&](const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out << "# " << line << '\n';
  };
  out << "# shape " << rep.shape << '\n';
  out << "# instance " << rep.instance << " seed " << rep.seed << '\n';
  comment_block(message);
  if (!witness.empty()) comment_block(witness);
  out << host_text(host);
}

}  // namespace

FinderRun run_finder(const Graph* g, const Digraph* d, const ShapeSpec& s) {
  s.validate();
  if (s.directed() ? d == nullptr : g == nullptr)
    throw parse_error("finder: host direction does not match the shape");
  switch (s.kind) {
    case ShapeKind::Path:
      return {find_path_graph(*g, s.m), 0, {}};
    case ShapeKind::Star:
      return {find_star_graph(*g, s.m), 0, {}};
    case ShapeKind::DoubleStar:
      return {find_double_star_graph(*g, s.m, s.a), 0, {}};
    case ShapeKind::PathStar:
      return {find_path_star(*g, s.r, s.m), 0, {}};
    case ShapeKind::PathDoubleStar1:
    case ShapeKind::PathDoubleStar2:
      return {find_path_double_star(*g, s.r, s.m, s.a, s.kind), 0, {}};
    case ShapeKind::OutStar:
    case ShapeKind::InStar: {
      DigraphFindResult r = find_star_digraph(*d, s.m);
      return {std::move(r.tree), r.iterations, std::move(r.trace)};
    }
    case ShapeKind::OutDoubleStar:
    case ShapeKind::InDoubleStar:
    case ShapeKind::OutInDoubleStar: {
      DigraphFindResult r = find_double_star_digraph(*d, s.m, s.r, s.s);
      return {std::move(r.tree), r.iterations, std::move(r.trace)};
    }
  }
  throw parse_error("finder: unsupported shape");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string report_json_line(const InstanceReport& r) {
  nlohmann::json trace = nlohmann::json::array();
  for (const TraceEntry& t : r.trace)
    trace.push_back({{"step", t.step}, {"component", t.component_size}});
  const nlohmann::json j{{"instance", r.instance},
                         {"seed", r.seed},
                         {"n", r.n},
                         {"shape", r.shape},
                         {"outcome", r.outcome},
                         {"kind_found", r.kind_found},
                         {"iterations", r.iterations},
                         {"trace", trace},
                         {"verified", r.verified},
                         {"wall_ms", r.wall_ms}};
  return j.dump();
}

InstanceReport run_sweep_instance(const SweepConfig& cfg, int index) {
  cfg.shape.validate();
  InstanceReport rep;
  rep.instance = index;
  rep.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(index));
  rep.shape = cfg.shape.to_string();
  const Host host = make_host(cfg, rep.seed);
  rep.n = host.digraph ? host.digraph->order() : host.graph->order();
  const SweepMode mode = resolve_mode(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (mode == SweepMode::Finder) {
      FinderRun out = run_finder(host.graph ? &*host.graph : nullptr,
                                 host.digraph ? &*host.digraph : nullptr, cfg.shape);
      rep.iterations = out.iterations;
      rep.trace = std::move(out.trace);
      if (cross_verified(host, out.tree, false)) {
        rep.outcome = "found";
        rep.kind_found = out.tree.shape.to_string();
        rep.verified = true;
      } else {
        rep.outcome = "contradiction";
        dump_witness(cfg, rep, host, "finder result failed oracle verification", "");
      }
    } else {
      std::optional<Embedding> hit;
      for (const ShapeSpec& member : shape_family(cfg.shape)) {
        hit = host.digraph ? oracle_find_nonseparating(*host.digraph, member)
                           : oracle_find_nonseparating(*host.graph, member, 2);
        if (hit) break;
      }
      if (!hit) {
        rep.outcome = "not-found";
      } else if (cross_verified(host, *hit, true)) {
        rep.outcome = "found";
        rep.kind_found = hit->shape.to_string();
        rep.verified = true;
      } else {
        rep.outcome = "contradiction";
        dump_witness(cfg, rep, host, "oracle result failed kernel verification", "");
      }
    }
  } catch (const precondition_error&) {
    rep.outcome = "precondition-failed";
  } catch (const not_found_error&) {
    rep.outcome = "not-found";
  } catch (const contradiction_error& e) {
    rep.outcome = "contradiction";
    dump_witness(cfg, rep, host, e.what(), e.witness());
  } catch (const std::exception& e) {
    rep.outcome = "contradiction";
    dump_witness(cfg, rep, host, std::string("unexpected error: ") + e.what(), "");
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

std::vector<InstanceReport> run_sweep(const SweepConfig& cfg, std::ostream* lines) {
  cfg.shape.validate();
  if (cfg.count < 0) throw parse_error("sweep: negative instance count");
  if (cfg.family == "random") resolve_random(cfg);  // surface config errors up front
  else make_host(cfg, mix_seed(cfg.seed, 0));
  const int count = cfg.count;
  std::vector<std::optional<InstanceReport>> slots(count);
  std::atomic<int> next{0};
  std::mutex out_mutex;
  int written = 0;
  auto flush = [&]() {  // caller holds out_mutex
    while (written < count && slots[written].has_value()) {
      if (lines) *lines << report_json_line(*slots[written]) << '\n';
      ++written;
    }
  };
  auto work = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      InstanceReport r = run_sweep_instance(cfg, i);
      const std::lock_guard<std::mutex> lock(out_mutex);
      slots[i] = std::move(r);
      flush();
    }
  };
  const int jobs = std::max(1, std::min(cfg.jobs, count));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  std::vector<InstanceReport> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace nonsep
