#include "nonsep/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/graph.hpp"
#include "nonsep/oracle.hpp"
#include "nonsep/shapes.hpp"
#include "nonsep/sweep.hpp"

namespace nonsep {

namespace {

EdgeListFile load_host(const std::string& input) {
  if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_edge_list(ss.str());
  }
  return read_edge_list_file(input);
}

std::vector<VertexId> parse_map(const std::string& text) {
  std::string norm = text;
  for (char& c : norm)
    if (c == ',') c = ' ';
  std::istringstream in(norm);
  std::vector<VertexId> out;
  long long v = 0;
  while (in >> v) out.push_back(static_cast<VertexId>(v));
  if (!in.eof()) throw parse_error("bad vertex map '" + text + "'");
  return out;
}

void print_map(const Embedding& e) {
  std::cout << "map";
  for (VertexId v : e.map) std::cout << ' ' << v;
  std::cout << '\n';
}

int do_find(const std::string& input, const std::string& shape_text, int k) {
  const ShapeSpec spec = ShapeSpec::parse(shape_text);
  if (!spec.directed() && k != 2)
    throw parse_error("find: undirected finders support only k=2");
  EdgeListFile host = load_host(input);
  if (host.directed != spec.directed())
    throw parse_error("find: host direction does not match the shape");
  const FinderRun run = run_finder(host.directed ? nullptr : &host.graph,
                                   host.directed ? &host.digraph : nullptr, spec);
  bool ok;
  if (host.directed) {
    ok = embedding_valid(host.digraph, run.tree) &&
         oracle_strong_excluding(host.digraph,
                                 embedding_vertices(run.tree, host.digraph.order()));
  } else {
    ok = embedding_valid(host.graph, run.tree) &&
         oracle_k_connected_excluding(host.graph,
                                      embedding_vertices(run.tree, host.graph.order()), 2);
  }
  if (!ok)
    throw contradiction_error("finder result failed oracle verification",
                              host.directed ? to_edge_list(host.digraph)
                                            : to_edge_list(host.graph));
  std::cout << "found " << run.tree.shape.to_string() << '\n';
  print_map(run.tree);
  if (spec.directed()) {
    std::cout << "iterations " << run.iterations << '\n';
    std::cout << "trace";
    for (const TraceEntry& t : run.trace) std::cout << ' ' << t.step << ':' << t.component_size;
    std::cout << '\n';
  }
  std::cout << "verified true\n";
  return 0;
}

int do_verify(const std::string& input, const std::string& shape_text,
              const std::string& map_text, int k) {
  const ShapeSpec spec = ShapeSpec::parse(shape_text);
  EdgeListFile host = load_host(input);
  if (host.directed != spec.directed())
    throw parse_error("verify: host direction does not match the shape");
  const Embedding e{spec, parse_map(map_text)};
  try {
    if (host.directed)
      check_embedding(host.digraph, e);
    else
      check_embedding(host.graph, e);
  } catch (const error& ex) {
    std::cout << "verified false\n";
    std::cout << "reason " << ex.what() << '\n';
    return 2;
  }
  const bool ok = host.directed ? nonseparating(host.digraph, e)
                                : nonseparating(host.graph, e, k);
  if (!ok) {
    std::cout << "verified false\n";
    std::cout << "reason remainder loses the required connectivity\n";
    return 2;
  }
  std::cout << "verified true\n";
  return 0;
}

int do_oracle(const std::string& input, const std::string& shape_text, int k) {
  const ShapeSpec spec = ShapeSpec::parse(shape_text);
  EdgeListFile host = load_host(input);
  if (host.directed != spec.directed())
    throw parse_error("oracle: host direction does not match the shape");
  const std::optional<Embedding> e = host.directed
                                         ? oracle_find_nonseparating(host.digraph, spec)
                                         : oracle_find_nonseparating(host.graph, spec, k);
  if (!e) {
    std::cout << "none\n";
    return 2;
  }
  std::cout << "found " << e->shape.to_string() << '\n';
  print_map(*e);
  return 0;
}

int do_gen(int n, int delta, int k, std::uint64_t seed, bool directed,
           const std::string& named) {
  if (!named.empty()) {
    std::cout << to_edge_list(named_graph(named));
    return 0;
  }
  if (n <= 0) throw parse_error("gen: --n is required for random instances");
  if (directed)
    std::cout << to_edge_list(gen_random_digraph(n, delta, seed));
  else
    std::cout << to_edge_list(gen_random_graph(n, delta, k, seed));
  return 0;
}

int do_sweep(SweepConfig cfg, const std::string& shape_text, const std::string& n_range,
             const std::string& mode_text, const std::string& output) {
  cfg.shape = ShapeSpec::parse(shape_text);
  if (!n_range.empty()) {
    const auto colon = n_range.find(':');
    try {
      if (colon == std::string::npos) {
        cfg.n_lo = cfg.n_hi = std::stoi(n_range);
      } else {
        cfg.n_lo = std::stoi(n_range.substr(0, colon));
        cfg.n_hi = std::stoi(n_range.substr(colon + 1));
      }
    } catch (const std::exception&) {
      throw parse_error("sweep: bad --n range '" + n_range + "'");
    }
  }
  if (mode_text == "auto")
    cfg.mode = SweepMode::Auto;
  else if (mode_text == "finder")
    cfg.mode = SweepMode::Finder;
  else if (mode_text == "oracle")
    cfg.mode = SweepMode::Oracle;
  else
    throw parse_error("sweep: bad --mode '" + mode_text + "'");
  std::ofstream file;
  std::ostream* lines = &std::cout;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw parse_error("sweep: cannot open output file '" + output + "'");
    lines = &file;
  }
  const std::vector<InstanceReport> reports = run_sweep(cfg, lines);
  int found = 0;
  int missing = 0;
  int precondition = 0;
  int contradiction = 0;
  for (const InstanceReport& r : reports) {
    if (r.outcome == "found")
      ++found;
    else if (r.outcome == "not-found")
      ++missing;
    else if (r.outcome == "precondition-failed")
      ++precondition;
    else
      ++contradiction;
  }
  std::cerr << "sweep: " << reports.size() << " instances — found " << found << ", not-found "
            << missing << ", precondition-failed " << precondition << ", contradiction "
            << contradiction << '\n';
  return contradiction > 0 ? 4 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"constructive search for nonseparating subtrees"};
  app.require_subcommand(1);

  auto* find = app.add_subcommand("find", "run the constructive finder on a host graph");
  std::string find_input;
  std::string find_shape;
  int find_k = 2;
  find->add_option("--input", find_input, "edge-list file, or - for stdin")->required();
  find->add_option("--shape", find_shape, "shape spec, e.g. ps:2:5 or os:3")->required();
  find->add_option("--k", find_k, "connectivity the remainder keeps (undirected, only 2)");

  auto* verify = app.add_subcommand("verify", "check a claimed embedding");
  std::string verify_input;
  std::string verify_shape;
  std::string verify_map;
  int verify_k = 2;
  verify->add_option("--input", verify_input, "edge-list file, or - for stdin")->required();
  verify->add_option("--shape", verify_shape, "shape spec")->required();
  verify->add_option("--map", verify_map, "host vertices in canonical layout order")->required();
  verify->add_option("--k", verify_k, "connectivity the remainder must keep");

  auto* oracle = app.add_subcommand("oracle", "exhaustive search, independent of the finders");
  std::string oracle_input;
  std::string oracle_shape;
  int oracle_k = 2;
  oracle->add_option("--input", oracle_input, "edge-list file, or - for stdin")->required();
  oracle->add_option("--shape", oracle_shape, "shape spec")->required();
  oracle->add_option("--k", oracle_k, "connectivity the remainder must keep");

  auto* gen = app.add_subcommand("gen", "emit a generated host graph as an edge list");
  int gen_n = 0;
  int gen_delta = 0;
  int gen_k = 0;
  std::uint64_t gen_seed = 1;
  bool gen_directed = false;
  std::string gen_named;
  gen->add_option("--n", gen_n, "number of vertices");
  gen->add_option("--delta", gen_delta, "minimum (semi-)degree");
  gen->add_option("--k", gen_k, "minimum connectivity (undirected)");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_flag("--directed", gen_directed, "generate a strongly connected digraph");
  gen->add_option("--named", gen_named, "catalog instance: cycle:n, wheel:n, kbip:a:b, petersen");

  auto* sweep = app.add_subcommand("sweep", "run many instances and stream JSON-line reports");
  SweepConfig cfg;
  std::string sweep_shape;
  std::string sweep_n;
  std::string sweep_mode = "auto";
  std::string sweep_output;
  cfg.witness_dir = "witnesses";
  sweep->add_option("--shape", sweep_shape, "shape spec")->required();
  sweep->add_option("--count", cfg.count, "number of instances");
  sweep->add_option("--seed", cfg.seed, "master seed");
  sweep->add_option("--family", cfg.family, "random, named:<name>, or file:<path>");
  sweep->add_option("--n", sweep_n, "host order or lo:hi range (random family)");
  sweep->add_option("--delta", cfg.delta, "minimum (semi-)degree; default is the theorem bound");
  sweep->add_flag("--probe", cfg.probe, "force delta = m, one below the theorem bound");
  sweep->add_option("--mode", sweep_mode, "auto, finder, or oracle");
  sweep->add_option("--jobs", cfg.jobs, "worker threads");
  sweep->add_option("--witnesses", cfg.witness_dir, "directory for contradiction dumps");
  sweep->add_option("--output", sweep_output, "write the JSON lines here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (find->parsed()) return do_find(find_input, find_shape, find_k);
    if (verify->parsed()) return do_verify(verify_input, verify_shape, verify_map, verify_k);
    if (oracle->parsed()) return do_oracle(oracle_input, oracle_shape, oracle_k);
    if (gen->parsed()) return do_gen(gen_n, gen_delta, gen_k, gen_seed, gen_directed, gen_named);
    if (sweep->parsed()) return do_sweep(cfg, sweep_shape, sweep_n, sweep_mode, sweep_output);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const precondition_error& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 1;
  } catch (const not_found_error& e) {
    std::cerr << "not found: " << e.what() << '\n';
    if (!e.witness().empty()) std::cerr << e.witness();
    return 2;
  } catch (const contradiction_error& e) {
    std::cerr << "contradiction: " << e.what() << '\n';
    if (!e.witness().empty()) std::cerr << e.witness();
    return 4;
  }
  return 3;
}

}  // namespace nonsep
