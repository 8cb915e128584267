// Acceptance gate: one self-contained check per guarantee the library makes,
// each printed as a single PASS/FAIL line.  Every check regenerates its own
// instances deterministically and re-verifies results through the brute-force
// oracles, so a pass certifies the constructive finders against independent
// implementations, not against themselves.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/digraph_finder.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/graph.hpp"
#include "nonsep/graph_finder.hpp"
#include "nonsep/oracle.hpp"
#include "nonsep/shapes.hpp"
#include "nonsep/sweep.hpp"
#include "test_support.hpp"

using namespace nonsep;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool in_family(const ShapeSpec& requested, const ShapeSpec& realized) {
  const auto fam = shape_family(requested);
  return std::any_of(fam.begin(), fam.end(),
                     [&](const ShapeSpec& f) { return f == realized; });
}

// Two bidirected cliques joined by a single digon: strongly connected with
// semi-degree min(qa, qb) - 1, and any tree near the bridge leaves a split
// remainder, so the directed finders actually take improvement steps here.
Digraph digon_cluster_host(int qa, int qb) {
  DigraphBuilder b(qa + qb);
  for (VertexId u = 0; u < qa; ++u)
    for (VertexId v = 0; v < qa; ++v)
      if (u != v) b.add_arc(u, v);
  for (VertexId u = qa; u < qa + qb; ++u)
    for (VertexId v = qa; v < qa + qb; ++v)
      if (u != v) b.add_arc(u, v);
  b.add_arc(0, qa);
  b.add_arc(qa, 0);
  return b.build();
}

// Two random 3-connected graphs glued on the vertex pair {0, 1}: the result
// has connectivity exactly 2 with {0, 1} a minimum separator and the two
// interiors as its fragments, and minimum degree at least 5.
Graph glued_pair(int qa, int qb, std::uint64_t seed) {
  const Graph a = gen_random_graph(qa, 5, 3, mix_seed(seed, 1));
  const Graph b = gen_random_graph(qb, 5, 3, mix_seed(seed, 2));
  GraphBuilder out(qa + qb - 2);
  for (const auto& [u, v] : a.edge_list()) out.add_edge(u, v);
  const auto shift = [qa](VertexId v) { return v < 2 ? v : qa + v - 2; };
  for (const auto& [u, v] : b.edge_list()) out.add_edge(shift(u), shift(v));
  return out.build();
}

// 1. Oriented stars on random strongly connected hosts: the finder must
// succeed on every instance at the semi-degree threshold, the oracle must
// confirm every remainder, and no instance may take a second.
Outcome oriented_star_sweep() {
  std::mt19937_64 meta(0xA1);
  double worst = 0.0;
  int looped = 0;
  for (int i = 0; i < 500; ++i) {
    const int m = 3 + i % 3;
    const Digraph d = i % 5 == 4
                          ? digon_cluster_host(pick(meta, m + 2, m + 5), pick(meta, m + 2, m + 5))
                          : gen_random_digraph(pick(meta, m + 2, 30), m + 1, mix_seed(0xA1A1, i));
    const int n = d.order();
    const auto t0 = std::chrono::steady_clock::now();
    DigraphFindResult run;
    try {
      run = find_star_digraph(d, m);
    } catch (const std::exception& e) {
      return {false, "instance " + std::to_string(i) + " raised: " + e.what()};
    }
    const double ms = elapsed_ms(t0);
    worst = std::max(worst, ms);
    if (ms >= 1000.0)
      return {false, "instance " + std::to_string(i) + " took " + fmt_ms(ms)};
    if (!embedding_valid(d, run.tree))
      return {false, "instance " + std::to_string(i) + ": embedding invalid"};
    if (run.tree.map.size() != static_cast<std::size_t>(m))
      return {false, "instance " + std::to_string(i) + ": wrong tree order"};
    if (!oracle_strong_excluding(d, embedding_vertices(run.tree, n)))
      return {false, "instance " + std::to_string(i) + ": remainder not strongly connected"};
    if (!run.trace.empty()) ++looped;
  }
  return {true, "500/500 found and oracle-verified (" + std::to_string(looped) +
                    " via improvement steps), worst instance " + fmt_ms(worst)};
}

// 2. Oriented double stars across every legal leaf split; improvement traces
// must grow strictly and stay within n accepted steps.
Outcome oriented_double_star_sweep() {
  static constexpr int combos[6][3] = {{4, 1, 1}, {5, 1, 2}, {5, 2, 1},
                                       {6, 1, 3}, {6, 2, 2}, {6, 3, 1}};
  std::mt19937_64 meta(0xA2);
  int looped = 0;
  for (int i = 0; i < 500; ++i) {
    const int m = combos[i % 6][0];
    const int r = combos[i % 6][1];
    const int s = combos[i % 6][2];
    const Digraph d = i % 5 == 4
                          ? digon_cluster_host(pick(meta, m + 2, m + 5), pick(meta, m + 2, m + 5))
                          : gen_random_digraph(pick(meta, m + 2, 30), m + 1, mix_seed(0xA2A2, i));
    const int n = d.order();
    DigraphFindResult run;
    try {
      run = find_double_star_digraph(d, m, r, s);
    } catch (const std::exception& e) {
      return {false, "instance " + std::to_string(i) + " raised: " + e.what()};
    }
    if (!embedding_valid(d, run.tree) ||
        !oracle_strong_excluding(d, embedding_vertices(run.tree, n)))
      return {false, "instance " + std::to_string(i) + ": result failed oracle verification"};
    if (run.tree.shape.m != m || run.tree.shape.r != r || run.tree.shape.s != s)
      return {false, "instance " + std::to_string(i) + ": wrong realized split"};
    if (run.iterations != static_cast<int>(run.trace.size()) || run.iterations > n)
      return {false, "instance " + std::to_string(i) + ": iteration accounting broken"};
    int prev = 0;
    for (const TraceEntry& t : run.trace) {
      if (t.component_size <= prev)
        return {false, "instance " + std::to_string(i) + ": trace not strictly increasing"};
      prev = t.component_size;
    }
    if (!run.trace.empty()) ++looped;
  }
  return {true, "500/500 verified; " + std::to_string(looped) +
                    " entered the improvement loop, all traces strictly increasing"};
}

// 3. Path-stars and path-double-stars over every legal path length at the
// degree threshold; remainders re-checked at connectivity 2 by the oracle.
Outcome path_tree_sweep() {
  static const char* shapes[10] = {"ps:1:4",   "ps:1:5",   "ps:2:5",   "ps:1:6",   "ps:2:6",
                                   "ps:3:6",   "pds1:1:5", "pds1:1:6", "pds2:1:6", "pds1:2:6"};
  std::mt19937_64 meta(0xA3);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ShapeSpec spec = ShapeSpec::parse(shapes[i % 10]);
    const int n = pick(meta, spec.m + 3, 25);
    const Graph g = gen_random_graph(n, spec.m + 2, 2, mix_seed(0xA3A3, i));
    const auto t0 = std::chrono::steady_clock::now();
    FinderRun run;
    try {
      run = run_finder(&g, nullptr, spec);
    } catch (const std::exception& e) {
      return {false, std::string(shapes[i % 10]) + " instance " + std::to_string(i) +
                         " raised: " + e.what()};
    }
    const double ms = elapsed_ms(t0);
    worst = std::max(worst, ms);
    if (ms >= 10000.0)
      return {false, "instance " + std::to_string(i) + " took " + fmt_ms(ms)};
    if (!embedding_valid(g, run.tree))
      return {false, "instance " + std::to_string(i) + ": embedding invalid"};
    if (!in_family(spec, run.tree.shape))
      return {false, "instance " + std::to_string(i) + ": realized shape outside the family"};
    if (!oracle_k_connected_excluding(g, embedding_vertices(run.tree, n), 2))
      return {false, "instance " + std::to_string(i) + ": remainder not 2-connected"};
  }
  return {true, "200/200 verified 2-connected remainders, worst instance " + fmt_ms(worst)};
}

// 4. On a corpus of small hosts (n <= 10) meeting each finder's stated
// preconditions, the constructive finder and the exhaustive oracle must
// agree: both find a tree, and the finder's tree passes the oracle's check.
Outcome small_host_agreement() {
  struct Row {
    const char* shape;
    int delta;
    int kmin;  // connectivity forced on the generated host (undirected only)
    int n_lo;
  };
  static const Row undirected[] = {
      {"path:3", 5, 3, 6},   {"path:4", 6, 3, 7},   {"star:3", 5, 2, 6},
      {"star:4", 6, 2, 7},   {"dstar:4:1", 6, 2, 7}, {"dstar:5:2", 7, 2, 8},
      {"dstar:6:2", 8, 2, 9}, {"ps:1:4", 6, 2, 7},   {"ps:1:5", 7, 2, 8},
      {"ps:2:5", 7, 2, 8},   {"ps:1:6", 8, 2, 9},   {"ps:2:6", 8, 2, 9},
      {"ps:3:6", 8, 2, 9},   {"pds1:1:5", 7, 2, 8}, {"pds1:1:6", 8, 2, 9},
      {"pds2:1:6", 8, 2, 9}, {"pds1:2:6", 8, 2, 9},
  };
  static const Row directed[] = {
      {"os:3", 4, 0, 5},       {"is:3", 4, 0, 5},       {"os:4", 5, 0, 6},
      {"is:4", 5, 0, 6},       {"ods:4:1:1", 5, 0, 6},  {"ids:4:1:1", 5, 0, 6},
      {"oids:4:1:1", 5, 0, 6}, {"ods:5:2:1", 6, 0, 7},  {"ids:5:1:2", 6, 0, 7},
  };
  std::mt19937_64 meta(0xA4);
  int instances = 0;
  for (const Row& row : undirected) {
    const ShapeSpec spec = ShapeSpec::parse(row.shape);
    for (int rep = 0; rep < 4; ++rep) {
      const int n = pick(meta, row.n_lo, 10);
      const Graph g =
          gen_random_graph(n, row.delta, row.kmin, mix_seed(0xA4A4, instances));
      ++instances;
      FinderRun run;
      try {
        run = run_finder(&g, nullptr, spec);
      } catch (const std::exception& e) {
        return {false, std::string(row.shape) + " finder raised: " + e.what()};
      }
      if (!oracle_k_connected_excluding(g, embedding_vertices(run.tree, n), 2))
        return {false, std::string(row.shape) + ": finder tree rejected by the oracle"};
      bool oracle_found = false;
      for (const ShapeSpec& member : shape_family(spec))
        if (oracle_find_nonseparating(g, member, 2)) {
          oracle_found = true;
          break;
        }
      if (!oracle_found)
        return {false, std::string(row.shape) + ": finder succeeded, oracle found nothing"};
    }
  }
  for (const Row& row : directed) {
    const ShapeSpec spec = ShapeSpec::parse(row.shape);
    for (int rep = 0; rep < 4; ++rep) {
      const int n = pick(meta, row.n_lo, 10);
      const Digraph d = gen_random_digraph(n, row.delta, mix_seed(0xA4A4, instances));
      ++instances;
      FinderRun run;
      try {
        run = run_finder(nullptr, &d, spec);
      } catch (const std::exception& e) {
        return {false, std::string(row.shape) + " finder raised: " + e.what()};
      }
      if (!oracle_strong_excluding(d, embedding_vertices(run.tree, n)))
        return {false, std::string(row.shape) + ": finder tree rejected by the oracle"};
      bool oracle_found = false;
      for (const ShapeSpec& member : shape_family(spec))
        if (oracle_find_nonseparating(d, member)) {
          oracle_found = true;
          break;
        }
      if (!oracle_found)
        return {false, std::string(row.shape) + ": finder succeeded, oracle found nothing"};
    }
  }
  return {true, std::to_string(instances) + " corpus instances, finder and oracle agreed on all"};
}

// 5. Separator completion invariants on random hosts of connectivity exactly
// 2: every fragment of every minimum separator keeps the completion
// 2-connected, and every end with at least two vertices keeps it 3-connected.
Outcome separator_completion_invariants() {
  std::mt19937_64 meta(0xA5);
  int hosts = 0;
  int fragment_checks = 0;
  int end_checks = 0;
  for (int attempt = 0; attempt < 5000 && hosts < 100; ++attempt) {
    const int n = pick(meta, 6, 14);
    const Graph g = gen_random_graph(n, 3, 2, mix_seed(0xA5A5, attempt));
    if (kappa(g) != 2) continue;
    ++hosts;
    for (const VertexSet& s : minimum_separators(g)) {
      const SeparationContext ctx = fragments(g, s);
      for (const FragmentInfo& fi : ctx.fragments) {
        ++fragment_checks;
        if (!fragment_completion_connected(g, s, fi.fragment, 2))
          return {false, "fragment failed the completion check at connectivity 2"};
      }
    }
    for (const EndPair& e : ends(g)) {
      if (e.fragment.size() < 2) continue;
      ++end_checks;
      if (!fragment_completion_connected(g, e.separator, e.fragment, 3))
        return {false, "large end failed the completion check at connectivity 3"};
    }
  }
  if (hosts < 100)
    return {false, "only " + std::to_string(hosts) + " hosts of connectivity 2 were sampled"};
  return {true, "100 hosts: " + std::to_string(fragment_checks) + " fragment checks at k=2, " +
                    std::to_string(end_checks) + " end checks at k=3, all passed"};
}

// 6. The double-star-from-arc builder succeeds exactly when its three pool
// cardinality hypotheses hold, and every success is a validator-passing
// embedding of the exact requested kind and split.
Outcome double_star_builder_property() {
  std::mt19937_64 meta(0xA6);
  int feasible = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = pick(meta, 4, 12);
    const int delta = pick(meta, 1, 3);
    const Digraph d = gen_random_digraph(n, delta, mix_seed(0xA6A6, i));
    const auto arcs = d.arc_list();
    const auto arc = arcs[static_cast<std::size_t>(uniform_below(meta, arcs.size()))];
    const VertexId u = arc.first;
    const VertexId v = arc.second;
    static constexpr ShapeKind kinds[3] = {ShapeKind::OutDoubleStar, ShapeKind::InDoubleStar,
                                           ShapeKind::OutInDoubleStar};
    const ShapeKind kind = kinds[uniform_below(meta, 3)];
    const int r = pick(meta, 1, 3);
    const int s = pick(meta, 1, 3);
    VertexSet forbidden(n);
    for (VertexId w = 0; w < n; ++w)
      if (w != u && w != v && uniform_below(meta, 4) == 0) forbidden.insert(w);

    VertexSet pu = kind == ShapeKind::InDoubleStar ? d.in_neighbor_set(u) : d.out_neighbor_set(u);
    VertexSet pv = kind == ShapeKind::OutDoubleStar ? d.out_neighbor_set(v) : d.in_neighbor_set(v);
    const VertexSet centers = VertexSet::of(n, {u, v});
    pu -= centers;
    pu -= forbidden;
    pv -= centers;
    pv -= forbidden;
    const bool hypotheses =
        pu.size() >= r && pv.size() >= s && (pu | pv).size() >= r + s;

    const auto e = double_star_from_arc(d, kind, u, v, r, s, forbidden);
    if (e.has_value() != hypotheses)
      return {false, "sample " + std::to_string(i) + ": feasibility disagrees with the pools"};
    if (!e) continue;
    ++feasible;
    if (!embedding_valid(d, *e))
      return {false, "sample " + std::to_string(i) + ": embedding failed validation"};
    if (e->shape.kind != kind || e->shape.m != r + s + 2 || e->shape.r != r || e->shape.s != s)
      return {false, "sample " + std::to_string(i) + ": wrong realized shape"};
    if (e->map[0] != u || e->map[1] != v)
      return {false, "sample " + std::to_string(i) + ": center arc moved"};
    for (std::size_t j = 2; j < e->map.size(); ++j)
      if (forbidden.contains(e->map[j]))
        return {false, "sample " + std::to_string(i) + ": leaf drawn from the forbidden set"};
  }
  return {true, std::to_string(feasible) +
                    "/1000 samples met the cardinality hypotheses and built valid embeddings; "
                    "every refusal matched a pool shortfall"};
}

// Two cliques of order q sharing three vertices: connectivity exactly 3 with
// {0,1,2} its unique minimum separator, used for the k=3 lift samples.
Graph glued_triple(int q) {
  GraphBuilder b(2 * q - 3);
  for (VertexId i = 0; i < q; ++i)
    for (VertexId j = i + 1; j < q; ++j) b.add_edge(i, j);
  std::vector<VertexId> side = {0, 1, 2};
  for (VertexId i = q; i < 2 * q - 3; ++i) side.push_back(i);
  for (std::size_t i = 0; i < side.size(); ++i)
    for (std::size_t j = i + 1; j < side.size(); ++j) b.add_edge(side[i], side[j]);
  return b.build();
}

// 7. Whenever the completion-lift premises hold for a sampled
// (host, separator, fragment, removal) tuple, removing the sampled set
// really does leave the host k-connected — confirmed directly by the oracle.
Outcome completion_lift_soundness() {
  std::mt19937_64 meta(0xA7);
  // Glued-pair hosts: connectivity exactly 2 by construction with minimum
  // degree 5+, so the degree premise leaves room for removals of size 3+.
  int glued = 0;
  for (int attempt = 0; attempt < 2000 && glued < 100; ++attempt) {
    const Graph g = glued_pair(pick(meta, 7, 10), pick(meta, 7, 10), mix_seed(0xA701, attempt));
    const int n = g.order();
    const int m = g.min_degree() - 2;  // matches the degree premise exactly
    const VertexSet s = VertexSet::of(n, {0, 1});
    const SeparationContext ctx = fragments(g, s);
    const FragmentInfo& fi = ctx.fragments[uniform_below(meta, ctx.fragments.size())];
    const auto pool = fi.complement.members();
    const int cap = std::min<int>(m, static_cast<int>(pool.size()) - 1);
    const int want = static_cast<int>(uniform_below(meta, cap + 1));
    VertexSet w(n);
    while (w.size() < want)
      w.insert(pool[static_cast<std::size_t>(uniform_below(meta, pool.size()))]);
    if (!completion_lift_holds(g, s, fi.fragment, w, 2, m)) continue;
    ++glued;
    if (!oracle_k_connected_excluding(g, w, 2))
      return {false, "a premise-meeting removal broke 2-connectivity"};
  }
  if (glued < 100)
    return {false, "only " + std::to_string(glued) + " glued-pair samples at k=2"};
  // Sparse random hosts of connectivity 2: the tight degree premise only
  // admits small removals, but separator and fragment are fully random.
  int confirmed2 = 0;
  for (int attempt = 0; attempt < 20000 && confirmed2 < 50; ++attempt) {
    const int n = pick(meta, 8, 14);
    const Graph g = gen_random_graph(n, 3, 2, mix_seed(0xA702, attempt));
    if (kappa(g) != 2) continue;
    const int m = g.min_degree() - 2;
    const auto seps = minimum_separators(g);
    const VertexSet& s = seps[uniform_below(meta, seps.size())];
    const SeparationContext ctx = fragments(g, s);
    const FragmentInfo& fi =
        ctx.fragments[uniform_below(meta, ctx.fragments.size())];
    const auto pool = fi.complement.members();
    if (pool.size() < 2) continue;
    const int cap = std::min<int>(m, static_cast<int>(pool.size()) - 1);
    const int want = static_cast<int>(uniform_below(meta, cap + 1));
    VertexSet w(n);
    while (w.size() < want)
      w.insert(pool[static_cast<std::size_t>(uniform_below(meta, pool.size()))]);
    if (!completion_lift_holds(g, s, fi.fragment, w, 2, m)) continue;
    ++confirmed2;
    if (!oracle_k_connected_excluding(g, w, 2))
      return {false, "a premise-meeting removal broke 2-connectivity"};
  }
  if (confirmed2 < 50)
    return {false, "only " + std::to_string(confirmed2) + " random-host samples at k=2"};

  for (int i = 0; i < 50; ++i) {
    const int q = 8 + i % 3;
    const Graph g = glued_triple(q);
    const int n = g.order();
    const int m = g.min_degree() - 3;
    const VertexSet s = VertexSet::of(n, {0, 1, 2});
    const SeparationContext ctx = fragments(g, s);
    const FragmentInfo& fi = ctx.fragments[i % 2];
    const auto pool = fi.complement.members();
    const int cap = std::min<int>(m, static_cast<int>(pool.size()) - 1);
    const int want = 1 + static_cast<int>(uniform_below(meta, cap));
    VertexSet w(n);
    while (w.size() < want)
      w.insert(pool[static_cast<std::size_t>(uniform_below(meta, pool.size()))]);
    if (!completion_lift_holds(g, s, fi.fragment, w, 3, m))
      return {false, "a constructed k=3 sample unexpectedly failed its premises"};
    if (!oracle_k_connected_excluding(g, w, 3))
      return {false, "a premise-meeting removal broke 3-connectivity"};
  }
  return {true, "150 samples at k=2 (glued + random hosts) and 50 at k=3, every lift confirmed"};
}

// 8. The flow-based connectivity kernel must agree exactly with brute-force
// cut enumeration across the fixed catalog and random small hosts.
Outcome kernel_agreement() {
  std::vector<Graph> hosts;
  for (int n = 3; n <= 8; ++n) hosts.push_back(named_graph("cycle:" + std::to_string(n)));
  for (int n = 4; n <= 8; ++n) hosts.push_back(named_graph("wheel:" + std::to_string(n)));
  for (int a = 1; a <= 4; ++a)
    for (int b = a; a + b <= 8; ++b)
      hosts.push_back(named_graph("kbip:" + std::to_string(a) + ":" + std::to_string(b)));
  for (int n = 1; n <= 6; ++n) hosts.push_back(test::complete_graph(n));
  std::mt19937_64 meta(0xA8);
  for (int i = 0; i < 50; ++i) {
    const int n = pick(meta, 2, 8);
    const int delta = static_cast<int>(uniform_below(meta, n));
    const int k = static_cast<int>(uniform_below(meta, 2));
    hosts.push_back(gen_random_graph(n, delta, k, mix_seed(0xA8A8, i)));
  }
  for (std::size_t i = 0; i < hosts.size(); ++i)
    if (kappa(hosts[i]) != oracle_kappa(hosts[i]))
      return {false, "kernel and brute force disagree on host " + std::to_string(i)};
  return {true, std::to_string(hosts.size()) + " hosts (catalog + random), exact agreement"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  static const Criterion criteria[] = {
      {"oriented star finder sweep", oriented_star_sweep},
      {"oriented double-star finder sweep", oriented_double_star_sweep},
      {"path-star and path-double-star finder sweep", path_tree_sweep},
      {"finder/oracle agreement on the small-host corpus", small_host_agreement},
      {"separator completion invariants", separator_completion_invariants},
      {"double-star-from-arc builder property", double_star_builder_property},
      {"completion lift soundness", completion_lift_soundness},
      {"connectivity kernel vs exhaustive cuts", kernel_agreement},
  };
  const int total = static_cast<int>(std::size(criteria));
  int failures = 0;
  for (int i = 0; i < total; ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("unhandled exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "/" << total << "] "
              << criteria[i].name;
    if (!o.detail.empty()) std::cout << " — " << o.detail;
    std::cout << std::endl;
  }
  if (failures == 0)
    std::cout << "acceptance: all " << total << " criteria passed" << std::endl;
  else
    std::cout << "acceptance: " << failures << " of " << total << " criteria FAILED" << std::endl;
  return failures == 0 ? 0 : 1;
}
