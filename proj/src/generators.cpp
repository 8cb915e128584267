#include "nonsep/generators.hpp"

#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/vertex_set.hpp"

namespace nonsep {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw precondition_error("uniform draw from an empty range");
  constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t overhang = (top % bound + 1) % bound;
  std::uint64_t x = rng();
  if (overhang != 0)
    while (x > top - overhang) x = rng();
  return x % bound;
}

Graph gen_random_graph(int n, int delta_min, int k, std::uint64_t seed) {
  if (n < 1) throw precondition_error("random graph: order must be positive");
  if (delta_min < 0 || delta_min >= n)
    throw precondition_error("random graph: degree bound out of range");
  if (k < 0 || k > n - 1)
    throw precondition_error("random graph: connectivity target out of range");
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> adj(n, VertexSet(n));
  std::vector<int> deg(n, 0);
  auto add_edge = [&](VertexId u, VertexId v) {
    adj[u].insert(v);
    adj[v].insert(u);
    ++deg[u];
    ++deg[v];
  };
  std::vector<VertexId> cand;
  for (VertexId u = 0; u < n; ++u) {
    while (deg[u] < delta_min) {
      cand.clear();
      for (VertexId v = 0; v < n; ++v)
        if (v != u && !adj[u].contains(v)) cand.push_back(v);
      add_edge(u, cand[uniform_below(rng, cand.size())]);
    }
  }
  auto build = [&]() {
    GraphBuilder b(n);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v : adj[u].members())
        if (u < v) b.add_edge(u, v);
    return b.build();
  };
  Graph g = build();
  while (!is_k_connected(g, k)) {
    std::vector<std::pair<VertexId, VertexId>> missing;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (!adj[u].contains(v)) missing.emplace_back(u, v);
    if (missing.empty()) break;  // complete: as connected as n allows
    auto [u, v] = missing[uniform_below(rng, missing.size())];
    add_edge(u, v);
    g = build();
  }
  return g;
}

Digraph gen_random_digraph(int n, int semidelta_min, std::uint64_t seed) {
  if (n < 1) throw precondition_error("random digraph: order must be positive");
  if (semidelta_min < 0 || semidelta_min >= n)
    throw precondition_error("random digraph: degree bound out of range");
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> out(n, VertexSet(n));
  std::vector<int> outdeg(n, 0);
  std::vector<int> indeg(n, 0);
  auto add_arc = [&](VertexId u, VertexId v) {
    out[u].insert(v);
    ++outdeg[u];
    ++indeg[v];
  };
  std::vector<VertexId> cand;
  for (VertexId u = 0; u < n; ++u) {
    while (outdeg[u] < semidelta_min) {
      cand.clear();
      for (VertexId v = 0; v < n; ++v)
        if (v != u && !out[u].contains(v)) cand.push_back(v);
      add_arc(u, cand[uniform_below(rng, cand.size())]);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    while (indeg[v] < semidelta_min) {
      cand.clear();
      for (VertexId u = 0; u < n; ++u)
        if (u != v && !out[u].contains(v)) cand.push_back(u);
      add_arc(cand[uniform_below(rng, cand.size())], v);
    }
  }
  auto build = [&]() {
    DigraphBuilder b(n);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v : out[u].members()) b.add_arc(u, v);
    return b.build();
  };
  Digraph d = build();
  while (true) {
    const ComponentOrder order = strong_components(d);
    if (order.components.size() <= 1) break;
    const VertexSet& sink = order.components.back();
    const VertexSet& source = order.components.front();
    const auto sm = sink.members();
    const auto tm = source.members();
    const VertexId u = sm[uniform_below(rng, sm.size())];
    const VertexId v = tm[uniform_below(rng, tm.size())];
    if (!out[u].contains(v) && u != v) add_arc(u, v);
    // A sink-to-source arc always exists to add: the condensation is
    // acyclic with at least two parts, so u != v and the arc is absent.
    d = build();
  }
  return d;
}

Graph named_graph(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  auto num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw parse_error("named graph: bad number '" + s + "'");
      return v;
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception&) {
      throw parse_error("named graph: bad number '" + s + "'");
    }
  };
  if (parts.size() == 2 && parts[0] == "cycle") {
    const int n = num(parts[1]);
    if (n < 3) throw parse_error("named graph: cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (VertexId i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
  }
  if (parts.size() == 2 && parts[0] == "wheel") {
    const int n = num(parts[1]);
    if (n < 4) throw parse_error("named graph: wheel needs at least 4 vertices");
    GraphBuilder b(n);
    for (VertexId i = 1; i < n; ++i) {
      b.add_edge(0, i);
      b.add_edge(i, i == n - 1 ? 1 : i + 1);
    }
    return b.build();
  }
  if (parts.size() == 3 && parts[0] == "kbip") {
    const int a = num(parts[1]);
    const int bb = num(parts[2]);
    if (a < 1 || bb < 1) throw parse_error("named graph: bipartite sides must be positive");
    GraphBuilder b(a + bb);
    for (VertexId i = 0; i < a; ++i)
      for (VertexId j = 0; j < bb; ++j) b.add_edge(i, a + j);
    return b.build();
  }
  if (parts.size() == 1 && parts[0] == "petersen") {
    GraphBuilder b(10);
    for (VertexId i = 0; i < 5; ++i) {
      b.add_edge(i, (i + 1) % 5);
      b.add_edge(i, 5 + i);
      b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return b.build();
  }
  throw parse_error("named graph: unknown name '" + name + "'");
}

}  // namespace nonsep
