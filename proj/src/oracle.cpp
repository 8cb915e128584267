#include "nonsep/oracle.hpp"

#include <type_traits>

namespace nonsep {

namespace {

int remaining_count(int n, const VertexSet& excluded) { return n - excluded.size(); }

// Runs fn on every size-t subset of pool (as a VertexSet over `universe`),
// in lexicographic order, until fn returns true; reports whether it did.
bool any_subset(const std::vector<VertexId>& pool, int universe, int t,
                const std::function<bool(const VertexSet&)>& fn) {
  int p = static_cast<int>(pool.size());
  if (t > p) return false;
  std::vector<int> pick(t);
  for (int i = 0; i < t; ++i) pick[i] = i;
  while (true) {
    VertexSet s(universe);
    for (int i : pick) s.insert(pool[i]);
    if (fn(s)) return true;
    int i = t - 1;
    while (i >= 0 && pick[i] == p - t + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

bool oracle_connected_excluding(const Graph& g, const VertexSet& excluded) {
  if (excluded.universe() != g.order()) throw precondition_error("vertex set universe mismatch");
  int want = remaining_count(g.order(), excluded);
  if (want == 0) return true;
  VertexId start = -1;
  for (VertexId v = 0; v < g.order() && start < 0; ++v)
    if (!excluded.contains(v)) start = v;
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexId> stack = {start};
  seen[start] = 1;
  int visited = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u)) {
      if (seen[w] || excluded.contains(w)) continue;
      seen[w] = 1;
      ++visited;
      stack.push_back(w);
    }
  }
  return visited == want;
}

bool oracle_k_connected_excluding(const Graph& g, const VertexSet& excluded, int k) {
  int left = remaining_count(g.order(), excluded);
  if (left == 0) return false;
  if (k <= 0) return true;
  if (left < k + 1) return false;
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!excluded.contains(v)) pool.push_back(v);
  for (int t = 0; t < k; ++t) {
    bool separated = any_subset(pool, g.order(), t, [&](const VertexSet& s) {
      return !oracle_connected_excluding(g, excluded | s);
    });
    if (separated) return false;
  }
  return true;
}

bool oracle_k_connected(const Graph& g, int k) {
  return oracle_k_connected_excluding(g, VertexSet(g.order()), k);
}

int oracle_kappa(const Graph& g) {
  int n = g.order();
  if (n == 0) throw precondition_error("kappa of the empty graph is undefined");
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < n; ++v) pool.push_back(v);
  for (int t = 0; t <= n - 2; ++t) {
    bool separated = any_subset(pool, n, t, [&](const VertexSet& s) {
      return !oracle_connected_excluding(g, s);
    });
    if (separated) return t;
  }
  return n - 1;
}

bool oracle_strong_excluding(const Digraph& d, const VertexSet& excluded) {
  if (excluded.universe() != d.order()) throw precondition_error("vertex set universe mismatch");
  std::vector<VertexId> rem;
  for (VertexId v = 0; v < d.order(); ++v)
    if (!excluded.contains(v)) rem.push_back(v);
  int r = static_cast<int>(rem.size());
  if (r == 0) return true;
  std::vector<std::vector<char>> reach(r, std::vector<char>(r, 0));
  for (int i = 0; i < r; ++i) {
    reach[i][i] = 1;
    for (int j = 0; j < r; ++j)
      if (d.has_arc(rem[i], rem[j])) reach[i][j] = 1;
  }
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < r; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < r; ++j)
        if (reach[k][j]) reach[i][j] = 1;
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!reach[i][j]) return false;
  return true;
}

bool oracle_strongly_connected(const Digraph& d) {
  return oracle_strong_excluding(d, VertexSet(d.order()));
}

namespace {

template <typename Host>
void oracle_enumerate(const Host& host, const ShapeSpec& spec, const VertexSet& forbidden,
                      const std::function<bool(const Embedding&)>& visit) {
  spec.validate();
  constexpr bool host_directed = std::is_same_v<Host, Digraph>;
  if (spec.directed() != host_directed)
    throw precondition_error("shape family does not match the host family");
  int n = host.order();
  if (forbidden.universe() != n) throw precondition_error("vertex set universe mismatch");

  std::vector<std::pair<VertexId, VertexId>> links =
      host_directed ? shape_arcs(spec) : shape_edges(spec);
  std::vector<int> prev_in_block(spec.m, -1);
  for (auto [lo, hi] : symmetry_blocks(spec))
    for (int i = lo + 1; i < hi; ++i) prev_in_block[i] = i - 1;
  bool swap_rule = swap_symmetric(spec);
  bool reverse_rule = reversal_symmetric(spec);

  std::vector<VertexId> map(spec.m, -1);
  std::vector<char> used(n, 0);
  auto place = [&](auto&& self, int i) -> bool {
    if (i == spec.m) return visit(Embedding{spec, map});
    for (VertexId v = 0; v < n; ++v) {
      if (used[v] || forbidden.contains(v)) continue;
      if (prev_in_block[i] >= 0 && v < map[prev_in_block[i]]) continue;
      if (swap_rule && i == 1 && v < map[0]) continue;
      if (reverse_rule && i == spec.m - 1 && v < map[0]) continue;
      bool fits = true;
      for (auto [x, y] : links) {
        if (std::max(x, y) != i) continue;  // both ends placed once i is
        VertexId vx = x == i ? v : map[x];
        VertexId vy = y == i ? v : map[y];
        bool present;
        if constexpr (host_directed)
          present = host.has_arc(vx, vy);
        else
          present = host.adjacent(vx, vy);
        if (!present) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      map[i] = v;
      used[v] = 1;
      bool stop = self(self, i + 1);
      used[v] = 0;
      map[i] = -1;
      if (stop) return true;
    }
    return false;
  };
  place(place, 0);
}

}  // namespace

long long oracle_count_embeddings(const Graph& g, const ShapeSpec& spec,
                                  const VertexSet& forbidden) {
  long long count = 0;
  oracle_enumerate(g, spec, forbidden, [&](const Embedding&) {
    ++count;
    return false;
  });
  return count;
}

long long oracle_count_embeddings(const Digraph& d, const ShapeSpec& spec,
                                  const VertexSet& forbidden) {
  long long count = 0;
  oracle_enumerate(d, spec, forbidden, [&](const Embedding&) {
    ++count;
    return false;
  });
  return count;
}

std::optional<Embedding> oracle_find_nonseparating(const Graph& g, const ShapeSpec& spec, int k) {
  std::optional<Embedding> found;
  oracle_enumerate(g, spec, VertexSet(g.order()), [&](const Embedding& e) {
    if (!oracle_k_connected_excluding(g, embedding_vertices(e, g.order()), k)) return false;
    found = e;
    return true;
  });
  return found;
}

std::optional<Embedding> oracle_find_nonseparating(const Digraph& d, const ShapeSpec& spec) {
  std::optional<Embedding> found;
  oracle_enumerate(d, spec, VertexSet(d.order()), [&](const Embedding& e) {
    VertexSet cut = embedding_vertices(e, d.order());
    if (remaining_count(d.order(), cut) < 1 || !oracle_strong_excluding(d, cut)) return false;
    found = e;
    return true;
  });
  return found;
}

}  // namespace nonsep
