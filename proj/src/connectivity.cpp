#include "nonsep/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace nonsep {

namespace {

// --- elementary DFS utilities -------------------------------------------------

std::vector<int> component_labels(const Graph& g, const VertexSet* removed = nullptr) {
  int n = g.order();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] >= 0 || (removed && removed->contains(s))) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : g.neighbors(u)) {
        if (label[v] >= 0 || (removed && removed->contains(v))) continue;
        label[v] = next;
        stack.push_back(v);
      }
    }
    ++next;
  }
  return label;
}

int count_components(const Graph& g, const VertexSet* removed = nullptr) {
  std::vector<int> label = component_labels(g, removed);
  int best = -1;
  for (int l : label) best = std::max(best, l);
  return best + 1;
}

bool has_articulation_point(const Graph& g) {
  // Iterative Tarjan lowpoint scan.  Assumes g connected with >= 3 vertices.
  int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
  std::vector<std::size_t> next_edge(n, 0);
  int timer = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<VertexId> stack = {root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      VertexId u = stack.back();
      const auto& nbrs = g.neighbors(u);
      if (next_edge[u] < nbrs.size()) {
        VertexId v = nbrs[next_edge[u]++];
        if (disc[v] < 0) {
          parent[v] = u;
          ++child_count[u];
          disc[v] = low[v] = timer++;
          stack.push_back(v);
        } else if (v != parent[u]) {
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        stack.pop_back();
        VertexId p = parent[u];
        if (p >= 0) {
          low[p] = std::min(low[p], low[u]);
          if (parent[p] >= 0 && low[u] >= disc[p]) return true;  // p cuts
        }
      }
    }
    if (child_count[root] >= 2) return true;
  }
  return false;
}

bool is_complete(const Graph& g) {
  for (VertexId u = 0; u < g.order(); ++u)
    if (g.degree(u) != g.order() - 1) return false;
  return true;
}

// --- unit-vertex-capacity max-flow (vertex splitting) ----------------------------
//
// Node 2v is v's in-copy, 2v+1 its out-copy; the internal arc has capacity 1,
// edges get effectively unbounded capacity.  Shortest augmenting paths; the
// flow value is at most n, so this stays tiny at the scales we run.

class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : n_(g.order()) {
    head_.assign(2 * n_, {});
    for (VertexId v = 0; v < n_; ++v) add(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edge_list()) {
      add(2 * u + 1, 2 * v, big());
      add(2 * v + 1, 2 * u, big());
    }
  }

  // Max flow from u's out-copy to v's in-copy, stopping early at `limit`.
  int max_flow(VertexId u, VertexId v, int limit) {
    for (Arc& a : arcs_) a.cap_left = a.cap;
    int s = 2 * u + 1, t = 2 * v;
    int flow = 0;
    while (flow < limit) {
      std::vector<int> prev_arc(2 * n_, -1);
      std::queue<int> bfs;
      bfs.push(s);
      prev_arc[s] = -2;
      while (!bfs.empty() && prev_arc[t] == -1) {
        int x = bfs.front();
        bfs.pop();
        for (int a : head_[x]) {
          if (arcs_[a].cap_left <= 0) continue;
          int y = arcs_[a].to;
          if (prev_arc[y] != -1) continue;
          prev_arc[y] = a;
          bfs.push(y);
        }
      }
      if (prev_arc[t] == -1) break;
      for (int x = t; x != s;) {
        int a = prev_arc[x];
        --arcs_[a].cap_left;
        ++arcs_[a ^ 1].cap_left;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int cap_left;
  };

  int big() const { return n_ + 2; }

  void add(int from, int to, int cap) {
    head_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, cap});
    head_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
  }

  int n_;
  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return count_components(g) == 1;
}

int local_connectivity(const Graph& g, VertexId u, VertexId v, int limit) {
  if (u == v) throw precondition_error("local connectivity needs distinct endpoints");
  if (g.adjacent(u, v)) throw precondition_error("local connectivity needs non-adjacent endpoints");
  SplitFlow flow(g);
  int cap = limit >= 0 ? limit : g.order();
  return flow.max_flow(u, v, cap);
}

namespace {

// Shared core for kappa / is_k_connected.  With limit >= 0 the scan stops as
// soon as the answer is known to be >= limit (returns limit) or a smaller
// bound is found.  Requires g connected, not complete, no cut vertex.
//
// Correctness of the pair family: fix v0.  A minimum separating set S either
// misses v0 - then v0 and any vertex of another component of g - S are a
// non-adjacent pair split by S - or contains v0, and then every component of
// g - S touches N(v0) (minimum separators neighbor every component), so two
// components contain non-adjacent members of N(v0).
int kappa_flow_phase(const Graph& g, int limit) {
  int n = g.order();
  VertexId v0 = 0;
  for (VertexId u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v0)) v0 = u;

  int best = n - 1;
  if (limit >= 0) best = std::min(best, limit);
  SplitFlow flow(g);
  for (VertexId w = 0; w < n; ++w) {
    if (w == v0 || g.adjacent(v0, w)) continue;
    best = std::min(best, flow.max_flow(v0, w, best));
    if (limit >= 0 && best < limit) return best;
  }
  const auto& nb = g.neighbors(v0);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (g.adjacent(nb[i], nb[j])) continue;
      best = std::min(best, flow.max_flow(nb[i], nb[j], best));
      if (limit >= 0 && best < limit) return best;
    }
  return best;
}

}  // namespace

int kappa(const Graph& g) {
  int n = g.order();
  if (n == 0) throw precondition_error("kappa of the empty graph is undefined");
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  if (has_articulation_point(g)) return 1;
  return kappa_flow_phase(g, -1);
}

bool is_k_connected(const Graph& g, int k) {
  int n = g.order();
  if (n == 0) return false;
  if (k <= 0) return true;
  if (n < k + 1) return false;
  if (is_complete(g)) return true;  // kappa = n-1 >= k since n >= k+1
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  if (has_articulation_point(g)) return false;
  if (k == 2) return true;
  return kappa_flow_phase(g, k) >= k;
}

// --- directed ---------------------------------------------------------------

ComponentOrder strong_components(const Digraph& d) {
  int n = d.order();
  // Kosaraju: forward finish order, then reverse-graph sweeps.
  std::vector<VertexId> order;
  order.reserve(n);
  {
    std::vector<char> seen(n, 0);
    std::vector<std::pair<VertexId, std::size_t>> stack;
    for (VertexId s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      stack.emplace_back(s, 0);
      while (!stack.empty()) {
        auto& [u, i] = stack.back();
        const auto& onb = d.out_neighbors(u);
        if (i < onb.size()) {
          VertexId v = onb[i++];
          if (!seen[v]) {
            seen[v] = 1;
            stack.emplace_back(v, 0);
          }
        } else {
          order.push_back(u);
          stack.pop_back();
        }
      }
    }
  }

  std::vector<int> comp(n, -1);
  int count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<VertexId> stack = {*it};
    comp[*it] = count;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : d.in_neighbors(u))
        if (comp[v] < 0) {
          comp[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }

  // Condensation arcs, then Kahn with a min-vertex-id priority so that
  // incomparable components come out in a deterministic order.
  std::vector<VertexSet> raw(count, VertexSet(n));
  std::vector<VertexId> min_id(count, n);
  for (VertexId v = 0; v < n; ++v) {
    raw[comp[v]].insert(v);
    min_id[comp[v]] = std::min(min_id[comp[v]], v);
  }
  std::vector<std::vector<int>> succ(count);
  std::vector<int> indeg(count, 0);
  for (auto [u, v] : d.arc_list()) {
    if (comp[u] == comp[v]) continue;
    succ[comp[u]].push_back(comp[v]);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  for (int c = 0; c < count; ++c)
    for (int t : succ[c]) ++indeg[t];

  using Entry = std::pair<VertexId, int>;  // (min vertex id, component)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (int c = 0; c < count; ++c)
    if (indeg[c] == 0) ready.emplace(min_id[c], c);

  ComponentOrder out;
  out.component_of.assign(n, -1);
  while (!ready.empty()) {
    auto [mid, c] = ready.top();
    ready.pop();
    int index = static_cast<int>(out.components.size());
    out.components.push_back(raw[c]);
    for (VertexId v : raw[c].members()) out.component_of[v] = index;
    for (int t : succ[c])
      if (--indeg[t] == 0) ready.emplace(min_id[t], t);
  }
  return out;
}

VertexSet max_strong_component(const Digraph& d) {
  ComponentOrder order = strong_components(d);
  if (order.components.empty()) throw precondition_error("empty digraph has no components");
  const VertexSet* best = &order.components[0];
  for (const VertexSet& c : order.components) {
    if (c.size() > best->size()) best = &c;
    else if (c.size() == best->size() && c.front() < best->front()) best = &c;
  }
  return *best;
}

bool is_strongly_connected(const Digraph& d) {
  if (d.order() == 0) return true;
  // Forward and backward reach from vertex 0.
  auto reach = [&](bool forward) {
    std::vector<char> seen(d.order(), 0);
    std::vector<VertexId> stack = {0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      const auto& nbrs = forward ? d.out_neighbors(u) : d.in_neighbors(u);
      for (VertexId v : nbrs)
        if (!seen[v]) {
          seen[v] = 1;
          ++visited;
          stack.push_back(v);
        }
    }
    return visited == d.order();
  };
  return reach(true) && reach(false);
}

// --- separators / fragments / ends ----------------------------------------------

namespace {

bool separates(const Graph& g, const VertexSet& s) {
  if (s.size() >= g.order()) return false;
  return count_components(g, &s) >= 2;
}

// Lexicographic k-subset enumeration of [0, n).
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<VertexId> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return;
  while (true) {
    fn(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& s) {
  std::vector<int> label = component_labels(g, &s);
  int count = 0;
  for (int l : label) count = std::max(count, l + 1);
  std::vector<VertexSet> comps(count, VertexSet(g.order()));
  for (VertexId v = 0; v < g.order(); ++v)
    if (label[v] >= 0 && !s.contains(v)) comps[label[v]].insert(v);
  // component_labels assigns labels in ascending order of smallest vertex.
  return comps;
}

}  // namespace

std::vector<VertexSet> minimum_separators(const Graph& g) {
  if (!is_connected(g)) throw precondition_error("minimum_separators requires a connected graph");
  if (is_complete(g)) throw precondition_error("complete graphs have no separating set");
  int k = kappa(g);
  std::vector<VertexSet> out;
  for_each_subset(g.order(), k, [&](const std::vector<VertexId>& pick) {
    VertexSet s(g.order());
    for (VertexId v : pick) s.insert(v);
    if (separates(g, s)) out.push_back(s);
  });
  return out;  // already lexicographic by construction
}

namespace {

// All (separator, component) pairs across every minimum separating set.
std::vector<std::pair<VertexSet, std::vector<VertexSet>>> separation_atlas(const Graph& g) {
  std::vector<std::pair<VertexSet, std::vector<VertexSet>>> atlas;
  for (const VertexSet& s : minimum_separators(g))
    atlas.emplace_back(s, components_after_removal(g, s));
  return atlas;
}

}  // namespace

SeparationContext fragments(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw precondition_error("vertex set universe mismatch");
  if (!is_connected(g)) throw precondition_error("fragments requires a connected graph");
  if (is_complete(g)) throw precondition_error("complete graphs have no separating set");
  if (s.size() != kappa(g) || !separates(g, s))
    throw precondition_error("fragments requires a minimum separating set");

  auto atlas = separation_atlas(g);
  std::vector<VertexSet> comps = components_after_removal(g, s);

  SeparationContext ctx;
  ctx.separator = s;
  VertexSet rest = s.complement();
  for (const VertexSet& f : comps) {
    // Minimum separating sets neighbor every component entirely.
    VertexSet nbhd(g.order());
    for (VertexId v : f.members())
      for (VertexId w : g.neighbors(v))
        if (!f.contains(w)) nbhd.insert(w);
    if (nbhd != s)
      throw contradiction_error("component of a minimum separating set with partial neighborhood");

    bool end = true;
    for (const auto& [s2, comps2] : atlas) {
      for (const VertexSet& f2 : comps2)
        if (f2 != f && f2.subset_of(f)) {
          end = false;
          break;
        }
      if (!end) break;
    }
    ctx.fragments.push_back(FragmentInfo{f, rest - f, end});
  }
  return ctx;
}

std::vector<EndPair> ends(const Graph& g) {
  std::vector<EndPair> out;
  for (const VertexSet& s : minimum_separators(g)) {
    SeparationContext ctx = fragments(g, s);
    for (const FragmentInfo& fi : ctx.fragments)
      if (fi.is_end) out.push_back(EndPair{s, fi.fragment});
  }
  if (out.size() < 2)
    throw contradiction_error("a connected non-complete graph must have at least two ends");
  return out;
}

Graph completion(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw precondition_error("vertex set universe mismatch");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edge_list()) b.add_edge(u, v);
  std::vector<VertexId> vs = s.members();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) b.add_edge(vs[i], vs[j]);
  return b.build();
}

bool fragment_completion_connected(const Graph& g, const VertexSet& s, const VertexSet& f, int k) {
  if (s.universe() != g.order() || f.universe() != g.order())
    throw precondition_error("vertex set universe mismatch");
  if (f.empty() || f.intersects(s))
    throw precondition_error("fragment must be non-empty and disjoint from the separator");
  if (s.size() != kappa(g) || !separates(g, s))
    throw precondition_error("fragment_completion_connected requires a minimum separating set");
  // F must be a union of components of g - S, but not all of them.
  VertexSet rest = s.complement() - f;
  if (rest.empty()) throw precondition_error("fragment must exclude at least one component");
  for (VertexId v : f.members())
    for (VertexId w : g.neighbors(v))
      if (rest.contains(w))
        throw precondition_error("fragment must be a union of components of g - S");

  Graph comp = completion(g, s);
  SubGraph kept = delete_vertices(comp, rest);
  return is_k_connected(kept.graph, k);
}

bool clique_pair_check(const Graph& g, const VertexSet& c, int k, int m, bool plus) {
  if (c.universe() != g.order()) throw precondition_error("vertex set universe mismatch");
  if (k < 1 || m < 0) throw precondition_error("clique_pair_check requires k >= 1, m >= 0");
  if (g.order() < k + 1) return false;
  if (c.size() != k) return false;
  std::vector<VertexId> cs = c.members();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (!g.adjacent(cs[i], cs[j])) return false;
  int need = (3 * k) / 2 + m - 1;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!c.contains(v) && g.degree(v) < need) return false;
  return is_k_connected(g, plus ? k + 1 : k);
}

}  // namespace nonsep
