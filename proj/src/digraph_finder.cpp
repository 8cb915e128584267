#include "nonsep/digraph_finder.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"

namespace nonsep {

std::vector<VertexId> reentrant_path(const Digraph& d, const VertexSet& h) {
  const int n = d.order();
  if (h.universe() != n) throw precondition_error("reentrant path: universe mismatch");
  if (h.empty() || h.size() >= n)
    throw precondition_error("reentrant path: need a nonempty proper vertex subset");

  // hops[x] for x outside h: least number of arcs on a dipath from x back
  // into h whose interior stays outside h.  Reverse BFS seeded at the
  // vertices one arc away from h.
  std::vector<int> hops(n, -1);
  std::vector<VertexId> queue;
  for (VertexId x = 0; x < n; ++x) {
    if (h.contains(x)) continue;
    if (d.out_neighbor_set(x).intersects(h)) {
      hops[x] = 1;
      queue.push_back(x);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    for (VertexId y : d.in_neighbors(x)) {
      if (h.contains(y) || hops[y] != -1) continue;
      hops[y] = hops[x] + 1;
      queue.push_back(y);
    }
  }

  // t = 1 + least hops over vertices h can step onto.
  int t = -1;
  for (VertexId x = 0; x < n; ++x) {
    if (h.contains(x) || hops[x] == -1) continue;
    if (!d.in_neighbor_set(x).intersects(h)) continue;
    if (t == -1 || hops[x] + 1 < t) t = hops[x] + 1;
  }
  if (t == -1) throw precondition_error("reentrant path: host is not strongly connected");

  std::vector<VertexId> path;
  VertexId start = -1;
  for (VertexId v : h.members()) {
    for (VertexId x : d.out_neighbors(v)) {
      if (!h.contains(x) && hops[x] == t - 1) {
        start = v;
        break;
      }
    }
    if (start != -1) break;
  }
  if (start == -1) throw precondition_error("reentrant path: host is not strongly connected");
  path.push_back(start);

  VertexId cur = start;
  for (int remaining = t - 1; remaining >= 1; --remaining) {
    VertexId next = -1;
    for (VertexId x : d.out_neighbors(cur)) {  // ascending, so the walk is lex-least
      if (!h.contains(x) && hops[x] == remaining) {
        next = x;
        break;
      }
    }
    if (next == -1) throw contradiction_error("reentrant path: hop gradient broke");
    path.push_back(next);
    cur = next;
  }
  VertexId close = -1;
  for (VertexId x : d.out_neighbors(cur)) {
    if (h.contains(x)) {
      close = x;
      break;
    }
  }
  if (close == -1) throw contradiction_error("reentrant path: failed to re-enter");
  path.push_back(close);
  return path;
}

namespace {

// Everything an improvement step looks at, kept around for witness dumps.
struct StepState {
  const Digraph* host = nullptr;
  const Embedding* tree = nullptr;
  std::string stage = "seed";
  VertexSet big;                // largest strong component of host - tree
  std::vector<VertexId> path;   // current reentrant detour
};

std::string join_ids(const std::vector<VertexId>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ' ';
    out << vs[i];
  }
  return out.str();
}

[[noreturn]] void report(const StepState& st, const std::string& why) {
  std::ostringstream w;
  w << "claim=" << why << '\n';
  w << "stage=" << st.stage << '\n';
  if (st.tree != nullptr)
    w << "tree=" << st.tree->shape.to_string() << " @ " << join_ids(st.tree->map) << '\n';
  w << "component=" << join_ids(st.big.members()) << '\n';
  w << "detour=" << join_ids(st.path) << '\n';
  const Digraph& d = *st.host;
  w << "order=" << d.order() << '\n';
  w << "arcs=";
  bool first = true;
  for (auto [u, v] : d.arc_list()) {
    if (!first) w << ' ';
    first = false;
    w << u << '>' << v;
  }
  w << '\n';
  throw contradiction_error("improvement step broke its promise: " + why, w.str());
}

// A candidate replacement: the tree to adopt and the detour whose union
// with the protected component must survive inside one strong component.
struct StepProposal {
  std::string label;
  Embedding tree;
  std::vector<VertexId> detour;
};

VertexSet to_host_set(const VertexSet& sub, const std::vector<VertexId>& to_host, int n) {
  VertexSet out(n);
  for (VertexId v : sub.members()) out.insert(to_host[v]);
  return out;
}

// Checks every promise the step analysis makes and returns the new size of
// the largest strong component (strictly above old_size).
int verify_step(const Digraph& d, StepState& st, const StepProposal& prop, int old_size) {
  const int n = d.order();
  if (!embedding_valid(d, prop.tree)) report(st, "replacement tree is not an embedding");

  const auto& pp = prop.detour;
  if (pp.size() < 3) report(st, "replacement detour is too short");
  if (!st.big.contains(pp.front()) || !st.big.contains(pp.back()))
    report(st, "replacement detour is not anchored in the component");
  for (std::size_t i = 0; i + 1 < pp.size(); ++i)
    if (!d.has_arc(pp[i], pp[i + 1])) report(st, "replacement detour misses an arc");
  for (std::size_t i = 1; i + 1 < pp.size(); ++i)
    if (st.big.contains(pp[i])) report(st, "replacement detour interior touches the component");

  VertexSet tv = embedding_vertices(prop.tree, n);
  VertexSet keep = st.big;
  for (VertexId v : pp) keep.insert(v);
  if (tv.intersects(keep)) report(st, "replacement tree touches protected vertices");

  SubDigraph rest = delete_vertices(d, tv);
  ComponentOrder comps = strong_components(rest.graph);
  int shared = -1;
  for (VertexId v : keep.members()) {
    int c = comps.component_of[rest.from_host[v]];
    if (shared == -1) shared = c;
    if (c != shared) report(st, "protected vertices split across strong components");
  }
  int new_max = 0;
  for (const VertexSet& c : comps.components) new_max = std::max(new_max, c.size());
  if (new_max <= old_size) report(st, "largest strong component failed to grow");
  return new_max;
}

// ---- star steps --------------------------------------------------------------

StepProposal improve_star_step(const Digraph& d, int m, StepState& st, const VertexSet& bp,
                               const ComponentOrder& comps, const SubDigraph& rest,
                               int big_index) {
  const int n = d.order();
  const auto& path = st.path;
  const int t = static_cast<int>(path.size()) - 1;
  const VertexId p1 = path[1];

  if (t == 2) {
    // The lone interior vertex shortcuts around the tree, so it is on it.
    if (!embedding_vertices(*st.tree, n).contains(p1))
      report(st, "interior of a two-arc detour is off the tree");
    if (big_index == 0) {
      // The protected component is the source of the component order, so
      // the last component is a sink clear of it: out-arcs from there stay
      // inside the sink or on the tree.
      st.stage = "t2-out";
      VertexSet sink = to_host_set(comps.components.back(), rest.to_host, n);
      auto tree = star_from_center(d, ShapeKind::OutStar, sink.front(), m, bp);
      if (!tree) report(st, "out-star pool at the sink component came up short");
      return {"t2-out", std::move(*tree), path};
    }
    st.stage = "t2-in";
    VertexSet source = to_host_set(comps.components.front(), rest.to_host, n);
    auto tree = star_from_center(d, ShapeKind::InStar, source.front(), m, bp);
    if (!tree) report(st, "in-star pool at the source component came up short");
    return {"t2-in", std::move(*tree), path};
  }

  // Interior vertices of a shortest detour cannot step straight back.
  if (d.out_neighbor_set(p1).intersects(st.big))
    report(st, "first detour vertex reaches straight back into the component");
  VertexSet pool1 = d.out_neighbor_set(p1) - bp;
  if (pool1.size() < m) report(st, "branch pool at the first detour vertex came up short");

  if (t == 3) {
    VertexId q = pool1.front();
    if (!d.out_neighbor_set(q).intersects(st.big)) {
      st.stage = "t3-out";
      auto tree = star_from_center(d, ShapeKind::OutStar, q, m, bp);
      if (!tree) report(st, "out-star pool at the branch vertex came up short");
      return {"t3-out", std::move(*tree), path};
    }
    if (d.in_neighbor_set(q).intersects(st.big))
      report(st, "branch vertex meets the component in both directions");
    st.stage = "t3-in";
    auto tree = star_from_center(d, ShapeKind::InStar, q, m, bp);
    if (!tree) report(st, "in-star pool at the branch vertex came up short");
    return {"t3-in", std::move(*tree), path};
  }

  // t >= 4
  const VertexId p2 = path[2];
  const VertexId p3 = path[3];
  if (!((d.out_neighbor_set(p1) & bp) == VertexSet::of(n, {p2})))
    report(st, "first detour vertex has shortcuts into the protected set");
  const auto mem1 = pool1.members();
  const std::vector<VertexId> qs(mem1.begin(), mem1.begin() + m);
  const VertexSet guard = VertexSet::of(n, {p1, p2, p3});
  for (VertexId qj : qs)
    if (!(d.out_neighbor_set(qj) & bp).subset_of(guard))
      report(st, "branch vertex has shortcuts into the protected set");

  for (VertexId qj : qs) {
    if ((d.out_neighbor_set(qj) - bp).size() >= m - 1) {
      st.stage = "t4-out";
      auto tree = star_from_center(d, ShapeKind::OutStar, qj, m, bp);
      if (!tree) report(st, "full branch pool failed to host an out-star");
      return {"t4-out", std::move(*tree), path};
    }
  }

  // Every branch pool is tight, so every branch vertex points at p2: the
  // first m-1 of them form an in-star there while the last one replaces p2
  // on the detour.
  st.stage = "t4-in";
  for (VertexId qj : qs)
    if (!((d.out_neighbor_set(qj) & bp) == guard))
      report(st, "tight branch pool without the full protected overlap");
  VertexSet allowed = VertexSet::of(n, {p2});
  for (int j = 0; j + 1 < m; ++j) allowed.insert(qs[j]);
  auto tree = star_from_center(d, ShapeKind::InStar, p2, m, allowed.complement());
  if (!tree) report(st, "pinned in-star on the second detour vertex failed");
  std::vector<VertexId> detour = {path[0], p1, qs[m - 1]};
  for (int i = 3; i <= t; ++i) detour.push_back(path[i]);
  return {"t4-in", std::move(*tree), std::move(detour)};
}

// ---- double-star steps ---------------------------------------------------------

StepProposal improve_double_step(const Digraph& d, int m, int r, int s, StepState& st,
                                 const VertexSet& bp, const ComponentOrder& comps,
                                 const SubDigraph& rest, int big_index) {
  const int n = d.order();
  const auto& path = st.path;
  const int t = static_cast<int>(path.size()) - 1;
  const VertexId p1 = path[1];

  if (t == 2) {
    if (!embedding_vertices(*st.tree, n).contains(p1))
      report(st, "interior of a two-arc detour is off the tree");
    if (big_index == 0) {
      // Sink component: no arcs leave it except onto the tree, so both
      // center pools avoid the protected set.
      st.stage = "t2-ods";
      VertexSet sink = to_host_set(comps.components.back(), rest.to_host, n);
      VertexId u = sink.front();
      VertexSet inner = d.out_neighbor_set(u) & sink;
      if (inner.empty()) report(st, "sink-component root has no arc inside its component");
      auto tree = double_star_from_arc(d, ShapeKind::OutDoubleStar, u, inner.front(), r, s, bp);
      if (!tree) report(st, "out-double-star pools at the sink came up short");
      return {"t2-ods", std::move(*tree), path};
    }
    st.stage = "t2-ids";
    VertexSet source = to_host_set(comps.components.front(), rest.to_host, n);
    VertexId v = source.front();
    VertexSet inner = d.in_neighbor_set(v) & source;
    if (inner.empty()) report(st, "source-component root has no arc inside its component");
    auto tree = double_star_from_arc(d, ShapeKind::InDoubleStar, inner.front(), v, r, s, bp);
    if (!tree) report(st, "in-double-star pools at the source came up short");
    return {"t2-ids", std::move(*tree), path};
  }

  if (d.out_neighbor_set(p1).intersects(st.big))
    report(st, "first detour vertex reaches straight back into the component");
  VertexSet pool1 = d.out_neighbor_set(p1) - bp;
  if (pool1.size() < m) report(st, "branch pool at the first detour vertex came up short");

  if (t == 3) {
    VertexId q = pool1.front();
    if (!d.out_neighbor_set(q).intersects(st.big)) {
      VertexSet poolq = d.out_neighbor_set(q) - bp;
      if (poolq.size() < m - 1) report(st, "forward pool at the branch vertex came up short");
      VertexId w = poolq.front();
      if (!d.out_neighbor_set(w).intersects(st.big)) {
        st.stage = "t3-ods";
        auto tree = double_star_from_arc(d, ShapeKind::OutDoubleStar, q, w, r, s, bp);
        if (!tree) report(st, "out-double-star pools on the branch arc came up short");
        return {"t3-ods", std::move(*tree), path};
      }
      if (d.in_neighbor_set(w).intersects(st.big))
        report(st, "second branch vertex meets the component in both directions");
      st.stage = "t3-oids";
      auto tree = double_star_from_arc(d, ShapeKind::OutInDoubleStar, q, w, r, s, bp);
      if (!tree) report(st, "out-in-double-star pools on the branch arc came up short");
      return {"t3-oids", std::move(*tree), path};
    }
    if (d.in_neighbor_set(q).intersects(st.big))
      report(st, "branch vertex meets the component in both directions");
    VertexSet poolq = d.in_neighbor_set(q) - bp;
    if (poolq.size() < m - 1) report(st, "backward pool at the branch vertex came up short");
    VertexId w = poolq.front();
    if (!d.out_neighbor_set(w).intersects(st.big)) {
      st.stage = "t3-oids";
      auto tree = double_star_from_arc(d, ShapeKind::OutInDoubleStar, w, q, r, s, bp);
      if (!tree) report(st, "out-in-double-star pools on the feeder arc came up short");
      return {"t3-oids", std::move(*tree), path};
    }
    if (d.in_neighbor_set(w).intersects(st.big))
      report(st, "feeder vertex meets the component in both directions");
    st.stage = "t3-ids";
    auto tree = double_star_from_arc(d, ShapeKind::InDoubleStar, w, q, r, s, bp);
    if (!tree) report(st, "in-double-star pools on the feeder arc came up short");
    return {"t3-ids", std::move(*tree), path};
  }

  // t >= 4
  const VertexId p2 = path[2];
  const VertexId p3 = path[3];
  if (!((d.out_neighbor_set(p1) & bp) == VertexSet::of(n, {p2})))
    report(st, "first detour vertex has shortcuts into the protected set");
  const auto mem1 = pool1.members();
  const std::vector<VertexId> qs(mem1.begin(), mem1.begin() + m);
  const VertexSet guard3 = VertexSet::of(n, {p1, p2, p3});
  for (VertexId qj : qs)
    if (!(d.out_neighbor_set(qj) & bp).subset_of(guard3))
      report(st, "branch vertex has shortcuts into the protected set");

  // Scan a branch pool for a vertex tied to the component in either
  // direction; such a tie pins down the opposite neighborhood and yields a
  // double star on the tying arc.
  auto tied_step = [&](VertexId u, const VertexSet& pool) -> std::optional<StepProposal> {
    for (VertexId w : pool.members()) {
      if (d.out_neighbor_set(w).intersects(st.big)) {
        st.stage = "t4-oids";
        VertexSet late = VertexSet::of(n, {path[t - 2], path[t - 1]});
        if (!(d.in_neighbor_set(w) & bp).subset_of(late))
          report(st, "forward-tied vertex has early feeders in the protected set");
        auto tree = double_star_from_arc(d, ShapeKind::OutInDoubleStar, u, w, r, s, bp);
        if (!tree) report(st, "out-in-double-star pools on the tied arc came up short");
        return StepProposal{"t4-oids", std::move(*tree), path};
      }
      if (d.in_neighbor_set(w).intersects(st.big)) {
        st.stage = "t4-ods";
        VertexSet early = VertexSet::of(n, {p1, p2});
        if (!(d.out_neighbor_set(w) & bp).subset_of(early))
          report(st, "backward-tied vertex has late exits into the protected set");
        auto tree = double_star_from_arc(d, ShapeKind::OutDoubleStar, u, w, r, s, bp);
        if (!tree) report(st, "out-double-star pools on the tied arc came up short");
        return StepProposal{"t4-ods", std::move(*tree), path};
      }
    }
    return std::nullopt;
  };

  if (auto prop = tied_step(qs[0], d.out_neighbor_set(qs[0]) - bp)) return std::move(*prop);

  int jstar = -1;
  for (int j = 0; j < m; ++j) {
    if ((d.out_neighbor_set(qs[j]) - bp).size() >= m - 1) {
      jstar = j;
      break;
    }
  }

  if (jstar >= 0) {
    const VertexId qq = qs[jstar];
    const VertexSet poolj = d.out_neighbor_set(qq) - bp;
    if (jstar > 0) {
      if (auto prop = tied_step(qq, poolj)) return std::move(*prop);
    }
    // Now nothing in this pool touches the component either way, so only
    // the first four detour vertices can absorb its forward arcs.
    const VertexSet guard4 = VertexSet::of(n, {p1, p2, p3, path[4]});
    for (VertexId w : poolj.members())
      if (!(d.out_neighbor_set(w) & bp).subset_of(guard4))
        report(st, "pool vertex has shortcuts past the fourth detour vertex");
    const auto memj = poolj.members();
    const std::vector<VertexId> ws(memj.begin(), memj.begin() + (m - 1));
    for (VertexId wk : ws) {
      if ((d.out_neighbor_set(wk) - bp).size() >= m - 2) {
        st.stage = "t4-ods";
        auto tree = double_star_from_arc(d, ShapeKind::OutDoubleStar, qq, wk, r, s, bp);
        if (!tree) report(st, "out-double-star pools on the deep branch came up short");
        return {"t4-ods", std::move(*tree), path};
      }
    }
    // Degenerate pools: every deep branch vertex points at p2, p3 and p4,
    // so p4 is interior (t >= 5), the first m-2 deep vertices form an
    // in-double-star on the p2 p3 arc, and the last one bridges the detour
    // from qq to p4.
    st.stage = "t4-ids";
    if (t == 4) report(st, "degenerate pools reached the component boundary");
    for (VertexId wk : ws)
      if (!((d.out_neighbor_set(wk) & bp) == guard4))
        report(st, "degenerate pool without the full protected overlap");
    VertexSet allowed = VertexSet::of(n, {p2, p3});
    for (int k = 0; k + 1 < m - 1; ++k) allowed.insert(ws[k]);
    auto tree =
        double_star_from_arc(d, ShapeKind::InDoubleStar, p2, p3, r, s, allowed.complement());
    if (!tree) report(st, "pinned in-double-star on the detour arc failed");
    std::vector<VertexId> detour = {path[0], p1, qq, ws[m - 2]};
    for (int i = 4; i <= t; ++i) detour.push_back(path[i]);
    return {"t4-ids", std::move(*tree), std::move(detour)};
  }

  // Every branch pool is tight, so every branch vertex points at p2 and
  // some branch vertex escapes the first one's pool: it re-routes the
  // detour while the first branch vertex and p2 carry the tree.
  st.stage = "t4-oids";
  for (VertexId qj : qs)
    if (!((d.out_neighbor_set(qj) & bp) == guard3))
      report(st, "tight branch pool without the full protected overlap");
  VertexId qstar = -1;
  const VertexSet& nq1 = d.out_neighbor_set(qs[0]);
  for (int j = 1; j < m; ++j) {
    if (!nq1.contains(qs[j])) {
      qstar = qs[j];
      break;
    }
  }
  if (qstar == -1) report(st, "first branch vertex dominates every branch vertex");
  std::vector<VertexId> detour = {path[0], p1, qstar};
  for (int i = 3; i <= t; ++i) detour.push_back(path[i]);
  VertexSet bp2 = st.big;
  for (VertexId v : detour) bp2.insert(v);
  auto tree = double_star_from_arc(d, ShapeKind::OutInDoubleStar, qs[0], p2, r, s, bp2);
  if (!tree) report(st, "out-in-double-star on the branch-to-detour arc came up short");
  return {"t4-oids", std::move(*tree), std::move(detour)};
}

// ---- the improvement loop ------------------------------------------------------

template <typename ImproveFn>
DigraphFindResult improvement_loop(const Digraph& d, Embedding seed, ImproveFn improve) {
  const int n = d.order();
  Embedding tree = std::move(seed);
  std::vector<TraceEntry> trace;
  StepState st;
  st.host = &d;
  for (int round = 0; round <= n + 2; ++round) {
    VertexSet tv = embedding_vertices(tree, n);
    SubDigraph rest = delete_vertices(d, tv);
    if (is_strongly_connected(rest.graph))
      return {std::move(tree), static_cast<int>(trace.size()), std::move(trace)};

    ComponentOrder comps = strong_components(rest.graph);
    int big_index = 0;
    for (int i = 1; i < static_cast<int>(comps.components.size()); ++i) {
      const VertexSet& c = comps.components[i];
      const VertexSet& b = comps.components[big_index];
      if (c.size() > b.size() || (c.size() == b.size() && c.front() < b.front())) big_index = i;
    }
    st.tree = &tree;
    st.big = to_host_set(comps.components[big_index], rest.to_host, n);
    st.stage = "detour";
    st.path = reentrant_path(d, st.big);
    VertexSet bp = st.big;
    for (VertexId p : st.path) bp.insert(p);

    StepProposal prop = improve(st, bp, comps, rest, big_index);
    int grown = verify_step(d, st, prop, st.big.size());
    trace.push_back({prop.label, grown});
    tree = std::move(prop.tree);
  }
  st.stage = "loop";
  st.tree = &tree;
  report(st, "improvement loop exceeded its iteration bound");
}

}  // namespace

DigraphFindResult find_star_digraph(const Digraph& d, int m) {
  ShapeSpec spec{ShapeKind::OutStar, m, 0, 0, 0, 0};
  spec.validate();
  if (!is_strongly_connected(d))
    throw precondition_error("directed star finder: host must be strongly connected");
  if (d.semi_degree() < m + 1)
    throw precondition_error("directed star finder: minimum semi-degree must be at least " +
                             std::to_string(m + 1));
  auto seed = star_from_center(d, ShapeKind::OutStar, 0, m, VertexSet(d.order()));
  if (!seed) throw contradiction_error("semi-degree bound failed to seed an out-star");
  return improvement_loop(d, std::move(*seed),
                          [&](StepState& st, const VertexSet& bp, const ComponentOrder& comps,
                              const SubDigraph& rest, int big_index) {
                            return improve_star_step(d, m, st, bp, comps, rest, big_index);
                          });
}

DigraphFindResult find_double_star_digraph(const Digraph& d, int m, int r, int s) {
  ShapeSpec spec{ShapeKind::OutDoubleStar, m, r, s, 0, 0};
  spec.validate();
  if (!is_strongly_connected(d))
    throw precondition_error("directed double-star finder: host must be strongly connected");
  if (d.semi_degree() < m + 1)
    throw precondition_error(
        "directed double-star finder: minimum semi-degree must be at least " +
        std::to_string(m + 1));
  const auto& outs = d.out_neighbors(0);
  if (outs.empty())
    throw precondition_error("directed double-star finder: vertex 0 has no out-arc");
  auto seed = double_star_from_arc(d, ShapeKind::OutDoubleStar, 0, outs.front(), r, s,
                                   VertexSet(d.order()));
  if (!seed) throw contradiction_error("semi-degree bound failed to seed an out-double-star");
  return improvement_loop(d, std::move(*seed),
                          [&](StepState& st, const VertexSet& bp, const ComponentOrder& comps,
                              const SubDigraph& rest, int big_index) {
                            return improve_double_step(d, m, r, s, st, bp, comps, rest, big_index);
                          });
}

}  // namespace nonsep
