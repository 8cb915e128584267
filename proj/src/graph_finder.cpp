#include "nonsep/graph_finder.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"

namespace nonsep {

namespace {

std::string graph_dump(const Graph& g) {
  std::ostringstream w;
  w << "order=" << g.order() << '\n';
  w << "edges=";
  bool first = true;
  for (auto [u, v] : g.edge_list()) {
    if (!first) w << ' ';
    first = false;
    w << u << '-' << v;
  }
  w << '\n';
  return w.str();
}

bool extend_rooted(const Graph& g, std::vector<VertexId>& path, VertexSet& used, int order,
                   const VertexSet& avoid, int k) {
  if (static_cast<int>(path.size()) == order)
    return is_k_connected(delete_vertices(g, used).graph, k);
  for (VertexId y : g.neighbors(path.back())) {
    if (used.contains(y) || avoid.contains(y)) continue;
    used.insert(y);
    path.push_back(y);
    if (extend_rooted(g, path, used, order, avoid, k)) return true;
    path.pop_back();
    used.erase(y);
  }
  return false;
}

// One way of hanging the path off the seed tree: which kind it produces,
// which seed center carries the new growth, and that center's leaf block in
// the seed's canonical layout.  When the double-star split is even the
// second block still yields the first variant with the centers relabeled.
struct AttachPlan {
  ShapeKind kind;
  bool swap_centers;
  int center;
  int leaf_lo;
  int leaf_hi;
};

std::vector<AttachPlan> attach_plans(const ShapeSpec& part, ShapeKind prefer) {
  if (part.kind == ShapeKind::Star) return {{ShapeKind::PathStar, false, 0, 1, part.m}};
  AttachPlan one{ShapeKind::PathDoubleStar1, false, 0, 2, 2 + part.a};
  AttachPlan two = part.a > part.b
                       ? AttachPlan{ShapeKind::PathDoubleStar2, false, 1, 2 + part.a, part.m}
                       : AttachPlan{ShapeKind::PathDoubleStar1, true, 1, 2 + part.a, part.m};
  if (prefer == ShapeKind::PathDoubleStar2 && part.a > part.b) return {two, one};
  return {one, two};
}

// Final tree from the seed map, the path-bearing leaf, and the path tail.
// `exclude` is the seed leaf the bearer replaces: the bearer itself when it
// already sits on the seed, or the dropped leaf when the bearer is new.
Embedding assemble_tree(const ShapeSpec& part, const AttachPlan& plan, int r,
                        const std::vector<VertexId>& seed, VertexId bearer, VertexId exclude,
                        const std::vector<VertexId>& tail) {
  const int q = part.m;
  const int m = q + r;
  std::vector<VertexId> carry;
  for (int i = plan.leaf_lo; i < plan.leaf_hi; ++i)
    if (seed[i] != exclude) carry.push_back(seed[i]);
  std::sort(carry.begin(), carry.end());
  std::vector<VertexId> map;
  ShapeSpec spec;
  if (plan.kind == ShapeKind::PathStar) {
    spec = ShapeSpec{ShapeKind::PathStar, m, r, 0, 0, 0};
    map = {seed[0], bearer};
    map.insert(map.end(), carry.begin(), carry.end());
  } else {
    spec = ShapeSpec{plan.kind, m, r, 0, part.a, part.b};
    std::vector<VertexId> other;
    const int olo = plan.leaf_lo == 2 ? 2 + part.a : 2;
    const int ohi = plan.leaf_lo == 2 ? q : 2 + part.a;
    for (int i = olo; i < ohi; ++i) other.push_back(seed[i]);
    if (plan.kind == ShapeKind::PathDoubleStar2) {
      map = {seed[0], seed[1]};
      map.insert(map.end(), other.begin(), other.end());
      map.push_back(bearer);
      map.insert(map.end(), carry.begin(), carry.end());
    } else {
      map = {seed[plan.center], seed[1 - plan.center]};
      map.push_back(bearer);
      map.insert(map.end(), carry.begin(), carry.end());
      map.insert(map.end(), other.begin(), other.end());
    }
  }
  map.insert(map.end(), tail.begin(), tail.end());
  spec.validate();
  return Embedding{spec, std::move(map)};
}

// Finds a nonseparating path-tree (path-star or path-double-star) inside h:
// seed a nonseparating copy of `part`, then grow a path of order r off one
// leaf.  Without `clique` this is the top-level search; with it h is a
// completion pair and everything additionally avoids the clique.  Each step
// asserts the certificate that justifies it and throws contradiction_error
// when one fails.
Embedding path_tree_engine(const Graph& h, const std::optional<VertexSet>& clique,
                           const ShapeSpec& part, int r, ShapeKind prefer) {
  const int n = h.order();
  const int q = part.m;
  const int m = q + r;

  auto fail = [&](const std::string& why) -> contradiction_error {
    std::ostringstream w;
    w << "claim=" << why << '\n';
    w << "part=" << part.to_string() << '\n';
    w << "r=" << r << '\n';
    if (clique) {
      w << "clique=";
      bool first = true;
      for (VertexId v : clique->members()) {
        if (!first) w << ' ';
        first = false;
        w << v;
      }
      w << '\n';
    }
    w << graph_dump(h);
    return contradiction_error("path-tree search broke its promise: " + why, w.str());
  };

  const VertexSet forb = clique ? *clique : VertexSet(n);
  std::optional<Embedding> seed;
  enumerate_embeddings(h, part, forb, {}, [&](const Embedding& e) {
    if (!nonseparating(h, e, 2)) return false;
    seed = e;
    return true;
  });
  if (!seed) throw fail("no nonseparating seed tree exists");
  const std::vector<VertexId>& seed_map = seed->map;
  const VertexSet seed_set = embedding_vertices(*seed, n);

  SubGraph g1 = delete_vertices(h, seed_set);
  const int n1 = g1.graph.order();
  std::optional<VertexSet> clique1;
  if (clique) {
    VertexSet c1(n1);
    for (VertexId v : clique->members()) c1.insert(g1.from_host[v]);
    clique1 = c1;
  }

  const std::vector<AttachPlan> plans = attach_plans(part, prefer);

  auto finish = [&](Embedding tree) -> Embedding {
    if (clique && embedding_vertices(tree, n).intersects(*clique))
      throw fail("assembled tree meets the clique");
    if (!embedding_valid(h, tree)) throw fail("assembled tree is not an embedding");
    if (!nonseparating(h, tree, 2)) throw fail("assembled tree separates the remainder");
    return tree;
  };

  if (is_k_connected(g1.graph, 3)) {
    // Highly connected remainder: any leaf extends, so the preferred one does.
    const AttachPlan& plan = plans.front();
    const VertexId bearer = seed_map[plan.leaf_lo];
    VertexId w = -1;
    for (VertexId x : h.neighbors(bearer)) {
      if (seed_set.contains(x)) continue;
      if (clique && clique->contains(x)) continue;
      w = x;
      break;
    }
    if (w == -1) throw fail("a seed leaf has no neighbor left in the remainder");
    if (clique1) {
      if (!clique_pair_check(g1.graph, *clique1, 2, r, true))
        throw fail("remainder stopped being a viable clique pair");
    } else {
      if (g1.graph.min_degree() < r + 2) throw fail("remainder lost the degree bound");
    }
    auto p = find_rooted_path(g1.graph, g1.from_host[w], r, clique1 ? *clique1 : VertexSet(n1), 2);
    if (!p) throw fail("no nonseparating rooted path in the 3-connected remainder");
    std::vector<VertexId> tail;
    for (VertexId x : *p) tail.push_back(g1.to_host[x]);
    return finish(assemble_tree(part, plan, r, seed_map, bearer, bearer, tail));
  }

  // The remainder is exactly 2-connected: work an end over.
  const std::vector<EndPair> es = ends(g1.graph);

  auto to_host1 = [&](const VertexSet& s) {
    VertexSet out(n);
    for (VertexId v : s.members()) out.insert(g1.to_host[v]);
    return out;
  };

  // Grows the path into the fragment of `e` where the seed touches it:
  // through a leaf directly, or through a center after trading one leaf for
  // the contact vertex.  Returns nothing when the seed avoids the fragment.
  auto contact_machinery = [&](const EndPair& e) -> std::optional<Embedding> {
    const VertexSet f_host = to_host1(e.fragment);
    const VertexSet rest1 = (e.separator | e.fragment).complement();
    for (const AttachPlan& plan : plans) {
      for (int i = plan.leaf_lo; i < plan.leaf_hi; ++i) {
        const VertexId leaf = seed_map[i];
        const VertexSet touch = h.neighbor_set(leaf) & f_host;
        if (touch.empty()) continue;
        const VertexId w_host = touch.front();
        CliquePair pr = make_clique_pair(g1.graph, e.separator, e.fragment);
        if (!clique_pair_check(pr.graph, pr.clique, 2, r, true))
          throw fail("fragment side of the remainder is not a viable clique pair");
        auto p = find_rooted_path(pr.graph, pr.from_host[g1.from_host[w_host]], r, pr.clique, 2);
        if (!p) throw fail("no nonseparating rooted path on the fragment side");
        VertexSet pset1(n1);
        std::vector<VertexId> tail;
        for (VertexId x : *p) {
          const VertexId x1 = pr.to_host[x];
          pset1.insert(x1);
          tail.push_back(g1.to_host[x1]);
        }
        if (!completion_lift_holds(g1.graph, e.separator, rest1, pset1, 2, r, clique1))
          throw fail("lift premises failed for the leaf-contact path");
        return assemble_tree(part, plan, r, seed_map, leaf, leaf, tail);
      }
    }
    for (const AttachPlan& plan : plans) {
      const VertexId c = seed_map[plan.center];
      const VertexSet touch = h.neighbor_set(c) & f_host;
      if (touch.empty()) continue;
      const VertexId w_host = touch.front();
      const VertexId dropped = seed_map[plan.leaf_hi - 1];
      VertexSet t2 = seed_set;
      t2.erase(dropped);
      SubGraph g2 = delete_vertices(h, t2);
      const int n2 = g2.graph.order();
      VertexSet sep2(n2);
      VertexSet frag2(n2);
      for (VertexId v : e.separator.members()) sep2.insert(g2.from_host[g1.to_host[v]]);
      for (VertexId v : e.fragment.members()) frag2.insert(g2.from_host[g1.to_host[v]]);
      const VertexSet rest2 = (sep2 | frag2).complement();
      std::optional<VertexSet> clique2;
      if (clique) {
        VertexSet c2(n2);
        for (VertexId v : clique->members()) c2.insert(g2.from_host[v]);
        clique2 = c2;
      }
      CliquePair pr = make_clique_pair(g2.graph, sep2, frag2);
      if (!clique_pair_check(pr.graph, pr.clique, 2, r + 1, true))
        throw fail("fragment side is not a viable clique pair after widening the tree");
      auto p = find_rooted_path(pr.graph, pr.from_host[g2.from_host[w_host]], r + 1, pr.clique, 2);
      if (!p) throw fail("no nonseparating rooted path from the center contact");
      VertexSet pset2(n2);
      std::vector<VertexId> tail;
      for (VertexId x : *p) {
        const VertexId x2 = pr.to_host[x];
        pset2.insert(x2);
        tail.push_back(g2.to_host[x2]);
      }
      if (!completion_lift_holds(g2.graph, sep2, rest2, pset2, 2, r + 1, clique2))
        throw fail("lift premises failed for the center-contact path");
      const std::vector<VertexId> tail_rest(tail.begin() + 1, tail.end());
      return assemble_tree(part, plan, r, seed_map, w_host, dropped, tail_rest);
    }
    return std::nullopt;
  };

  if (clique1) {
    // Pair mode: pick the first end clear of the clique; the seed must touch
    // it because the pair host is 3-connected.
    const EndPair* chosen = nullptr;
    for (const EndPair& e : es) {
      if (!e.fragment.intersects(*clique1)) {
        chosen = &e;
        break;
      }
    }
    if (!chosen) throw fail("every end of the remainder meets the clique");
    auto tree = contact_machinery(*chosen);
    if (!tree) throw fail("the seed tree avoids the chosen end entirely");
    return finish(std::move(*tree));
  }

  for (const EndPair& e : es) {
    bool touched = false;
    const VertexSet f_host = to_host1(e.fragment);
    for (VertexId v : seed_set.members()) {
      if (h.neighbor_set(v).intersects(f_host)) {
        touched = true;
        break;
      }
    }
    if (!touched) continue;
    auto tree = contact_machinery(e);
    if (!tree) throw fail("a touched end lost its contact");
    return finish(std::move(*tree));
  }

  // No end is touched, so the first end is an end of the host itself and
  // the whole search restarts inside its fragment-side completion pair.
  const EndPair& e = es.front();
  const VertexSet f_host = to_host1(e.fragment);
  const VertexSet s_host = to_host1(e.separator);
  VertexSet reach(n);
  for (VertexId v : f_host.members()) reach |= h.neighbor_set(v);
  reach -= f_host;
  if (!(reach == s_host)) throw fail("an untouched end still reaches past its separator");
  const VertexSet rest_host = (s_host | f_host).complement();
  CliquePair pr = make_clique_pair(h, s_host, f_host);
  if (!clique_pair_check(pr.graph, pr.clique, 2, m, true))
    throw fail("the untouched fragment side is not a viable clique pair");
  const Embedding inner = path_tree_engine(pr.graph, pr.clique, part, r, prefer);
  std::vector<VertexId> map;
  for (VertexId x : inner.map) map.push_back(pr.to_host[x]);
  Embedding tree{inner.shape, std::move(map)};
  const VertexSet tset = embedding_vertices(tree, n);
  if (!completion_lift_holds(h, s_host, rest_host, tset, 2, m, std::nullopt))
    throw fail("outer lift premises failed");
  return finish(std::move(tree));
}

void require_host(const Graph& g, int m, const char* who) {
  if (!is_k_connected(g, 2))
    throw precondition_error(std::string(who) + ": host must be 2-connected");
  if (g.min_degree() < m + 2)
    throw precondition_error(std::string(who) + ": minimum degree must be at least order+2");
}

}  // namespace

CliquePair make_clique_pair(const Graph& g, const VertexSet& s, const VertexSet& f) {
  if (s.universe() != g.order() || f.universe() != g.order())
    throw precondition_error("clique pair: universe mismatch");
  if (s.intersects(f)) throw precondition_error("clique pair: separator meets fragment");
  const Graph comp = completion(g, s);
  SubGraph sub = delete_vertices(comp, (s | f).complement());
  VertexSet cl(sub.graph.order());
  for (VertexId v : s.members()) cl.insert(sub.from_host[v]);
  return CliquePair{std::move(sub.graph), std::move(cl), std::move(sub.to_host),
                    std::move(sub.from_host)};
}

bool completion_lift_holds(const Graph& g, const VertexSet& s, const VertexSet& f,
                           const VertexSet& w, int k, int m,
                           const std::optional<VertexSet>& clique) {
  const int n = g.order();
  if (s.universe() != n || f.universe() != n || w.universe() != n)
    throw precondition_error("completion lift: universe mismatch");
  if (clique && clique->universe() != n)
    throw precondition_error("completion lift: universe mismatch");
  if (k < 1 || m < 0) return false;
  if (s.intersects(f) || s.intersects(w) || f.intersects(w)) return false;
  if (w.size() > m) return false;
  if (clique) {
    if (!clique->subset_of(f | s)) return false;
    if (!clique_pair_check(g, *clique, k, m, false)) return false;
  } else {
    if (!is_k_connected(g, k)) return false;
    if (g.min_degree() < (3 * k) / 2 + m - 1) return false;
  }
  // s must be a minimum separating set with f a union of its fragments.
  if (s.size() != k) return false;
  if (f.empty()) return false;
  const VertexSet rest = (s | f).complement();
  if (rest.empty()) return false;
  for (VertexId v : f.members())
    if (g.neighbor_set(v).intersects(rest)) return false;
  const Graph comp = completion(g, s);
  return is_k_connected(delete_vertices(comp, f | w).graph, k);
}

std::optional<std::vector<VertexId>> find_rooted_path(const Graph& g, VertexId start, int order,
                                                      const VertexSet& avoid, int k) {
  const int n = g.order();
  if (avoid.universe() != n) throw precondition_error("rooted path: universe mismatch");
  if (start < 0 || start >= n) throw precondition_error("rooted path: start out of range");
  if (order < 1) throw precondition_error("rooted path: order must be positive");
  if (avoid.contains(start)) throw precondition_error("rooted path: start is excluded");
  std::vector<VertexId> path{start};
  VertexSet used = VertexSet::of(n, {start});
  if (extend_rooted(g, path, used, order, avoid, k)) return path;
  return std::nullopt;
}

std::optional<Embedding> first_nonseparating(const Graph& g, const ShapeSpec& spec,
                                             const VertexSet& forbidden, int k) {
  std::optional<Embedding> hit;
  enumerate_embeddings(g, spec, forbidden, {}, [&](const Embedding& e) {
    if (!nonseparating(g, e, k)) return false;
    hit = e;
    return true;
  });
  return hit;
}

Embedding find_path_graph(const Graph& g, int m) {
  ShapeSpec spec{ShapeKind::Path, m, 0, 0, 0, 0};
  spec.validate();
  if (!is_k_connected(g, 3))
    throw precondition_error("path finder: host must be 3-connected");
  if (g.min_degree() < m + 2)
    throw precondition_error("path finder: minimum degree must be at least order+2");
  auto p = find_rooted_path(g, 0, m, VertexSet(g.order()), 2);
  if (!p)
    throw contradiction_error("path search broke its promise: no nonseparating rooted path",
                              graph_dump(g));
  return Embedding{spec, std::move(*p)};
}

Embedding find_star_graph(const Graph& g, int m) {
  ShapeSpec spec{ShapeKind::Star, m, 0, 0, 0, 0};
  spec.validate();
  require_host(g, m, "star finder");
  auto e = first_nonseparating(g, spec, VertexSet(g.order()), 2);
  if (!e)
    throw contradiction_error("star search broke its promise: every star separates",
                              graph_dump(g));
  return *e;
}

Embedding find_double_star_graph(const Graph& g, int m, int a) {
  ShapeSpec spec{ShapeKind::DoubleStar, m, 0, 0, a, m - 2 - a};
  spec.validate();
  require_host(g, m, "double-star finder");
  auto e = first_nonseparating(g, spec, VertexSet(g.order()), 2);
  if (!e)
    throw contradiction_error("double-star search broke its promise: every double star separates",
                              graph_dump(g));
  return *e;
}

Embedding find_path_star(const Graph& g, int r, int m) {
  ShapeSpec spec{ShapeKind::PathStar, m, r, 0, 0, 0};
  spec.validate();
  require_host(g, m, "path-star finder");
  ShapeSpec part{ShapeKind::Star, m - r, 0, 0, 0, 0};
  part.validate();
  return path_tree_engine(g, std::nullopt, part, r, ShapeKind::PathStar);
}

Embedding find_path_double_star(const Graph& g, int r, int m, int a, ShapeKind prefer) {
  const int q = m - r;
  const int b = q - 2 - a;
  if (prefer != ShapeKind::PathDoubleStar1 && prefer != ShapeKind::PathDoubleStar2)
    throw parse_error("path-double-star finder: prefer must be one of the two variants");
  ShapeSpec spec{prefer == ShapeKind::PathDoubleStar2 && a == b ? ShapeKind::PathDoubleStar1
                                                                : prefer,
                 m, r, 0, a, b};
  spec.validate();
  require_host(g, m, "path-double-star finder");
  ShapeSpec part{ShapeKind::DoubleStar, q, 0, 0, a, b};
  part.validate();
  return path_tree_engine(g, std::nullopt, part, r, spec.kind);
}

}  // namespace nonsep
