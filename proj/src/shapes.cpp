#include "nonsep/shapes.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

#include "nonsep/connectivity.hpp"

namespace nonsep {

namespace {

struct KindName {
  ShapeKind kind;
  const char* name;
  int params;  // -1: see parse (pds takes 2 or 3)
};

constexpr KindName kind_names[] = {
    {ShapeKind::Path, "path", 1},
    {ShapeKind::Star, "star", 1},
    {ShapeKind::DoubleStar, "dstar", 2},
    {ShapeKind::PathStar, "ps", 2},
    {ShapeKind::PathDoubleStar1, "pds1", -1},
    {ShapeKind::PathDoubleStar2, "pds2", -1},
    {ShapeKind::OutStar, "os", 1},
    {ShapeKind::InStar, "is", 1},
    {ShapeKind::OutDoubleStar, "ods", 3},
    {ShapeKind::InDoubleStar, "ids", 3},
    {ShapeKind::OutInDoubleStar, "oids", 3},
};

const KindName& kind_entry(ShapeKind kind) {
  for (const KindName& e : kind_names)
    if (e.kind == kind) return e;
  throw parse_error("unknown shape kind");
}

int parse_param(const std::string& tok) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw parse_error("shape parameter '" + tok + "' is not an integer");
  }
  if (used != tok.size()) throw parse_error("shape parameter '" + tok + "' is not an integer");
  return value;
}

}  // namespace

ShapeSpec ShapeSpec::parse(const std::string& text) {
  std::vector<std::string> tok;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ':')) tok.push_back(piece);
  if (tok.empty()) throw parse_error("empty shape");

  const KindName* entry = nullptr;
  for (const KindName& e : kind_names)
    if (tok[0] == e.name) entry = &e;
  if (!entry) throw parse_error("unknown shape '" + tok[0] + "'");

  std::vector<int> p;
  for (std::size_t i = 1; i < tok.size(); ++i) p.push_back(parse_param(tok[i]));

  ShapeSpec spec;
  spec.kind = entry->kind;
  bool pds = entry->params == -1;
  if (pds ? (p.size() != 2 && p.size() != 3) : static_cast<int>(p.size()) != entry->params)
    throw parse_error("shape '" + tok[0] + "' takes " +
                      (pds ? std::string("2 or 3") : std::to_string(entry->params)) +
                      " parameters");

  switch (spec.kind) {
    case ShapeKind::Path:
    case ShapeKind::Star:
    case ShapeKind::OutStar:
    case ShapeKind::InStar:
      spec.m = p[0];
      break;
    case ShapeKind::DoubleStar:
      spec.m = p[0];
      spec.a = p[1];
      spec.b = spec.m - 2 - spec.a;
      break;
    case ShapeKind::PathStar:
      spec.r = p[0];
      spec.m = p[1];
      break;
    case ShapeKind::PathDoubleStar1:
    case ShapeKind::PathDoubleStar2: {
      spec.r = p[0];
      spec.m = p[1];
      int leaves = spec.m - spec.r - 2;
      if (p.size() == 3) {
        spec.a = p[2];
      } else if (spec.kind == ShapeKind::PathDoubleStar1 || leaves % 2 == 1) {
        spec.a = (leaves + 1) / 2;  // most balanced split with a >= b
      } else {
        spec.a = leaves / 2 + 1;  // most balanced split with a > b
      }
      spec.b = leaves - spec.a;
      break;
    }
    case ShapeKind::OutDoubleStar:
    case ShapeKind::InDoubleStar:
    case ShapeKind::OutInDoubleStar:
      spec.m = p[0];
      spec.r = p[1];
      spec.s = p[2];
      break;
  }
  spec.validate();
  return spec;
}

std::string ShapeSpec::to_string() const {
  std::string out = kind_entry(kind).name;
  auto put = [&](int v) { out += ':' + std::to_string(v); };
  switch (kind) {
    case ShapeKind::Path:
    case ShapeKind::Star:
    case ShapeKind::OutStar:
    case ShapeKind::InStar:
      put(m);
      break;
    case ShapeKind::DoubleStar:
      put(m);
      put(a);
      break;
    case ShapeKind::PathStar:
      put(r);
      put(m);
      break;
    case ShapeKind::PathDoubleStar1:
    case ShapeKind::PathDoubleStar2:
      put(r);
      put(m);
      put(a);
      break;
    case ShapeKind::OutDoubleStar:
    case ShapeKind::InDoubleStar:
    case ShapeKind::OutInDoubleStar:
      put(m);
      put(r);
      put(s);
      break;
  }
  return out;
}

void ShapeSpec::validate() const {
  auto fail = [&](const std::string& why) {
    throw parse_error("bad shape " + std::string(kind_entry(kind).name) + ": " + why);
  };
  switch (kind) {
    case ShapeKind::Path:
      if (m < 1) fail("a path needs at least one vertex");
      break;
    case ShapeKind::Star:
      if (m < 3) fail("a star needs at least two leaves");
      break;
    case ShapeKind::DoubleStar:
      if (m < 4) fail("a double star needs at least four vertices");
      if (b < 1 || a < b) fail("leaf split must satisfy a >= b >= 1 with a + b = m - 2");
      break;
    case ShapeKind::PathStar:
      if (r < 1) fail("path length must be at least one");
      if (m - r < 3) fail("the star part needs at least two leaves");
      break;
    case ShapeKind::PathDoubleStar1:
      if (r < 1) fail("path length must be at least one");
      if (m - r < 4) fail("the double-star part needs at least four vertices");
      if (b < 1 || a < b) fail("leaf split must satisfy a >= b >= 1");
      break;
    case ShapeKind::PathDoubleStar2:
      if (r < 1) fail("path length must be at least one");
      if (m - r < 4) fail("the double-star part needs at least four vertices");
      if (b < 1 || a <= b) fail("leaf split must satisfy a > b >= 1");
      break;
    case ShapeKind::OutStar:
    case ShapeKind::InStar:
      if (m < 2) fail("a directed star needs at least one leaf");
      break;
    case ShapeKind::OutDoubleStar:
    case ShapeKind::InDoubleStar:
    case ShapeKind::OutInDoubleStar:
      if (m < 4) fail("a directed double star needs at least four vertices");
      if (r < 1 || s < 1 || r + s != m - 2) fail("leaf counts must satisfy r, s >= 1 and r + s = m - 2");
      break;
  }
}

bool ShapeSpec::directed() const {
  switch (kind) {
    case ShapeKind::OutStar:
    case ShapeKind::InStar:
    case ShapeKind::OutDoubleStar:
    case ShapeKind::InDoubleStar:
    case ShapeKind::OutInDoubleStar:
      return true;
    default:
      return false;
  }
}

// --- layouts ----------------------------------------------------------------

std::vector<std::pair<VertexId, VertexId>> shape_edges(const ShapeSpec& spec) {
  spec.validate();
  if (spec.directed()) throw precondition_error("shape_edges needs an undirected shape");
  std::vector<std::pair<VertexId, VertexId>> out;
  int q = spec.m - spec.r;  // order of the star / double-star part
  auto chain = [&](VertexId from) {
    // path vertices occupy q..m-1 and hang off `from`
    VertexId prev = from;
    for (VertexId v = q; v < spec.m; ++v) {
      out.emplace_back(prev, v);
      prev = v;
    }
  };
  switch (spec.kind) {
    case ShapeKind::Path:
      for (VertexId v = 0; v + 1 < spec.m; ++v) out.emplace_back(v, v + 1);
      break;
    case ShapeKind::Star:
      for (VertexId v = 1; v < spec.m; ++v) out.emplace_back(0, v);
      break;
    case ShapeKind::DoubleStar:
      out.emplace_back(0, 1);
      for (VertexId v = 2; v < 2 + spec.a; ++v) out.emplace_back(0, v);
      for (VertexId v = 2 + spec.a; v < spec.m; ++v) out.emplace_back(1, v);
      break;
    case ShapeKind::PathStar:
      for (VertexId v = 1; v < q; ++v) out.emplace_back(0, v);
      chain(1);
      break;
    case ShapeKind::PathDoubleStar1:
    case ShapeKind::PathDoubleStar2:
      out.emplace_back(0, 1);
      for (VertexId v = 2; v < 2 + spec.a; ++v) out.emplace_back(0, v);
      for (VertexId v = 2 + spec.a; v < q; ++v) out.emplace_back(1, v);
      chain(spec.kind == ShapeKind::PathDoubleStar1 ? 2 : 2 + spec.a);
      break;
    default:
      break;  // unreachable
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> shape_arcs(const ShapeSpec& spec) {
  spec.validate();
  if (!spec.directed()) throw precondition_error("shape_arcs needs a directed shape");
  std::vector<std::pair<VertexId, VertexId>> out;
  switch (spec.kind) {
    case ShapeKind::OutStar:
      for (VertexId v = 1; v < spec.m; ++v) out.emplace_back(0, v);
      break;
    case ShapeKind::InStar:
      for (VertexId v = 1; v < spec.m; ++v) out.emplace_back(v, 0);
      break;
    case ShapeKind::OutDoubleStar:
      out.emplace_back(0, 1);
      for (VertexId v = 2; v < 2 + spec.r; ++v) out.emplace_back(0, v);
      for (VertexId v = 2 + spec.r; v < spec.m; ++v) out.emplace_back(1, v);
      break;
    case ShapeKind::InDoubleStar:
      out.emplace_back(0, 1);
      for (VertexId v = 2; v < 2 + spec.r; ++v) out.emplace_back(v, 0);
      for (VertexId v = 2 + spec.r; v < spec.m; ++v) out.emplace_back(v, 1);
      break;
    case ShapeKind::OutInDoubleStar:
      out.emplace_back(0, 1);
      for (VertexId v = 2; v < 2 + spec.r; ++v) out.emplace_back(0, v);
      for (VertexId v = 2 + spec.r; v < spec.m; ++v) out.emplace_back(v, 1);
      break;
    default:
      break;  // unreachable
  }
  return out;
}

Graph shape_graph(const ShapeSpec& spec) { return Graph::from_edges(spec.m, shape_edges(spec)); }

Digraph shape_digraph(const ShapeSpec& spec) {
  return Digraph::from_arcs(spec.m, shape_arcs(spec));
}

std::vector<std::pair<int, int>> symmetry_blocks(const ShapeSpec& spec) {
  spec.validate();
  int q = spec.m - spec.r;
  std::vector<std::pair<int, int>> blocks;
  switch (spec.kind) {
    case ShapeKind::Path:
      break;
    case ShapeKind::Star:
    case ShapeKind::OutStar:
    case ShapeKind::InStar:
      blocks = {{1, spec.m}};
      break;
    case ShapeKind::DoubleStar:
      blocks = {{2, 2 + spec.a}, {2 + spec.a, spec.m}};
      break;
    case ShapeKind::PathStar:
      blocks = {{2, q}};
      break;
    case ShapeKind::PathDoubleStar1:
      blocks = {{3, 2 + spec.a}, {2 + spec.a, q}};
      break;
    case ShapeKind::PathDoubleStar2:
      blocks = {{2, 2 + spec.a}, {3 + spec.a, q}};
      break;
    case ShapeKind::OutDoubleStar:
    case ShapeKind::InDoubleStar:
    case ShapeKind::OutInDoubleStar:
      blocks = {{2, 2 + spec.r}, {2 + spec.r, spec.m}};
      break;
  }
  std::erase_if(blocks, [](auto b) { return b.second - b.first < 2; });
  return blocks;
}

bool swap_symmetric(const ShapeSpec& spec) {
  return spec.kind == ShapeKind::DoubleStar && spec.a == spec.b;
}

bool reversal_symmetric(const ShapeSpec& spec) {
  return spec.kind == ShapeKind::Path && spec.m >= 2;
}

std::vector<ShapeSpec> shape_family(const ShapeSpec& spec) {
  spec.validate();
  std::vector<ShapeKind> kinds;
  switch (spec.kind) {
    case ShapeKind::OutStar:
    case ShapeKind::InStar:
      kinds = {ShapeKind::OutStar, ShapeKind::InStar};
      break;
    case ShapeKind::OutDoubleStar:
    case ShapeKind::InDoubleStar:
    case ShapeKind::OutInDoubleStar:
      kinds = {ShapeKind::OutDoubleStar, ShapeKind::InDoubleStar, ShapeKind::OutInDoubleStar};
      break;
    case ShapeKind::PathDoubleStar1:
    case ShapeKind::PathDoubleStar2:
      kinds = {ShapeKind::PathDoubleStar1};
      if (spec.a > spec.b) kinds.push_back(ShapeKind::PathDoubleStar2);
      break;
    default:
      kinds = {spec.kind};
      break;
  }
  // requested kind first, the rest in the order above
  std::stable_partition(kinds.begin(), kinds.end(),
                        [&](ShapeKind k) { return k == spec.kind; });
  std::vector<ShapeSpec> out;
  for (ShapeKind k : kinds) {
    ShapeSpec variant = spec;
    variant.kind = k;
    variant.validate();
    out.push_back(variant);
  }
  return out;
}

// --- embeddings -------------------------------------------------------------

VertexSet embedding_vertices(const Embedding& e, int universe) {
  VertexSet out(universe);
  for (VertexId v : e.map) out.insert(v);
  return out;
}

namespace {

enum class ArcMode { Undirected, ParentToChild, ChildToParent };

struct ChildConstraint {
  int parent = -1;
  ArcMode mode = ArcMode::Undirected;
};

// Per shape index > 0: the earlier vertex it attaches to.  Layouts are trees
// listed parent-before-child, so there is exactly one.
std::vector<ChildConstraint> child_constraints(const ShapeSpec& spec) {
  std::vector<ChildConstraint> cons(spec.m);
  std::vector<char> seen(spec.m, 0);
  auto record = [&](int child, int parent, ArcMode mode) {
    if (seen[child]) throw error("shape layout is not parent-before-child");
    seen[child] = 1;
    cons[child] = {parent, mode};
  };
  if (spec.directed()) {
    for (auto [x, y] : shape_arcs(spec)) {
      if (x < y)
        record(y, x, ArcMode::ParentToChild);
      else
        record(x, y, ArcMode::ChildToParent);
    }
  } else {
    for (auto [x, y] : shape_edges(spec)) record(std::max(x, y), std::min(x, y), ArcMode::Undirected);
  }
  for (int i = 1; i < spec.m; ++i)
    if (!seen[i]) throw error("shape layout leaves a vertex unattached");
  return cons;
}

// Index of the previous interchangeable sibling that must carry a smaller
// host id, or -1.  Anchored indices are pinned, so the chain only links pairs
// that are both inside the unanchored suffix of a block.
std::vector<int> block_predecessors(const ShapeSpec& spec, int anchor_count) {
  std::vector<int> prev(spec.m, -1);
  for (auto [lo, hi] : symmetry_blocks(spec))
    for (int i = std::max(lo + 1, anchor_count + 1); i < hi; ++i) prev[i] = i - 1;
  return prev;
}

template <typename Host>
void enumerate_impl(const Host& host, const ShapeSpec& spec, const VertexSet& forbidden,
                    const std::vector<VertexId>& anchors,
                    const std::function<bool(const Embedding&)>& visit) {
  spec.validate();
  constexpr bool host_directed = std::is_same_v<Host, Digraph>;
  if (spec.directed() != host_directed)
    throw precondition_error("shape family does not match the host family");
  int n = host.order();
  if (forbidden.universe() != n) throw precondition_error("vertex set universe mismatch");
  if (static_cast<int>(anchors.size()) > spec.m)
    throw precondition_error("more anchors than shape vertices");

  std::vector<ChildConstraint> cons = child_constraints(spec);
  int anchored = static_cast<int>(anchors.size());
  std::vector<int> block_prev = block_predecessors(spec, anchored);

  std::vector<VertexId> map(spec.m, -1);
  VertexSet used(n);
  for (int i = 0; i < anchored; ++i) {
    VertexId v = anchors[i];
    if (v < 0 || v >= n) throw precondition_error("anchor out of range");
    if (used.contains(v) || forbidden.contains(v))
      throw precondition_error("anchor reuses or hits a forbidden vertex");
    map[i] = v;
    used.insert(v);
  }
  auto satisfies = [&](int i, VertexId v) {
    const ChildConstraint& c = cons[i];
    if constexpr (host_directed) {
      if (c.mode == ArcMode::ParentToChild) return host.has_arc(map[c.parent], v);
      return host.has_arc(v, map[c.parent]);
    } else {
      return host.adjacent(map[c.parent], v);
    }
  };
  for (int i = 1; i < anchored; ++i)
    if (!satisfies(i, map[i])) throw precondition_error("anchors violate the shape layout");

  bool swap_rule = anchors.empty() && swap_symmetric(spec);
  bool reverse_rule = anchors.empty() && reversal_symmetric(spec);

  auto place = [&](auto&& self, int i) -> bool {
    if (i == spec.m) return visit(Embedding{spec, map});
    auto consider = [&](VertexId v) -> bool {
      if (used.contains(v) || forbidden.contains(v)) return false;
      if (block_prev[i] >= 0 && v < map[block_prev[i]]) return false;
      if (swap_rule && i == 1 && v < map[0]) return false;
      if (reverse_rule && i == spec.m - 1 && v < map[0]) return false;
      map[i] = v;
      used.insert(v);
      bool stop = self(self, i + 1);
      used.erase(v);
      map[i] = -1;
      return stop;
    };
    if (i == 0) {
      for (VertexId v = 0; v < n; ++v)
        if (consider(v)) return true;
    } else {
      const ChildConstraint& c = cons[i];
      const VertexSet* base;
      if constexpr (host_directed) {
        base = c.mode == ArcMode::ParentToChild ? &host.out_neighbor_set(map[c.parent])
                                                : &host.in_neighbor_set(map[c.parent]);
      } else {
        base = &host.neighbor_set(map[c.parent]);
      }
      for (VertexId v : base->members())
        if (consider(v)) return true;
    }
    return false;
  };
  place(place, anchored);
}

}  // namespace

void enumerate_embeddings(const Graph& g, const ShapeSpec& spec, const VertexSet& forbidden,
                          const std::vector<VertexId>& anchors,
                          const std::function<bool(const Embedding&)>& visit) {
  enumerate_impl(g, spec, forbidden, anchors, visit);
}

void enumerate_embeddings(const Digraph& d, const ShapeSpec& spec, const VertexSet& forbidden,
                          const std::vector<VertexId>& anchors,
                          const std::function<bool(const Embedding&)>& visit) {
  enumerate_impl(d, spec, forbidden, anchors, visit);
}

long long count_embeddings(const Graph& g, const ShapeSpec& spec, const VertexSet& forbidden) {
  long long count = 0;
  enumerate_embeddings(g, spec, forbidden, {}, [&](const Embedding&) {
    ++count;
    return false;
  });
  return count;
}

long long count_embeddings(const Digraph& d, const ShapeSpec& spec, const VertexSet& forbidden) {
  long long count = 0;
  enumerate_embeddings(d, spec, forbidden, {}, [&](const Embedding&) {
    ++count;
    return false;
  });
  return count;
}

// --- verification -----------------------------------------------------------

namespace {

template <typename Host>
void check_embedding_impl(const Host& host, const Embedding& e) {
  e.shape.validate();
  constexpr bool host_directed = std::is_same_v<Host, Digraph>;
  if (e.shape.directed() != host_directed)
    throw precondition_error("shape family does not match the host family");
  if (static_cast<int>(e.map.size()) != e.shape.m)
    throw precondition_error("embedding map has the wrong size");
  VertexSet used(host.order());
  for (VertexId v : e.map) {
    if (v < 0 || v >= host.order()) throw precondition_error("embedding maps outside the host");
    if (used.contains(v)) throw precondition_error("embedding is not injective");
    used.insert(v);
  }
  if constexpr (host_directed) {
    for (auto [x, y] : shape_arcs(e.shape))
      if (!host.has_arc(e.map[x], e.map[y]))
        throw precondition_error("embedding misses arc " + std::to_string(e.map[x]) + " -> " +
                                 std::to_string(e.map[y]));
  } else {
    for (auto [x, y] : shape_edges(e.shape))
      if (!host.adjacent(e.map[x], e.map[y]))
        throw precondition_error("embedding misses edge " + std::to_string(e.map[x]) + " - " +
                                 std::to_string(e.map[y]));
  }
}

}  // namespace

void check_embedding(const Graph& g, const Embedding& e) { check_embedding_impl(g, e); }
void check_embedding(const Digraph& d, const Embedding& e) { check_embedding_impl(d, e); }

bool embedding_valid(const Graph& g, const Embedding& e) {
  try {
    check_embedding(g, e);
    return true;
  } catch (const error&) {
    return false;
  }
}

bool embedding_valid(const Digraph& d, const Embedding& e) {
  try {
    check_embedding(d, e);
    return true;
  } catch (const error&) {
    return false;
  }
}

bool nonseparating(const Graph& g, const Embedding& e, int k) {
  if (!embedding_valid(g, e)) return false;
  SubGraph rest = delete_vertices(g, embedding_vertices(e, g.order()));
  return is_k_connected(rest.graph, k);
}

bool nonseparating(const Digraph& d, const Embedding& e) {
  if (!embedding_valid(d, e)) return false;
  SubDigraph rest = delete_vertices(d, embedding_vertices(e, d.order()));
  return rest.graph.order() >= 1 && is_strongly_connected(rest.graph);
}

// --- deterministic builders ---------------------------------------------------

std::optional<Embedding> star_from_center(const Digraph& d, ShapeKind kind, VertexId center,
                                          int m, const VertexSet& forbidden) {
  if (kind != ShapeKind::OutStar && kind != ShapeKind::InStar)
    throw precondition_error("star_from_center builds out- or in-stars");
  ShapeSpec spec{kind, m};
  spec.validate();
  if (forbidden.universe() != d.order()) throw precondition_error("vertex set universe mismatch");
  if (center < 0 || center >= d.order()) throw precondition_error("center out of range");
  if (forbidden.contains(center)) throw precondition_error("center is forbidden");

  VertexSet pool = (kind == ShapeKind::OutStar ? d.out_neighbor_set(center)
                                               : d.in_neighbor_set(center)) -
                   forbidden;
  pool.erase(center);
  if (pool.size() < m - 1) return std::nullopt;

  Embedding e{spec, {center}};
  for (VertexId v : pool.members()) {
    if (static_cast<int>(e.map.size()) == m) break;
    e.map.push_back(v);
  }
  return e;
}

std::optional<Embedding> double_star_from_arc(const Digraph& d, ShapeKind kind, VertexId u,
                                              VertexId v, int r, int s,
                                              const VertexSet& forbidden) {
  if (kind != ShapeKind::OutDoubleStar && kind != ShapeKind::InDoubleStar &&
      kind != ShapeKind::OutInDoubleStar)
    throw precondition_error("double_star_from_arc builds directed double stars");
  ShapeSpec spec{kind, r + s + 2, r, s};
  spec.validate();
  if (forbidden.universe() != d.order()) throw precondition_error("vertex set universe mismatch");
  if (u == v) throw precondition_error("center arc needs distinct ends");
  if (forbidden.contains(u) || forbidden.contains(v))
    throw precondition_error("center is forbidden");
  if (!d.has_arc(u, v)) throw precondition_error("center arc is missing from the host");

  VertexSet pu = kind == ShapeKind::InDoubleStar ? d.in_neighbor_set(u) : d.out_neighbor_set(u);
  VertexSet pv = kind == ShapeKind::OutDoubleStar ? d.out_neighbor_set(v) : d.in_neighbor_set(v);
  pu -= forbidden;
  pv -= forbidden;
  pu.erase(u);
  pv.erase(u);
  pu.erase(v);
  pv.erase(v);
  if (pu.size() < r || pv.size() < s || (pu | pv).size() < r + s) return std::nullopt;

  // Vertices available to only one side go there first; the shared pool tops
  // up the u side, then the v side.  The pool bounds above make this succeed.
  VertexSet shared = pu & pv;
  std::vector<VertexId> u_side, v_side;
  for (VertexId w : (pu - shared).members()) {
    if (static_cast<int>(u_side.size()) == r) break;
    u_side.push_back(w);
  }
  for (VertexId w : shared.members()) {
    if (static_cast<int>(u_side.size()) == r) break;
    u_side.push_back(w);
    shared.erase(w);
  }
  for (VertexId w : (pv - pu).members()) {
    if (static_cast<int>(v_side.size()) == s) break;
    v_side.push_back(w);
  }
  for (VertexId w : shared.members()) {
    if (static_cast<int>(v_side.size()) == s) break;
    v_side.push_back(w);
  }
  if (static_cast<int>(u_side.size()) != r || static_cast<int>(v_side.size()) != s)
    throw error("double star split failed despite feasible pools");
  std::sort(u_side.begin(), u_side.end());
  std::sort(v_side.begin(), v_side.end());

  Embedding e{spec, {u, v}};
  e.map.insert(e.map.end(), u_side.begin(), u_side.end());
  e.map.insert(e.map.end(), v_side.begin(), v_side.end());
  return e;
}

}  // namespace nonsep
