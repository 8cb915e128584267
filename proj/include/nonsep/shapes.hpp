#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

// Tree shapes the finders search for.  Canonical layouts number the vertices
// parent-before-child: centers first, then leaf blocks, then path vertices,
// so every vertex after the first attaches to an earlier one.
enum class ShapeKind {
  Path,             // path:m        chain 0 - 1 - ... - m-1
  Star,             // star:m        center 0, leaves 1..m-1
  DoubleStar,       // dstar:m:a     centers 0 - 1, a leaves at 0, b = m-2-a
                    //               leaves at 1, a >= b >= 1
  PathStar,         // ps:r:m        star of order m-r; leaf 1 carries a path
                    //               of r extra vertices m-r..m-1
  PathDoubleStar1,  // pds1:r:m[:a]  double star of order m-r; the path hangs
                    //               off leaf 2 (a-side), a >= b >= 1
  PathDoubleStar2,  // pds2:r:m[:a]  path hangs off leaf a+2 (b-side), a > b >= 1
  OutStar,          // os:m          arcs 0 -> j
  InStar,           // is:m          arcs j -> 0
  OutDoubleStar,    // ods:m:r:s     arc 0 -> 1, arcs 0 -> u-leaves, 1 -> v-leaves
  InDoubleStar,     // ids:m:r:s     arc 0 -> 1, arcs u-leaves -> 0, v-leaves -> 1
  OutInDoubleStar,  // oids:m:r:s    arc 0 -> 1, arcs 0 -> u-leaves, v-leaves -> 1
};

// A parsed shape request.  `m` is always the total number of vertices.  `r`
// is the path length for path-bearing shapes and the u-side leaf count for
// directed double stars (`s` the v-side count); `a` and `b` give the leaf
// split of undirected double stars with a >= b.
struct ShapeSpec {
  ShapeKind kind = ShapeKind::Star;
  int m = 0;
  int r = 0;
  int s = 0;
  int a = 0;
  int b = 0;

  // Parses the "kind:params" grammar shown next to ShapeKind.  Omitting the
  // :a of pds1/pds2 picks the most balanced legal split.  Throws parse_error.
  static ShapeSpec parse(const std::string& text);

  std::string to_string() const;

  // Throws parse_error unless the parameters describe a legal shape.
  void validate() const;

  bool directed() const;
  int order() const { return m; }

  bool operator==(const ShapeSpec&) const = default;
};

// Canonical layout as an edge/arc list over vertices 0..m-1.  shape_edges is
// only for undirected kinds and shape_arcs only for directed ones; each
// throws precondition_error on the wrong family.
std::vector<std::pair<VertexId, VertexId>> shape_edges(const ShapeSpec& spec);
std::vector<std::pair<VertexId, VertexId>> shape_arcs(const ShapeSpec& spec);
Graph shape_graph(const ShapeSpec& spec);
Digraph shape_digraph(const ShapeSpec& spec);

// Interchangeable-leaf index ranges [lo, hi) of the canonical layout.
// Embeddings are canonical when host ids ascend within every block.
std::vector<std::pair<int, int>> symmetry_blocks(const ShapeSpec& spec);

// Extra automorphisms beyond leaf permutations: swapping the two centers of
// an evenly split double star, and reversing an undirected path.  Canonical
// embeddings break these with map[0] < map[1] resp. map[0] < map[m-1].
bool swap_symmetric(const ShapeSpec& spec);
bool reversal_symmetric(const ShapeSpec& spec);

// The shapes an existence search for `spec` is allowed to realize, requested
// kind first: out-/in-stars stand in for each other, the three directed
// double-star kinds share one family (same r and s), and the two path-bearing
// double-star variants do too (same split, pds2 dropped when a = b).  Every
// other shape is its own family.
std::vector<ShapeSpec> shape_family(const ShapeSpec& spec);

// A placement of a shape in a host: map[i] is the host vertex playing
// canonical-layout role i.
struct Embedding {
  ShapeSpec shape;
  std::vector<VertexId> map;
};

VertexSet embedding_vertices(const Embedding& e, int universe);

// Throw precondition_error unless `e.map` is an injective placement into the
// host that realizes every edge/arc of the shape (and the shape family
// matches the host family).  The bool forms swallow the throw.
void check_embedding(const Graph& g, const Embedding& e);
void check_embedding(const Digraph& d, const Embedding& e);
bool embedding_valid(const Graph& g, const Embedding& e);
bool embedding_valid(const Digraph& d, const Embedding& e);

// True iff the embedding is valid and what remains of the host after deleting
// its vertices is non-empty and k-connected resp. strongly connected.
bool nonseparating(const Graph& g, const Embedding& e, int k);
bool nonseparating(const Digraph& d, const Embedding& e);

// Enumerate canonical embeddings avoiding `forbidden`, in lexicographic order
// of the map.  `anchors` pins map[0..anchors.size()) to the given hosts (and
// disables the center-swap / path-reversal tie-breaks, since pinned vertices
// are no longer interchangeable).  `visit` returns true to stop early.
void enumerate_embeddings(const Graph& g, const ShapeSpec& spec, const VertexSet& forbidden,
                          const std::vector<VertexId>& anchors,
                          const std::function<bool(const Embedding&)>& visit);
void enumerate_embeddings(const Digraph& d, const ShapeSpec& spec, const VertexSet& forbidden,
                          const std::vector<VertexId>& anchors,
                          const std::function<bool(const Embedding&)>& visit);
long long count_embeddings(const Graph& g, const ShapeSpec& spec, const VertexSet& forbidden);
long long count_embeddings(const Digraph& d, const ShapeSpec& spec, const VertexSet& forbidden);

// Deterministic builders used by the improvement steps.  Both return nullopt
// exactly when the stated neighborhoods are too small, never for any other
// reason.

// Out-/in-star centered at `center` whose m-1 leaves are the smallest members
// of N+(center) resp. N-(center) outside `forbidden`.
std::optional<Embedding> star_from_center(const Digraph& d, ShapeKind kind, VertexId center,
                                          int m, const VertexSet& forbidden);

// Directed double star of the given kind on the existing center arc (u, v)
// with r u-side and s v-side leaves drawn from the kind's neighbor pools
// minus {u, v} and `forbidden`.  Feasible iff |Pu| >= r, |Pv| >= s and
// |Pu u Pv| >= r + s; leaves that fit only one side are used there first,
// then the shared pool tops up the u side, all in ascending order.
std::optional<Embedding> double_star_from_arc(const Digraph& d, ShapeKind kind, VertexId u,
                                              VertexId v, int r, int s,
                                              const VertexSet& forbidden);

}  // namespace nonsep
