#ifndef NONSEP_GRAPH_FINDER_HPP
#define NONSEP_GRAPH_FINDER_HPP

#include <optional>
#include <vector>

#include "nonsep/graph.hpp"
#include "nonsep/shapes.hpp"
#include "nonsep/vertex_set.hpp"

namespace nonsep {

// completion(g, s) restricted to f | s, with the separator translated into
// the new coordinates: the standard object the path-tree search recurses
// into when the remainder of the host develops a small separator.
struct CliquePair {
  Graph graph;
  VertexSet clique;
  std::vector<VertexId> to_host;    // pair id -> g id
  std::vector<VertexId> from_host;  // g id -> pair id (-1 if absent)
};

// Requires s and f disjoint subsets of g's vertices.
CliquePair make_clique_pair(const Graph& g, const VertexSet& s, const VertexSet& f);

// Do the premises of the lifting rule hold?  The rule: if s is a minimum
// separating set of the k-connected graph g, f a union of (not all)
// components of g - s, w a set of at most m vertices of g - s - f, and
// completion(g, s) - (f | w) is k-connected, then g - w is k-connected.
// Without `clique` the degree premise is min_degree(g) >= floor(3k/2)+m-1;
// with it the premise is instead that (g, clique) is a viable clique pair
// at order m with clique inside f | s.  Returns false as soon as any
// premise fails; never inspects g - w itself.
bool completion_lift_holds(const Graph& g, const VertexSet& s, const VertexSet& f,
                           const VertexSet& w, int k, int m,
                           const std::optional<VertexSet>& clique = std::nullopt);

// Lexicographically least path on `order` vertices starting at `start`,
// avoiding `avoid`, whose removal leaves g k-connected.
std::optional<std::vector<VertexId>> find_rooted_path(const Graph& g, VertexId start, int order,
                                                      const VertexSet& avoid, int k);

// First canonical embedding of the shape outside `forbidden` whose removal
// leaves the host k-connected.
std::optional<Embedding> first_nonseparating(const Graph& g, const ShapeSpec& spec,
                                             const VertexSet& forbidden, int k);

// The finders below share one contract: they throw precondition_error when
// the host misses the stated degree/connectivity requirements, and under
// those requirements the shape always exists, so a failed search or a
// failed certified step throws contradiction_error carrying the host as a
// witness.  Removing the returned tree keeps the host 2-connected.

// Nonseparating path of order m from vertex 0; host 3-connected with
// minimum degree >= m+2.
Embedding find_path_graph(const Graph& g, int m);

// Nonseparating star of order m (m >= 3); host 2-connected with minimum
// degree >= m+2.
Embedding find_star_graph(const Graph& g, int m);

// Nonseparating double star of order m with leaf split a : m-2-a; host
// 2-connected with minimum degree >= m+2.
Embedding find_double_star_graph(const Graph& g, int m, int a);

// Nonseparating path-star PS(r, m-r) with 1 <= r <= m-3; host 2-connected
// with minimum degree >= m+2.  Constructive: seeds a nonseparating star of
// order m-r and grows the path through the case analysis of the remainder
// (3-connected remainder, touched end, or untouched end with a recursive
// pair search), certifying each lift as it goes.
Embedding find_path_star(const Graph& g, int r, int m);

// Nonseparating path-double-star with split a : m-r-2-a on the double-star
// part of order m-r (1 <= r <= m-4).  The search realizes whichever of the
// two variants the case analysis reaches, preferring `prefer`
// (PathDoubleStar1 or PathDoubleStar2); the realized kind is reported by
// the result's shape.
Embedding find_path_double_star(const Graph& g, int r, int m, int a, ShapeKind prefer);

}  // namespace nonsep

#endif  // NONSEP_GRAPH_FINDER_HPP
