#pragma once

#include <optional>

#include "nonsep/shapes.hpp"

namespace nonsep {

// Brute-force reference implementations.  Everything here re-derives its
// answers from first principles — subset enumeration plus depth-first
// searches, reachability closure, and exhaustive injective placement — and
// deliberately shares no search logic with the constructive finders or the
// flow-based connectivity routines, so the two sides can check each other.

// Connectivity of g minus an excluded vertex set, by plain DFS.
bool oracle_connected_excluding(const Graph& g, const VertexSet& excluded);

// k-connectivity by definition: at least k+1 vertices remain and no vertex
// set of size < k disconnects what is left.
bool oracle_k_connected_excluding(const Graph& g, const VertexSet& excluded, int k);
bool oracle_k_connected(const Graph& g, int k);

// Size of the smallest separating set, or n-1 for complete graphs; found by
// trying every subset in increasing size.  Throws on the empty graph.
int oracle_kappa(const Graph& g);

// Strong connectivity of d minus an excluded set, by reachability closure.
bool oracle_strong_excluding(const Digraph& d, const VertexSet& excluded);
bool oracle_strongly_connected(const Digraph& d);

// Canonical embeddings of the shape avoiding `forbidden`, found by trying
// every host vertex at every position and filtering against the full
// edge/arc list and the symmetry tie-breaks.  Same canonical form as
// enumerate_embeddings, independently enforced.
long long oracle_count_embeddings(const Graph& g, const ShapeSpec& spec,
                                  const VertexSet& forbidden);
long long oracle_count_embeddings(const Digraph& d, const ShapeSpec& spec,
                                  const VertexSet& forbidden);

// First canonical embedding (in lexicographic map order) whose removal
// leaves a non-empty k-connected resp. strongly connected remainder.
std::optional<Embedding> oracle_find_nonseparating(const Graph& g, const ShapeSpec& spec,
                                                   int k = 2);
std::optional<Embedding> oracle_find_nonseparating(const Digraph& d, const ShapeSpec& spec);

}  // namespace nonsep
