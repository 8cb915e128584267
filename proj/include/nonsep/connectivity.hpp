#ifndef NONSEP_CONNECTIVITY_HPP
#define NONSEP_CONNECTIVITY_HPP

#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

// --- undirected connectivity ------------------------------------------------

bool is_connected(const Graph& g);

// Vertex connectivity.  Complete graphs (including K1) give n-1; otherwise
// the minimum over vertex-disjoint path counts between non-adjacent pairs,
// computed by unit-vertex-capacity max-flow with fast paths for 0 and 1.
int kappa(const Graph& g);

// kappa(g) >= k and |g| >= k+1.  Cheaper than kappa() for small k and
// early-exits the flow phase, so it is the call used inside search loops.
bool is_k_connected(const Graph& g, int k);

// Maximum number of internally disjoint u-v paths (u, v distinct,
// non-adjacent), capped at `limit` if limit >= 0.
int local_connectivity(const Graph& g, VertexId u, VertexId v, int limit = -1);

// --- directed connectivity -----------------------------------------------------

// Strongly connected components in a topological order of the condensation:
// all arcs between distinct components go from earlier to later components.
// Ties between incomparable components are broken by smallest contained
// vertex id.  component_of[v] is the index of v's component.
struct ComponentOrder {
  std::vector<VertexSet> components;
  std::vector<int> component_of;
};

ComponentOrder strong_components(const Digraph& d);
VertexSet max_strong_component(const Digraph& d);
bool is_strongly_connected(const Digraph& d);

// --- separators, fragments, ends ------------------------------------------------

// All minimum separating sets (size kappa(g)), lexicographically sorted.
// Requires g connected and not complete.
std::vector<VertexSet> minimum_separators(const Graph& g);

// A fragment here is a single component of g - S (for a minimum separating
// set S every component's neighborhood is exactly S, so each component is a
// fragment and every fragment is a union of them).  `complement` is the
// union of the remaining components; `is_end` says no fragment of any
// minimum separating set of g is a strict subset.
struct FragmentInfo {
  VertexSet fragment;
  VertexSet complement;  // V - S - fragment
  bool is_end = false;
};

struct SeparationContext {
  VertexSet separator;
  std::vector<FragmentInfo> fragments;  // sorted by smallest contained vertex
};

SeparationContext fragments(const Graph& g, const VertexSet& s);

// Every (separator, end-fragment) pair of g, separators in lexicographic
// order, fragments per separator by smallest contained vertex.  Connected,
// non-complete graphs always have at least two ends.
struct EndPair {
  VertexSet separator;
  VertexSet fragment;
};

std::vector<EndPair> ends(const Graph& g);

// g plus a clique on S.
Graph completion(const Graph& g, const VertexSet& s);

// For a minimum separating set S (|S| = kappa(g)) and a fragment F to S:
// whether completion(g, S) minus the complementary fragment is k-connected.
// This holds with k = kappa(g) for every fragment, and with k = kappa(g)+1
// when F is an end with |F| >= 2.
bool fragment_completion_connected(const Graph& g, const VertexSet& s, const VertexSet& f, int k);

// Membership test for the (graph, clique) pairs the finders recurse on:
// |g| >= k+1, g k-connected, C a k-clique, and every vertex outside C has
// degree >= floor(3k/2) + m - 1 in g.  With plus, g must be (k+1)-connected.
bool clique_pair_check(const Graph& g, const VertexSet& c, int k, int m, bool plus);

}  // namespace nonsep

#endif  // NONSEP_CONNECTIVITY_HPP
