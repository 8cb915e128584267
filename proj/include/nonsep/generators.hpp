#ifndef NONSEP_GENERATORS_HPP
#define NONSEP_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "nonsep/graph.hpp"

namespace nonsep {

// Unbiased uniform draw from [0, bound) by rejection.  Used instead of the
// standard distributions so that generated instances are identical across
// standard-library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Random simple graph on n vertices with minimum degree >= delta_min and
// connectivity >= k: fills degrees first, then adds random missing edges
// until the connectivity target holds.  Deterministic in its arguments.
Graph gen_random_graph(int n, int delta_min, int k, std::uint64_t seed);

// Random strongly connected digraph on n vertices with out- and in-degree
// >= semidelta_min at every vertex: fills both degree sides, then patches
// the condensation with sink-to-source arcs until strongly connected.
Digraph gen_random_digraph(int n, int semidelta_min, std::uint64_t seed);

// Named instances: "cycle:n" (n >= 3), "wheel:n" (hub plus a cycle on the
// other n-1 vertices, n >= 4), "kbip:a:b" (complete bipartite), and
// "petersen".  Throws parse_error on anything else.
Graph named_graph(const std::string& name);

}  // namespace nonsep

#endif  // NONSEP_GENERATORS_HPP
