#ifndef NONSEP_DIGRAPH_FINDER_HPP
#define NONSEP_DIGRAPH_FINDER_HPP

#include <string>
#include <vector>

#include "nonsep/graph.hpp"
#include "nonsep/shapes.hpp"
#include "nonsep/vertex_set.hpp"

namespace nonsep {

// One accepted improvement step: which case of the step analysis fired and
// how large the biggest strong component of host - tree is afterwards.  The
// sizes along a run are strictly increasing.
struct TraceEntry {
  std::string step;
  int component_size = 0;

  bool operator==(const TraceEntry&) const = default;
};

struct DigraphFindResult {
  Embedding tree;
  int iterations = 0;             // accepted improvement steps
  std::vector<TraceEntry> trace;  // one entry per improvement step
};

// Shortest closed detour through the outside of h: a dipath p0 p1 ... pt
// (t >= 2) with p0 and pt in h (possibly equal) and all interior vertices
// outside h, minimizing t.  Ties break toward the lexicographically
// smallest vertex sequence.  Requires d strongly connected and h a
// nonempty proper subset of its vertices.
std::vector<VertexId> reentrant_path(const Digraph& d, const VertexSet& h);

// Nonseparating out-star or in-star of order m (m >= 2) in a strongly
// connected digraph with minimum semi-degree >= m+1.  Starts from an
// arbitrary out-star and repeatedly replaces the tree so that the largest
// strong component of d - tree strictly grows, until d - tree is strongly
// connected.  The result's shape kind reports which orientation was found.
// Throws precondition_error if the connectivity or degree requirement
// fails, and contradiction_error (with a witness dump) if an improvement
// step does not behave as the analysis promises.
DigraphFindResult find_star_digraph(const Digraph& d, int m);

// The same scheme for the directed double stars: returns a nonseparating
// ODS/IDS/OIDS(m; r, s) with r, s >= 1 and r + s = m - 2 (hence m >= 4),
// again under minimum semi-degree >= m+1.
DigraphFindResult find_double_star_digraph(const Digraph& d, int m, int r, int s);

}  // namespace nonsep

#endif  // NONSEP_DIGRAPH_FINDER_HPP
