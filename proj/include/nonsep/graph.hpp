#ifndef NONSEP_GRAPH_HPP
#define NONSEP_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "nonsep/errors.hpp"
#include "nonsep/vertex_set.hpp"

namespace nonsep {

class Graph;
class Digraph;

// Single-owner mutable stage; Graph itself is immutable after build().
// add_edge returns false when the edge is already present, throws on loops
// and out-of-range endpoints.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  int order() const { return n_; }
  bool has_edge(VertexId u, VertexId v) const;
  bool add_edge(VertexId u, VertexId v);
  int degree(VertexId u) const { return static_cast<int>(adj_[u].members().size()); }
  Graph build() const;

 private:
  int n_;
  std::vector<VertexSet> adj_;
};

class DigraphBuilder {
 public:
  explicit DigraphBuilder(int n);
  int order() const { return n_; }
  bool has_arc(VertexId u, VertexId v) const;
  bool add_arc(VertexId u, VertexId v);
  int out_degree(VertexId u) const { return out_[u].size(); }
  int in_degree(VertexId u) const { return in_[u].size(); }
  Digraph build() const;

 private:
  int n_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// Simple undirected graph: no loops, no parallel edges.  Neighbor lists are
// sorted; adjacency is O(1) via per-vertex bit rows.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  int order() const { return n_; }
  int size() const { return m_; }
  const std::vector<VertexId>& neighbors(VertexId u) const {
    check_vertex(u);
    return adj_[u];
  }
  bool adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].contains(v);
  }
  const VertexSet& neighbor_set(VertexId u) const {
    check_vertex(u);
    return rows_[u];
  }
  int degree(VertexId u) const {
    check_vertex(u);
    return static_cast<int>(adj_[u].size());
  }
  int min_degree() const;
  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> edge_list() const;

  VertexSet vertex_set() const { return VertexSet::full(n_); }

 private:
  friend class GraphBuilder;
  void check_vertex(VertexId u) const {
    if (u < 0 || u >= n_) throw precondition_error("vertex id out of range");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexSet> rows_;
};

// Simple digraph: no loops, no parallel arcs; the two arcs of a digon are
// distinct and both allowed.
class Digraph {
 public:
  Digraph() = default;
  static Digraph from_arcs(int n, const std::vector<std::pair<VertexId, VertexId>>& arcs);

  int order() const { return n_; }
  int size() const { return m_; }
  const std::vector<VertexId>& out_neighbors(VertexId u) const {
    check_vertex(u);
    return out_[u];
  }
  const std::vector<VertexId>& in_neighbors(VertexId u) const {
    check_vertex(u);
    return in_[u];
  }
  bool has_arc(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return out_rows_[u].contains(v);
  }
  const VertexSet& out_neighbor_set(VertexId u) const {
    check_vertex(u);
    return out_rows_[u];
  }
  const VertexSet& in_neighbor_set(VertexId u) const {
    check_vertex(u);
    return in_rows_[u];
  }
  int out_degree(VertexId u) const {
    check_vertex(u);
    return static_cast<int>(out_[u].size());
  }
  int in_degree(VertexId u) const {
    check_vertex(u);
    return static_cast<int>(in_[u].size());
  }
  // min(d+(u), d-(u)) over all u.
  int semi_degree() const;
  // Arcs sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> arc_list() const;

  VertexSet vertex_set() const { return VertexSet::full(n_); }

 private:
  friend class DigraphBuilder;
  void check_vertex(VertexId u) const {
    if (u < 0 || u >= n_) throw precondition_error("vertex id out of range");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<VertexSet> out_rows_;
  std::vector<VertexSet> in_rows_;
};

// Result of induced_subgraph / delete_vertices.  to_host maps new ids back
// to the original graph; from_host maps original ids to new ids (-1 when
// the vertex was dropped).  Relabeling is order-preserving.
struct SubGraph {
  Graph graph;
  std::vector<VertexId> to_host;
  std::vector<VertexId> from_host;
};

struct SubDigraph {
  Digraph graph;
  std::vector<VertexId> to_host;
  std::vector<VertexId> from_host;
};

SubGraph induced_subgraph(const Graph& g, const VertexSet& keep);
SubGraph delete_vertices(const Graph& g, const VertexSet& drop);
SubDigraph induced_subgraph(const Digraph& d, const VertexSet& keep);
SubDigraph delete_vertices(const Digraph& d, const VertexSet& drop);

// --- edge-list text format ----------------------------------------------
//
//   n m undirected        (or: n m directed)
//   u v                   (m lines; arcs are tail head for digraphs)
//
// '#' starts a comment line; blank lines are ignored.  Parsing is strict:
// loops, duplicate edges/arcs, out-of-range ids, and count mismatches are
// all rejected.  Serialization is canonical (sorted), so a parse of the
// output reproduces the graph exactly.

struct EdgeListFile {
  bool directed = false;
  Graph graph;      // valid when !directed
  Digraph digraph;  // valid when directed
};

EdgeListFile parse_edge_list(const std::string& text);
EdgeListFile read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);
std::string to_edge_list(const Digraph& d);

}  // namespace nonsep

#endif  // NONSEP_GRAPH_HPP
