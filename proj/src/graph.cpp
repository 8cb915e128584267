#include "nonsep/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nonsep {

namespace {

void check_order(int n) {
  if (n < 0) throw precondition_error("graph order must be non-negative");
}

}  // namespace

// --- builders -------------------------------------------------------------

GraphBuilder::GraphBuilder(int n) : n_(n) {
  check_order(n);
  adj_.assign(n, VertexSet(n));
}

bool GraphBuilder::has_edge(VertexId u, VertexId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw precondition_error("vertex id out of range");
  return adj_[u].contains(v);
}

bool GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw precondition_error("vertex id out of range");
  if (u == v) throw precondition_error("loops are not allowed");
  if (adj_[u].contains(v)) return false;
  adj_[u].insert(v);
  adj_[v].insert(u);
  return true;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.rows_ = adj_;
  g.adj_.resize(n_);
  g.m_ = 0;
  for (VertexId u = 0; u < n_; ++u) {
    g.adj_[u] = adj_[u].members();
    g.m_ += static_cast<int>(g.adj_[u].size());
  }
  g.m_ /= 2;
  return g;
}

DigraphBuilder::DigraphBuilder(int n) : n_(n) {
  check_order(n);
  out_.assign(n, VertexSet(n));
  in_.assign(n, VertexSet(n));
}

bool DigraphBuilder::has_arc(VertexId u, VertexId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw precondition_error("vertex id out of range");
  return out_[u].contains(v);
}

bool DigraphBuilder::add_arc(VertexId u, VertexId v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw precondition_error("vertex id out of range");
  if (u == v) throw precondition_error("loops are not allowed");
  if (out_[u].contains(v)) return false;
  out_[u].insert(v);
  in_[v].insert(u);
  return true;
}

Digraph DigraphBuilder::build() const {
  Digraph d;
  d.n_ = n_;
  d.out_rows_ = out_;
  d.in_rows_ = in_;
  d.out_.resize(n_);
  d.in_.resize(n_);
  d.m_ = 0;
  for (VertexId u = 0; u < n_; ++u) {
    d.out_[u] = out_[u].members();
    d.in_[u] = in_[u].members();
    d.m_ += static_cast<int>(d.out_[u].size());
  }
  return d;
}

// --- graphs ----------------------------------------------------------------

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges)
    if (!b.add_edge(u, v)) throw precondition_error("duplicate edge");
  return b.build();
}

int Graph::min_degree() const {
  if (n_ == 0) throw precondition_error("min_degree of the empty graph is undefined");
  int best = n_;
  for (VertexId u = 0; u < n_; ++u) best = std::min(best, degree(u));
  return best;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_list() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  DigraphBuilder b(n);
  for (auto [u, v] : arcs)
    if (!b.add_arc(u, v)) throw precondition_error("duplicate arc");
  return b.build();
}

int Digraph::semi_degree() const {
  if (n_ == 0) throw precondition_error("semi_degree of the empty digraph is undefined");
  int best = n_;
  for (VertexId u = 0; u < n_; ++u) best = std::min(best, std::min(out_degree(u), in_degree(u)));
  return best;
}

std::vector<std::pair<VertexId, VertexId>> Digraph::arc_list() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : out_[u]) out.emplace_back(u, v);
  return out;
}

// --- subgraphs ---------------------------------------------------------------

namespace {

std::pair<std::vector<VertexId>, std::vector<VertexId>> relabel_maps(int n, const VertexSet& keep) {
  std::vector<VertexId> to_host = keep.members();
  std::vector<VertexId> from_host(n, -1);
  for (std::size_t i = 0; i < to_host.size(); ++i) from_host[to_host[i]] = static_cast<VertexId>(i);
  return {std::move(to_host), std::move(from_host)};
}

}  // namespace

SubGraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order()) throw precondition_error("vertex set universe mismatch");
  auto [to_host, from_host] = relabel_maps(g.order(), keep);
  GraphBuilder b(static_cast<int>(to_host.size()));
  for (std::size_t i = 0; i < to_host.size(); ++i)
    for (VertexId w : g.neighbors(to_host[i])) {
      VertexId j = from_host[w];
      if (j > static_cast<VertexId>(i)) b.add_edge(static_cast<VertexId>(i), j);
    }
  return SubGraph{b.build(), std::move(to_host), std::move(from_host)};
}

SubGraph delete_vertices(const Graph& g, const VertexSet& drop) {
  if (drop.universe() != g.order()) throw precondition_error("vertex set universe mismatch");
  return induced_subgraph(g, drop.complement());
}

SubDigraph induced_subgraph(const Digraph& d, const VertexSet& keep) {
  if (keep.universe() != d.order()) throw precondition_error("vertex set universe mismatch");
  auto [to_host, from_host] = relabel_maps(d.order(), keep);
  DigraphBuilder b(static_cast<int>(to_host.size()));
  for (std::size_t i = 0; i < to_host.size(); ++i)
    for (VertexId w : d.out_neighbors(to_host[i])) {
      VertexId j = from_host[w];
      if (j >= 0) b.add_arc(static_cast<VertexId>(i), j);
    }
  return SubDigraph{b.build(), std::move(to_host), std::move(from_host)};
}

SubDigraph delete_vertices(const Digraph& d, const VertexSet& drop) {
  if (drop.universe() != d.order()) throw precondition_error("vertex set universe mismatch");
  return induced_subgraph(d, drop.complement());
}

// --- edge-list text format ----------------------------------------------------

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

long parse_int(const std::string& token, const char* what) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(token, &pos);
  } catch (const std::exception&) {
    throw parse_error(std::string("expected an integer for ") + what + ", got '" + token + "'");
  }
  if (pos != token.size())
    throw parse_error(std::string("trailing characters after ") + what + " in '" + token + "'");
  return value;
}

}  // namespace

EdgeListFile parse_edge_list(const std::string& text) {
  std::vector<std::string> lines = content_lines(text);
  if (lines.empty()) throw parse_error("empty edge list: missing header line");

  std::istringstream header(lines[0]);
  std::string n_tok, m_tok, kind, extra;
  if (!(header >> n_tok >> m_tok >> kind) || (header >> extra))
    throw parse_error("header must be: <n> <m> directed|undirected");
  long n = parse_int(n_tok, "vertex count");
  long m = parse_int(m_tok, "edge count");
  if (n < 0 || m < 0) throw parse_error("vertex and edge counts must be non-negative");

  bool directed;
  if (kind == "directed")
    directed = true;
  else if (kind == "undirected")
    directed = false;
  else
    throw parse_error("header kind must be 'directed' or 'undirected', got '" + kind + "'");

  if (static_cast<long>(lines.size()) - 1 != m)
    throw parse_error("edge count mismatch: header says " + std::to_string(m) + ", file has " +
                      std::to_string(lines.size() - 1) + " edge lines");

  EdgeListFile out;
  out.directed = directed;
  GraphBuilder gb(directed ? 0 : static_cast<int>(n));
  DigraphBuilder db(directed ? static_cast<int>(n) : 0);
  for (long i = 1; i <= m; ++i) {
    std::istringstream row(lines[i]);
    std::string u_tok, v_tok;
    if (!(row >> u_tok >> v_tok) || (row >> extra))
      throw parse_error("edge line " + std::to_string(i) + " must be: <u> <v>");
    long u = parse_int(u_tok, "endpoint");
    long v = parse_int(v_tok, "endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error("edge line " + std::to_string(i) + ": endpoint out of range");
    if (u == v) throw parse_error("edge line " + std::to_string(i) + ": loops are not allowed");
    try {
      bool fresh = directed ? db.add_arc(static_cast<VertexId>(u), static_cast<VertexId>(v))
                            : gb.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
      if (!fresh)
        throw parse_error("edge line " + std::to_string(i) + ": duplicate " +
                          (directed ? "arc" : "edge"));
    } catch (const precondition_error& e) {
      throw parse_error("edge line " + std::to_string(i) + ": " + e.what());
    }
  }
  if (directed)
    out.digraph = db.build();
  else
    out.graph = gb.build();
  return out;
}

EdgeListFile read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << " undirected\n";
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.size() << " directed\n";
  for (auto [u, v] : d.arc_list()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace nonsep
