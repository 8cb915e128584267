#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/graph_finder.hpp"
#include "nonsep/oracle.hpp"
#include "test_support.hpp"

using namespace nonsep;

namespace {

void check_tree_removal(const Graph& g, const Embedding& e) {
  CHECK(embedding_valid(g, e));
  CHECK(oracle_k_connected_excluding(g, embedding_vertices(e, g.order()), 2));
}

}  // namespace

TEST_CASE("rooted path search is lexicographically least") {
  Graph k6 = test::complete_graph(6);
  CHECK(find_rooted_path(k6, 0, 3, VertexSet(6), 2) == std::vector<VertexId>{0, 1, 2});
  CHECK(find_rooted_path(k6, 0, 3, VertexSet::of(6, {1, 2}), 2) ==
        std::vector<VertexId>{0, 3, 4});
  Graph c5 = named_graph("cycle:5");
  CHECK(find_rooted_path(c5, 0, 2, VertexSet(5), 1) == std::vector<VertexId>{0, 1});
  CHECK_FALSE(find_rooted_path(c5, 0, 2, VertexSet(5), 2).has_value());
  CHECK_FALSE(find_rooted_path(c5, 0, 5, VertexSet(5), 1).has_value());  // nothing would remain
}

TEST_CASE("clique pair extraction translates the separator") {
  Graph g = test::two_k8_shared_pair();
  CliquePair pair = make_clique_pair(g, VertexSet::of(14, {0, 1}),
                                     VertexSet::of(14, {2, 3, 4, 5, 6, 7}));
  CHECK(pair.graph.order() == 8);
  CHECK(pair.clique == VertexSet::of(8, {0, 1}));
  CHECK(pair.to_host == test::range(0, 8));
  for (VertexId v = 0; v < 8; ++v) CHECK(pair.from_host[pair.to_host[v]] == v);
  CHECK(pair.from_host[9] == -1);
  CHECK(pair.graph.size() == 28);  // a full K8

  // The separator edge is added when the host lacks it.
  test::EdgeVec edges;
  test::add_clique(edges, test::range(0, 8));
  std::vector<VertexId> b{0, 1};
  for (VertexId v : test::range(8, 14)) b.push_back(v);
  test::add_clique(edges, b);
  std::erase(edges, std::pair<VertexId, VertexId>{0, 1});
  Graph open = test::graph_of(14, edges);
  CHECK_FALSE(open.adjacent(0, 1));
  CliquePair closed = make_clique_pair(open, VertexSet::of(14, {0, 1}),
                                       VertexSet::of(14, {8, 9, 10, 11, 12, 13}));
  CHECK(closed.graph.adjacent(closed.from_host[0], closed.from_host[1]));

  CHECK_THROWS_AS(make_clique_pair(g, VertexSet::of(14, {0, 1}), VertexSet::of(14, {1, 2})),
                  precondition_error);
}

TEST_CASE("completion lift premises are each enforced") {
  Graph g = test::two_k9_shared_pair();
  const VertexSet s = VertexSet::of(16, {0, 1});
  VertexSet far(16);
  for (VertexId v : test::range(9, 16)) far.insert(v);

  CHECK(completion_lift_holds(g, s, far, VertexSet::of(16, {2, 3}), 2, 3));
  CHECK(completion_lift_holds(g, s, far, VertexSet(16), 2, 3));  // empty w is allowed
  // |w| must stay within the order bound.
  CHECK_FALSE(completion_lift_holds(g, s, far, VertexSet::of(16, {2, 3}), 2, 1));
  // w must avoid s and f.
  CHECK_FALSE(completion_lift_holds(g, s, far, VertexSet::of(16, {0, 2}), 2, 3));
  CHECK_FALSE(completion_lift_holds(g, s, far, VertexSet::of(16, {9, 2}), 2, 3));
  // f must be a union of components of g - s.
  VertexSet partial = far;
  partial.erase(15);
  CHECK_FALSE(completion_lift_holds(g, s, partial, VertexSet::of(16, {2}), 2, 3));
  // f cannot swallow everything outside s.
  VertexSet everything = s.complement();
  CHECK_FALSE(completion_lift_holds(g, s, everything, VertexSet(16), 2, 3));
  // The separator must have exactly k vertices.
  CHECK_FALSE(completion_lift_holds(g, VertexSet::of(16, {0}), far, VertexSet(16), 2, 3));
  // Degree premise: min degree 8 stands against floor(3k/2) + m - 1.
  CHECK(completion_lift_holds(g, s, far, VertexSet::of(16, {2}), 2, 6));
  CHECK_FALSE(completion_lift_holds(g, s, far, VertexSet::of(16, {2}), 2, 7));
  // The clique premise replaces the degree premise.
  CHECK(completion_lift_holds(g, s, far, VertexSet::of(16, {2}), 2, 6, s));
  CHECK_FALSE(completion_lift_holds(g, s, far, VertexSet::of(16, {2}), 2, 7, s));
  // The clique must live inside f | s.
  CHECK_FALSE(completion_lift_holds(g, s, far, VertexSet(16), 2, 3, VertexSet::of(16, {2, 3})));
}

TEST_CASE("first nonseparating scans canonically") {
  Graph g = test::two_k8_shared_pair();
  auto first = first_nonseparating(g, ShapeSpec::parse("star:3"), VertexSet(14), 2);
  REQUIRE(first.has_value());
  CHECK(first->map == std::vector<VertexId>{2, 3, 4});
  auto shifted = first_nonseparating(g, ShapeSpec::parse("star:3"), VertexSet::of(14, {2, 3, 4}), 2);
  REQUIRE(shifted.has_value());
  CHECK(shifted->map == std::vector<VertexId>{5, 6, 7});
  // The glue pair survives in every remainder, capping its connectivity.
  CHECK_FALSE(first_nonseparating(g, ShapeSpec::parse("star:3"), VertexSet(14), 3).has_value());
}

TEST_CASE("path finder works from highly connected hosts") {
  Embedding e = find_path_graph(test::complete_graph(8), 3);
  CHECK(e.shape == ShapeSpec::parse("path:3"));
  CHECK(e.map == std::vector<VertexId>{0, 1, 2});
  check_tree_removal(test::complete_graph(8), e);
  CHECK_THROWS_AS(find_path_graph(test::two_k8_shared_pair(), 3), precondition_error);
  CHECK_THROWS_AS(find_path_graph(named_graph("wheel:6"), 3), precondition_error);
}

TEST_CASE("star and double star finders take the first canonical tree") {
  Graph k9 = test::complete_graph(9);
  Embedding star = find_star_graph(k9, 4);
  CHECK(star.shape == ShapeSpec::parse("star:4"));
  CHECK(star.map == std::vector<VertexId>{0, 1, 2, 3});
  Embedding dstar = find_double_star_graph(k9, 5, 2);
  CHECK(dstar.shape == ShapeSpec::parse("dstar:5:2"));
  CHECK(dstar.map == std::vector<VertexId>{0, 1, 2, 3, 4});
  check_tree_removal(k9, dstar);
  CHECK_THROWS_AS(find_star_graph(named_graph("wheel:6"), 3), precondition_error);
  CHECK_THROWS_AS(find_star_graph(test::graph_of(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                                     {5, 6}, {6, 7}, {7, 0}}),
                                  3),
                  precondition_error);
  CHECK_THROWS_AS(find_double_star_graph(k9, 5, 1), parse_error);  // a < b
}

TEST_CASE("path star finder grows the path in a highly connected remainder") {
  Graph k8 = test::complete_graph(8);
  Embedding e = find_path_star(k8, 2, 5);
  CHECK(e.shape == ShapeSpec::parse("ps:2:5"));
  CHECK(e.map == std::vector<VertexId>{0, 1, 2, 3, 4});
  check_tree_removal(k8, e);
}

TEST_CASE("path star finder follows a leaf contact into the fragment") {
  Graph g = test::two_k8_shared_pair();
  Embedding e = find_path_star(g, 2, 5);
  CHECK(e.shape == ShapeSpec::parse("ps:2:5"));
  CHECK(e.map == std::vector<VertexId>{2, 3, 4, 5, 6});
  check_tree_removal(g, e);
}

TEST_CASE("path star finder reroots on a center contact") {
  // The seed star's leaves are blind to the pendant blob; only the center
  // sees it, so the last leaf is dropped and the path starts at the center.
  Graph g = test::center_contact_host();
  Embedding e = find_path_star(g, 2, 5);
  CHECK(e.shape == ShapeSpec::parse("ps:2:5"));
  CHECK(e.map == std::vector<VertexId>{2, 14, 3, 15, 16});
  check_tree_removal(g, e);
}

TEST_CASE("path star finder recurses into an untouched end") {
  // The seed sits in the core with no neighbor in either pendant, so the
  // whole search re-runs inside the completed near pendant.
  Graph g = test::clique_chain_host();
  Embedding e = find_path_star(g, 2, 5);
  CHECK(e.shape == ShapeSpec::parse("ps:2:5"));
  CHECK(e.map == std::vector<VertexId>{9, 10, 11, 12, 13});
  check_tree_removal(g, e);
}

TEST_CASE("path double star finder covers both variants") {
  Graph k10 = test::complete_graph(10);
  Embedding v1 = find_path_double_star(k10, 1, 6, 2, ShapeKind::PathDoubleStar1);
  CHECK(v1.shape == ShapeSpec::parse("pds1:1:6:2"));
  CHECK(v1.map == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
  check_tree_removal(k10, v1);

  Graph k12 = test::complete_graph(12);
  Embedding v2 = find_path_double_star(k12, 1, 7, 3, ShapeKind::PathDoubleStar2);
  CHECK(v2.shape == ShapeSpec::parse("pds2:1:7:3"));
  CHECK(v2.map == std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6});
  check_tree_removal(k12, v2);
}

TEST_CASE("path double star finder honors the preferred variant on contact") {
  Graph g = test::two_k9_shared_pair();
  Embedding second = find_path_double_star(g, 1, 6, 2, ShapeKind::PathDoubleStar2);
  CHECK(second.shape == ShapeSpec::parse("pds2:1:6:2"));
  CHECK(second.map == std::vector<VertexId>{2, 3, 4, 5, 6, 7});
  check_tree_removal(g, second);

  Embedding first = find_path_double_star(g, 1, 6, 2, ShapeKind::PathDoubleStar1);
  CHECK(first.shape == ShapeSpec::parse("pds1:1:6:2"));
  CHECK(first.map == std::vector<VertexId>{2, 3, 4, 5, 6, 7});
  check_tree_removal(g, first);

  Graph glued8 = test::two_k8_shared_pair();
  Embedding small = find_path_double_star(glued8, 1, 5, 1, ShapeKind::PathDoubleStar1);
  CHECK(small.shape == ShapeSpec::parse("pds1:1:5:1"));
  CHECK(small.map == std::vector<VertexId>{2, 3, 4, 5, 6});
  check_tree_removal(glued8, small);
}

TEST_CASE("an even split falls back to the first variant") {
  // a = b leaves no second variant, whatever was asked for.
  Graph g = test::two_k10_shared_pair();
  Embedding e = find_path_double_star(g, 1, 7, 2, ShapeKind::PathDoubleStar2);
  CHECK(e.shape.kind == ShapeKind::PathDoubleStar1);
  CHECK(e.shape.a == 2);
  CHECK(e.shape.b == 2);
  check_tree_removal(g, e);
}

TEST_CASE("path tree finders validate their inputs") {
  Graph k8 = test::complete_graph(8);
  CHECK_THROWS_AS(find_path_star(k8, 3, 5), parse_error);  // r > m-3
  CHECK_THROWS_AS(find_path_star(k8, 0, 5), parse_error);
  CHECK_THROWS_AS(find_path_star(named_graph("petersen"), 1, 4), precondition_error);  // degree
  CHECK_THROWS_AS(find_path_double_star(k8, 2, 6, 1, ShapeKind::PathDoubleStar1),
                  precondition_error);  // needs degree >= 8
  CHECK_THROWS_AS(find_path_double_star(k8, 1, 5, 2, ShapeKind::PathDoubleStar1),
                  parse_error);  // a + b would exceed the leaves
  CHECK_THROWS_AS(find_path_double_star(k8, 1, 5, 1, ShapeKind::Star), parse_error);
}

TEST_CASE("random hosts above the threshold always yield the tree") {
  std::mt19937_64 rng(4321);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 4 + static_cast<int>(uniform_below(rng, 3));
    const int r = 1 + static_cast<int>(uniform_below(rng, m - 3));
    const int n = m + 3 + static_cast<int>(uniform_below(rng, 10));
    Graph g = gen_random_graph(n, m + 2, 2, rng());
    Embedding e = find_path_star(g, r, m);
    CHECK(e.shape == ShapeSpec{ShapeKind::PathStar, m, r, 0, 0, 0});
    check_tree_removal(g, e);
  }
  for (int trial = 0; trial < 15; ++trial) {
    const int m = 5 + static_cast<int>(uniform_below(rng, 2));
    const int r = 1 + static_cast<int>(uniform_below(rng, m - 4));
    const int leaves = m - r - 2;
    const int a = (leaves + 1) / 2;
    const int n = m + 3 + static_cast<int>(uniform_below(rng, 8));
    Graph g = gen_random_graph(n, m + 2, 2, rng());
    Embedding e = find_path_double_star(g, r, m, a, ShapeKind::PathDoubleStar1);
    CHECK(e.shape.m == m);
    CHECK(e.shape.r == r);
    CHECK(e.shape.a == a);
    check_tree_removal(g, e);
  }
}
