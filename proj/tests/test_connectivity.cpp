#include <doctest.h>

#include <algorithm>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/graph.hpp"
#include "test_support.hpp"

using namespace nonsep;
using test::graph_of;
using test::digraph_of;

TEST_CASE("vertex connectivity of the catalog graphs") {
  CHECK(kappa(named_graph("cycle:5")) == 2);
  CHECK(kappa(named_graph("wheel:6")) == 3);
  CHECK(kappa(named_graph("kbip:3:4")) == 3);
  CHECK(kappa(named_graph("petersen")) == 3);
  CHECK(kappa(test::complete_graph(5)) == 4);
  CHECK(kappa(test::complete_graph(1)) == 0);
  CHECK(kappa(graph_of(4, {{0, 1}, {1, 2}, {2, 3}})) == 1);
  CHECK(kappa(graph_of(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(kappa(test::two_k8_shared_pair()) == 2);
}

TEST_CASE("threshold connectivity checks agree with kappa") {
  const Graph hosts[] = {named_graph("cycle:6"), named_graph("wheel:7"), named_graph("petersen"),
                         test::complete_graph(6), graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})};
  for (const Graph& g : hosts) {
    const int k = kappa(g);
    for (int t = 0; t <= g.order(); ++t) CHECK(is_k_connected(g, t) == (t <= k));
  }
  CHECK(is_k_connected(test::complete_graph(3), 0));
  CHECK_FALSE(is_k_connected(Graph{}, 0));  // nothing left standing
}

TEST_CASE("local connectivity counts internally disjoint paths") {
  Graph c4 = named_graph("cycle:4");
  CHECK(local_connectivity(c4, 0, 2) == 2);
  Graph kb = named_graph("kbip:2:3");  // sides {0,1} and {2,3,4}
  CHECK(local_connectivity(kb, 0, 1) == 3);
  CHECK(local_connectivity(kb, 2, 3) == 2);
  CHECK(local_connectivity(kb, 0, 1, 2) == 2);  // capped
}

TEST_CASE("strong components come out in condensation order") {
  // {0,1} -> {2} -> {3,4}, tie-free chain.
  Digraph d = digraph_of(5, {{0, 1}, {1, 0}, {0, 2}, {2, 3}, {3, 4}, {4, 3}});
  ComponentOrder co = strong_components(d);
  REQUIRE(co.components.size() == 3);
  CHECK(co.components[0] == VertexSet::of(5, {0, 1}));
  CHECK(co.components[1] == VertexSet::of(5, {2}));
  CHECK(co.components[2] == VertexSet::of(5, {3, 4}));
  CHECK(co.component_of[1] == 0);
  CHECK(co.component_of[2] == 1);
  CHECK(co.component_of[4] == 2);
  CHECK_FALSE(is_strongly_connected(d));
  CHECK(max_strong_component(d).size() == 2);

  // Incomparable components order by smallest contained vertex.
  Digraph iso = digraph_of(4, {{1, 3}, {3, 1}, {0, 2}, {2, 0}});
  ComponentOrder co2 = strong_components(iso);
  REQUIRE(co2.components.size() == 2);
  CHECK(co2.components[0] == VertexSet::of(4, {0, 2}));
  CHECK(co2.components[1] == VertexSet::of(4, {1, 3}));

  CHECK(is_strongly_connected(digraph_of(3, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK(is_strongly_connected(test::two_k5_digon()));
}

TEST_CASE("minimum separators of the petersen graph are the ten neighborhoods") {
  Graph p = named_graph("petersen");
  std::vector<VertexSet> seps = minimum_separators(p);
  REQUIRE(seps.size() == 10);
  std::vector<VertexSet> hoods;
  for (VertexId v = 0; v < 10; ++v) hoods.push_back(p.neighbor_set(v));
  for (const VertexSet& s : seps) {
    CHECK(s.size() == 3);
    CHECK(std::count(hoods.begin(), hoods.end(), s) == 1);
  }
  CHECK(std::is_sorted(seps.begin(), seps.end(),
                       [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); }));
}

TEST_CASE("minimum separators require a connected non-complete graph") {
  CHECK_THROWS_AS(minimum_separators(test::complete_graph(4)), precondition_error);
  CHECK_THROWS_AS(minimum_separators(graph_of(4, {{0, 1}, {2, 3}})), precondition_error);
}

TEST_CASE("fragments partition the graph away from the separator") {
  Graph c4 = named_graph("cycle:4");
  SeparationContext ctx = fragments(c4, VertexSet::of(4, {0, 2}));
  REQUIRE(ctx.fragments.size() == 2);
  CHECK(ctx.fragments[0].fragment == VertexSet::of(4, {1}));
  CHECK(ctx.fragments[0].complement == VertexSet::of(4, {3}));
  CHECK(ctx.fragments[0].is_end);
  CHECK(ctx.fragments[1].fragment == VertexSet::of(4, {3}));
  CHECK(ctx.fragments[1].is_end);

  Graph g = test::two_k8_shared_pair();
  SeparationContext two = fragments(g, VertexSet::of(14, {0, 1}));
  REQUIRE(two.fragments.size() == 2);
  CHECK(two.fragments[0].fragment.members() == test::range(2, 8));
  CHECK(two.fragments[1].fragment.members() == test::range(8, 14));
  CHECK((two.fragments[0].fragment | two.fragments[0].complement | two.separator) ==
        VertexSet::full(14));
}

TEST_CASE("ends enumerate the minimal fragments in canonical order") {
  std::vector<EndPair> c4ends = ends(named_graph("cycle:4"));
  REQUIRE(c4ends.size() == 4);
  CHECK(c4ends[0].separator == VertexSet::of(4, {0, 2}));
  CHECK(c4ends[0].fragment == VertexSet::of(4, {1}));
  CHECK(c4ends[1].fragment == VertexSet::of(4, {3}));
  CHECK(c4ends[2].separator == VertexSet::of(4, {1, 3}));
  CHECK(c4ends[2].fragment == VertexSet::of(4, {0}));
  CHECK(c4ends[3].fragment == VertexSet::of(4, {2}));

  std::vector<EndPair> glued = ends(test::two_k8_shared_pair());
  REQUIRE(glued.size() == 2);
  CHECK(glued[0].separator == VertexSet::of(14, {0, 1}));
  CHECK(glued[0].fragment.members() == test::range(2, 8));
  CHECK(glued[1].fragment.members() == test::range(8, 14));

  // A middle fragment wrapping a smaller one is not an end.
  std::vector<EndPair> chain = ends(test::clique_chain_host());
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].separator == VertexSet::of(23, {0, 1}));
  CHECK(chain[0].fragment.members() == test::range(9, 16));
  CHECK(chain[1].separator == VertexSet::of(23, {7, 8}));
  CHECK(chain[1].fragment.members() == test::range(16, 23));
}

TEST_CASE("completion adds exactly the missing clique edges") {
  Graph c5 = named_graph("cycle:5");
  Graph comp = completion(c5, VertexSet::of(5, {0, 2, 3}));
  CHECK(comp.adjacent(0, 2));
  CHECK(comp.adjacent(0, 3));
  CHECK(comp.adjacent(2, 3));
  CHECK(comp.size() == c5.size() + 2);  // 2-3 already present
  CHECK_FALSE(comp.adjacent(1, 3));
  Graph same = completion(c5, VertexSet::of(5, {1, 2}));
  CHECK(same.edge_list() == c5.edge_list());
}

TEST_CASE("fragment completions stay connected at the guaranteed levels") {
  Graph g = test::two_k8_shared_pair();
  const VertexSet s = VertexSet::of(14, {0, 1});
  for (const FragmentInfo& f : fragments(g, s).fragments) {
    CHECK(fragment_completion_connected(g, s, f.fragment, 2));
    CHECK(fragment_completion_connected(g, s, f.fragment, 3));  // ends of size >= 2
  }
  // A singleton end is only guaranteed at the base level.
  Graph c4 = named_graph("cycle:4");
  const VertexSet s4 = VertexSet::of(4, {0, 2});
  CHECK(fragment_completion_connected(c4, s4, VertexSet::of(4, {1}), 2));
  CHECK_FALSE(fragment_completion_connected(c4, s4, VertexSet::of(4, {1}), 3));
}

TEST_CASE("clique pair check enforces degree, clique, and connectivity") {
  Graph k9 = test::complete_graph(9);
  const VertexSet c = VertexSet::of(9, {0, 1});
  CHECK(clique_pair_check(k9, c, 2, 5, true));   // outside degree 8 >= 3+5-1
  CHECK(clique_pair_check(k9, c, 2, 6, true));   // 8 >= 8
  CHECK_FALSE(clique_pair_check(k9, c, 2, 7, true));  // 8 < 9
  CHECK_FALSE(clique_pair_check(k9, VertexSet::of(9, {0}), 2, 3, true));      // not a 2-clique
  CHECK_FALSE(clique_pair_check(k9, VertexSet::of(9, {0, 1, 2}), 2, 3, true));
  Graph c4 = named_graph("cycle:4");
  CHECK_FALSE(clique_pair_check(c4, VertexSet::of(4, {0, 1}), 2, 1, true));  // needs 3-connected
  Graph glued = test::two_k9_shared_pair();
  CHECK(clique_pair_check(glued, VertexSet::of(16, {0, 1}), 2, 6, false));   // 2-connected enough
  CHECK_FALSE(clique_pair_check(glued, VertexSet::of(16, {0, 1}), 2, 6, true));
  CHECK_FALSE(clique_pair_check(glued, VertexSet::of(16, {2, 3}), 2, 20, false));  // degree fails
}

TEST_CASE("random hosts satisfy the separator completion rule") {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 12; ++seed) {
    Graph g = gen_random_graph(9, 3, 2, seed);
    if (kappa(g) != 2) continue;
    ++checked;
    for (const VertexSet& s : minimum_separators(g))
      for (const FragmentInfo& f : fragments(g, s).fragments) {
        CHECK(fragment_completion_connected(g, s, f.fragment, 2));
        if (f.is_end && f.fragment.size() >= 2)
          CHECK(fragment_completion_connected(g, s, f.fragment, 3));
      }
  }
}
