#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "specsup/canonical.hpp"
#include "specsup/constructors.hpp"

using namespace specsup;

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 12;
    Graph g = oracle::random_graph(n, 0.4, rng);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Graph h = g.relabeled(order);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_graph(g) == canonical_graph(h));
    CHECK(isomorphic(g, h));
    CanonicalLabeling lab = canonical_labeling(g);
    CHECK(g.relabeled(lab.order) == lab.form.to_graph());
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  CHECK(!isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK(isomorphic(k_plus(9), build_embedded(kst_plus(4, 5))));
  CHECK(!isomorphic(k_plus(9), build_embedded(kst_plus(5, 4))));
  // Strongly regular and vertex-transitive graphs stress refinement.
  Graph petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                          {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  std::vector<Vertex> order = {3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
  CHECK(isomorphic(petersen, petersen.relabeled(order)));
  CHECK(!isomorphic(petersen, toggle_edge(toggle_edge(petersen, 0, 1), 0, 2)));
}

TEST_CASE("colours restrict the automorphisms") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  std::vector<int> a = {1, 0, 0};
  std::vector<int> b = {0, 0, 1};
  std::vector<int> c = {0, 1, 0};
  CHECK(canonical_form(p3, a) == canonical_form(p3, b));
  CHECK(!(canonical_form(p3, a) == canonical_form(p3, c)));
}
