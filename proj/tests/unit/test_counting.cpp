#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "specsup/constructors.hpp"
#include "specsup/counting.hpp"
#include "specsup/enumerate.hpp"
#include "specsup/errors.hpp"

using namespace specsup;

TEST_CASE("triangle_stats") {
  TriangleStats k4 = triangle_stats(complete_graph(4));
  CHECK(k4.total == 4);
  for (auto x : k4.per_vertex) CHECK(x == 3);
  for (auto x : k4.per_edge) CHECK(x == 2);
  CHECK(triangle_count(k_plus2(10)) == 10);
  CHECK(oracle::triangles(k_plus2(10)) == 10);
  CHECK(triangle_count(turan_bipartite(11)) == 0);
}

TEST_CASE("booksize") {
  CHECK(booksize(complete_graph(4)) == 2);
  CHECK(booksize(k_plus(12)) == 6);
  CHECK(booksize(cycle_graph(5)) == 0);
}

TEST_CASE("bowties") {
  CHECK(count_bowties(friendship(2)) == 1);
  CHECK(count_bowties(complete_graph(5)) == 15);
  CHECK(oracle::bowties(complete_graph(5)) == 15);
  CHECK(count_bowties(k_plus2(14)) == 7);
  CHECK(oracle::bowties(k_plus2(14)) == 7);
  CHECK(count_bowties_bruteforce(complete_bipartite(3, 3)) == 0);
  CHECK(count_bowties_bruteforce(friendship(3)) == 3);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& g : generate_all(n)) {
      CHECK(count_bowties(g) == count_bowties_bruteforce(g));
      CHECK(count_bowties(g) == oracle::bowties(g));
    }
  }
}

TEST_CASE("friendship containment") {
  for (int k = 1; k <= 5; ++k) {
    CHECK(contains_Fk(friendship(k), k));
    CHECK(!contains_Fk(friendship(k), k + 1));
  }
  CHECK(contains_Fk(complete_graph(5), 2));
  CHECK(!contains_Fk(turan_bipartite(10), 1));
  CHECK_THROWS_AS(contains_Fk(complete_graph(3), 0), DomainError);
}

TEST_CASE("max_matching") {
  CHECK(max_matching(cycle_graph(5)) == 2);
  CHECK(max_matching(complete_graph(4)) == 2);
  CHECK(max_matching(complete_bipartite(3, 7)) == 3);
}

TEST_CASE("triangle cover and triangular edges") {
  CHECK(triangle_cover_number(complete_graph(3)) == 1);
  for (int k = 1; k <= 4; ++k) CHECK(triangle_cover_number(friendship(k)) == 1);
  CHECK(triangle_cover_number(disjoint_union(complete_graph(3), complete_graph(3))) == 2);
  CHECK(triangular_edge_count(complete_graph(4)) == 6);
  CHECK(triangular_edge_count(turan_bipartite(10)) == 0);
  CHECK(triangular_edge_count(build_embedded(kst_plus(5, 5))) == 11);
}

TEST_CASE("counters agree with brute force on random graphs") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    Graph g = oracle::random_graph(2 + i % 11, 0.15 + 0.7 * (i % 7) / 6.0, rng);
    CHECK(max_matching(g) == oracle::matching_number(g));
    CHECK(max_friendship(g) == oracle::friendship_number(g));
    CHECK(triangle_cover_number(g) == oracle::triangle_cover(g));
    CHECK(static_cast<std::int64_t>(list_triangles(g).size()) == oracle::triangles(g));
    TriangleStats s = triangle_stats(g);
    std::int64_t vs = 0;
    std::int64_t es = 0;
    for (auto x : s.per_vertex) vs += x;
    for (auto x : s.per_edge) es += x;
    CHECK(vs == 3 * s.total);
    CHECK(es == 3 * s.total);
  }
}
