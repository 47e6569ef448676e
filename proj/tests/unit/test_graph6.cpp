#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "specsup/enumerate.hpp"
#include "specsup/errors.hpp"
#include "specsup/graph6.hpp"

using namespace specsup;

namespace {

// Bit-level reference decoder for n <= 62.
Graph reference_decode(const std::string& s) {
  const int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    for (int k = 5; k >= 0; --k) bits.push_back(((s[i] - 63) >> k) & 1);
  }
  std::vector<Edge> edges;
  std::size_t idx = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits[idx++]) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("graph6 basics") {
  CHECK(graph6_encode(Graph::from_edges(1, {})) == "@");
  CHECK(graph6_encode(Graph::from_edges(0, {})) == "?");
  Graph d = graph6_decode("D?{");
  CHECK(d.n() == 5);
  CHECK(graph6_encode(d) == "D?{");
  CHECK(d == reference_decode("D?{"));
  CHECK(graph6_decode(">>graph6<<D?{\n") == d);
}

TEST_CASE("graph6 round trips against the reference decoder") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& g : generate_all(n)) {
      const std::string s = graph6_encode(g);
      CHECK(graph6_decode(s) == g);
      if (n >= 1) CHECK(reference_decode(s) == g);
    }
  }
  std::mt19937_64 rng(3);
  for (int n : {62, 63, 100, 200}) {
    Graph g = oracle::random_graph(n, 0.3, rng);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
  CHECK_THROWS_AS(graph6_decode("D?"), ParseError);
  CHECK_THROWS_AS(graph6_decode("D?{{"), ParseError);
  CHECK_THROWS_AS(graph6_decode("D? {"), ParseError);
  try {
    graph6_decode("D?\x20");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("graph6 streams") {
  std::istringstream in("D?{\n\n@\nA_\n");
  auto gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 3);
  CHECK(gs[1].n() == 1);
  CHECK(gs[2].m() == 1);
}
