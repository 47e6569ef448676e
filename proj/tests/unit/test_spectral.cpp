#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "specsup/constructors.hpp"
#include "specsup/errors.hpp"
#include "specsup/spectral.hpp"

using namespace specsup;

TEST_CASE("spectral radius of standard graphs") {
  for (int n = 2; n <= 12; ++n) CHECK(std::abs(spectral_radius(complete_graph(n)).lambda - (n - 1)) < 1e-9);
  for (int n : {7, 10, 51}) {
    CHECK(std::abs(spectral_radius(turan_bipartite(n)).lambda - std::sqrt(n * n / 4)) < 1e-9);
  }
  CHECK(std::abs(spectral_radius(cycle_graph(5)).lambda - 2.0) < 1e-9);
  CHECK(std::abs(oracle::dense_lambda(cycle_graph(5)) - 2.0) < 1e-9);
  CHECK(spectral_radius(Graph::from_edges(4, {})).lambda == 0);
}

TEST_CASE("spectral radius agrees with the dense eigen-solver") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(2 + i % 30, 0.05 + 0.9 * (i % 10) / 9.0, rng);
    SpectralResult r = spectral_radius(g);
    CHECK(std::abs(r.lambda - oracle::dense_lambda(g)) < 1e-8);
    CHECK(r.residual <= 1e-10);
  }
  // Bipartite and disconnected graphs where plain power iteration oscillates.
  for (Graph g : {complete_bipartite(3, 9), disjoint_union(complete_graph(4), cycle_graph(6)),
                  disjoint_union(Graph::from_edges(3, {}), complete_bipartite(2, 2))}) {
    CHECK(std::abs(spectral_radius(g).lambda - oracle::dense_lambda(g)) < 1e-8);
  }
  CHECK_THROWS_AS(spectral_radius(complete_graph(3), 0.0), DomainError);
}

TEST_CASE("equitable quotients") {
  Graph g = build_embedded(kst_plus2(5, 5));
  QuotientMatrix q = equitable_quotient(g, {0, 0, 0, 0, 1, 2, 2, 2, 2, 2});
  CHECK(q.B == std::vector<std::vector<std::int64_t>>{{1, 0, 5}, {0, 0, 5}, {4, 1, 0}});
  QuotientMatrix t = equitable_quotient(turan_bipartite(9), {0, 0, 0, 0, 0, 1, 1, 1, 1});
  CHECK(t.B == std::vector<std::vector<std::int64_t>>{{0, 4}, {5, 0}});
  QuotientMatrix k3 = equitable_quotient(complete_graph(3), {0, 1, 2});
  CHECK(k3.B == std::vector<std::vector<std::int64_t>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK_THROWS_AS(equitable_quotient(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}), {0, 0, 1, 1}), ValidationError);
}

TEST_CASE("characteristic polynomials of quotients") {
  for (int n : {10, 20, 50}) {
    Graph g = build_embedded(kst_plus2(n / 2, n / 2));
    std::vector<int> classes(n, 2);
    for (int v = 0; v < 4; ++v) classes[v] = 0;
    for (int v = 4; v < n / 2; ++v) classes[v] = 1;
    CHECK(char_poly(equitable_quotient(g, classes)) == paper_polynomial("f", n));
  }
  for (int n : {11, 21}) {
    Graph g = k_plus2(n);
    std::vector<int> classes(n, 2);
    for (int v = 0; v < 4; ++v) classes[v] = 0;
    for (int v = 4; v < (n + 1) / 2; ++v) classes[v] = 1;
    CHECK(char_poly(equitable_quotient(g, classes)) == paper_polynomial("g", n));
  }
  CHECK(char_poly(std::vector<std::vector<Rational>>{{0}}) == Polynomial({0, 1}));
}

TEST_CASE("quotient lambda equals the spectral radius") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    Graph g = oracle::random_graph(3 + i % 9, 0.5, rng);
    CHECK(std::abs(quotient_lambda(g) - oracle::dense_lambda(g)) < 1e-9);
  }
  CHECK(std::abs(quotient_lambda(k_plus2(114)) - spectral_radius(k_plus2(114)).lambda) < 1e-9);
}

TEST_CASE("named polynomials") {
  CHECK(paper_polynomial("h", 0, 5, 5) == Polynomial({15, -25, -1, 1}));
  CHECK(largest_real_root(paper_polynomial("d", 0, 6, 6)) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(value_at_half(paper_polynomial_entry("f3")) == Polynomial::constant(4));
  CHECK(sign_at(paper_polynomial("f", 100), Surd{0, 1, 2504}) < 0);
  CHECK(sign_at(paper_polynomial("l1", 200), Rational(100)) > 0);
  CHECK(std::abs(largest_real_root(paper_polynomial("f", 10)) - spectral_radius(k_plus2(10)).lambda) < 1e-8);
  CHECK_THROWS_AS(paper_polynomial("zz", 10), UnknownNameError);
  CHECK_THROWS_AS(paper_polynomial("f", 11), DomainError);
  for (const auto& e : paper_polynomials()) {
    if (!e.quoted_at_half) continue;
    Polynomial quoted = MultiPoly::parse(*e.quoted_at_half)
                            .substitute({Polynomial{}, Polynomial::monomial(1, 1), Polynomial{}, Polynomial{}});
    CHECK_MESSAGE(value_at_half(e) == quoted, e.name);
  }
}

TEST_CASE("matching polynomials to classes") {
  auto case1 = [](int n) { return deletion_case_classes(n, 1); };
  auto l1 = [](int n) { return paper_polynomial("l1", n); };
  const int idx = match_polynomial_to_class(case1, l1, {120, 200});
  CHECK(idx >= 0);
  auto kp2 = [](int n) { return std::vector<Graph>{k_plus2(n)}; };
  auto f = [](int n) { return paper_polynomial("f", n); };
  CHECK(match_polynomial_to_class(kp2, f, {10, 50}) == 0);
  auto kp = [](int n) { return std::vector<Graph>{k_plus(n)}; };
  CHECK_THROWS_AS(match_polynomial_to_class(kp, f, {10, 50}), IdentificationError);
}

TEST_CASE("described graphs carry their polynomials") {
  for (const auto& e : paper_polynomials()) {
    if (e.name == "l6") continue;
    const bool st = e.params == PaperPolynomial::Params::ST;
    const std::int64_t n = e.parity.value_or(0) == 1 ? 41 : 40;
    Polynomial p = st ? paper_polynomial(e.name, 0, 9, 7) : paper_polynomial(e.name, n);
    int matches = 0;
    for (const auto& g : described_graphs(e.name, n, 9, 7)) {
      matches += std::abs(spectral_radius(g, 1e-12).lambda - largest_real_root(p)) < 1e-9;
    }
    CHECK_MESSAGE(matches == 1, e.name);
  }
}
