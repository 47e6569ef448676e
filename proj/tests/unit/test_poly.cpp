#include <doctest.h>

#include <cmath>

#include "specsup/errors.hpp"
#include "specsup/poly.hpp"

using namespace specsup;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

}  // namespace

TEST_CASE("arithmetic and division") {
  Polynomial a = P({-1, 0, 1});  // x^2 - 1
  Polynomial b = P({1, 1});      // x + 1
  auto [q, r] = a.divmod(b);
  CHECK(q == P({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, P({-1, 1}) * P({2, 1})) == P({-1, 1}));
  CHECK((a * b).degree() == 3);
  CHECK(a.derivative() == P({0, 2}));
  CHECK(a.compose(b) == P({0, 2, 1}));
  CHECK(a(Rational(3)) == 8);
  CHECK(P({}).degree() == -1);
}

TEST_CASE("surd parsing and exact signs") {
  Surd s = parse_surd("2-3*sqrt(5/4)");
  CHECK(s.a == 2);
  CHECK(s.b == -3);
  CHECK(s.c == Rational(5, 4));
  Polynomial x2m2 = P({-2, 0, 1});
  CHECK(sign_at(x2m2, Surd{0, 1, 2}) == 0);
  CHECK(sign_at(x2m2, Surd{0, 1, 3}) > 0);
  CHECK(sign_at(x2m2, Surd{Rational(1, 1000000), 1, 2}) > 0);
  CHECK(sign_at(x2m2, Surd{Rational(-1, 1000000), 1, 2}) < 0);
  CHECK(sign_at_infinity(P({5, -3, 0, 1})) > 0);
  CHECK(sign_at_infinity(P({5, -3, 0, -1})) < 0);
  CHECK_THROWS_AS(parse_surd("sqrt("), ParseError);
}

TEST_CASE("Sturm counting and root isolation") {
  Polynomial p = P({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  SturmSequence s(p);
  CHECK(s.count(0, 10) == 3);
  CHECK(s.count(1, 2) == 1);
  CHECK(s.count(Rational(3, 2), Rational(5, 2)) == 1);
  CHECK(std::abs(largest_real_root(P({-2, 0, 1})) - std::sqrt(2.0)) < 1e-12);
  CHECK(largest_real_root(P({0, 0, 0, 1})) == doctest::Approx(0.0));
  CHECK(std::abs(largest_real_root(p * p) - 3) < 1e-12);
  RootInterval r = largest_root_interval(P({-2, 0, 1}));
  CHECK(r.lo * r.lo < 2);
  CHECK(r.hi * r.hi >= 2);
  CHECK_THROWS_AS(largest_real_root(P({1, 0, 1})), DomainError);
}

TEST_CASE("exact comparison of largest roots") {
  CHECK(compare_largest_roots(P({-2, 0, 1}), P({-2, 0, 1}) * P({1, 1})) == 0);
  CHECK(compare_largest_roots(P({-2, 0, 1}), P({-3, 0, 1})) < 0);
  // Roots 1e-30 apart.
  std::vector<Rational> near = {Rational(-2) - Rational(1, 1) / Rational("1000000000000000000000000000000"), 0, 1};
  CHECK(compare_largest_roots(Polynomial(near), P({-2, 0, 1})) > 0);
}

TEST_CASE("multivariate parsing") {
  MultiPoly m = MultiPoly::parse("x^3 - x^2 - (n^2 x)/4 + n^2/4 - 2 n");
  Polynomial f10 = m.in_x(10);
  CHECK(f10 == P({5, -25, -1, 1}));
  MultiPoly st = MultiPoly::parse("s t x - 2(s+t)");
  CHECK(st.in_x(0, 3, 4) == P({-14, 12}));
  CHECK(MultiPoly::parse("(x+1)^2") == MultiPoly::parse("x^2 + 2x + 1"));
  CHECK_THROWS_AS(MultiPoly::parse("x/(n+1)"), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("x +"), ParseError);
}
