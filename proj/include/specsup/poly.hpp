#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace specsup {

using Rational = mpq_class;

/// Univariate polynomial with exact rational coefficients, ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  /// c * x^k
  static Polynomial monomial(const Rational& c, int k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coefficient(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial compose(const Polynomial& inner) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& k, const Polynomial& p);
  Polynomial operator-() const;
  bool operator==(const Polynomial& other) const = default;

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  friend Polynomial gcd(Polynomial a, Polynomial b);

  /// Human-readable form in variable `var`, highest degree first.
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// a + b * sqrt(c) with c >= 0.
struct Surd {
  Rational a;
  Rational b;
  Rational c;
};

/// Parses "a+b*sqrt(c)" forms such as "3", "1/2", "sqrt(29)", "2-3*sqrt(5/4)".
Surd parse_surd(std::string_view text);

int sign(const Rational& r);
int sign_at(const Polynomial& p, const Rational& x);
/// Exact sign of p(a + b sqrt c) without floating point.
int sign_at(const Polynomial& p, const Surd& x);
/// Sign of p(x) as x -> +infinity (0 for the zero polynomial).
int sign_at_infinity(const Polynomial& p);

/// Sturm chain of the square-free part of p.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);
  /// Distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  int variations(const Rational& x) const;
  const Polynomial& squarefree() const noexcept { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

/// Every real root of p is strictly below this value.
Rational root_bound(const Polynomial& p);

struct RootInterval {
  Rational lo;  // lo < root <= hi
  Rational hi;
  double midpoint() const { return (lo.get_d() + hi.get_d()) / 2; }
};

/// Exact isolating interval of width <= width for the largest real root.
/// Throws DomainError when p has no real root.
RootInterval largest_root_interval(const Polynomial& p, const Rational& width = Rational(1UL, 1000000000000UL),
                                   std::optional<std::pair<Rational, Rational>> bracket = std::nullopt);
double largest_real_root(const Polynomial& p,
                         std::optional<std::pair<Rational, Rational>> bracket = std::nullopt);

/// Exact sign of (largest root of p) - (largest root of q). Both must have a real root.
int compare_largest_roots(const Polynomial& p, const Polynomial& q);

/// Polynomial in the variables x, n, s, t with rational coefficients.
class MultiPoly {
 public:
  enum Var { X = 0, N = 1, S = 2, T = 3 };
  using Exponents = std::array<int, 4>;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(Var v);
  /// Parses sums of products with +, -, *, /, ^, parentheses and implicit
  /// multiplication by juxtaposition ("s t x"). Division only by constants.
  static MultiPoly parse(std::string_view text);

  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_constant() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(int k) const;
  bool operator==(const MultiPoly& other) const = default;

  /// Replaces every variable by a univariate polynomial in a common variable.
  Polynomial substitute(const std::array<Polynomial, 4>& images) const;
  /// Polynomial in x with n, s, t fixed.
  Polynomial in_x(const Rational& n, const Rational& s = 0, const Rational& t = 0) const;

 private:
  void trim();
  std::map<Exponents, Rational> terms_;
};

}  // namespace specsup
