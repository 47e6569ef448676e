#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specsup/graph.hpp"
#include "specsup/poly.hpp"

namespace specsup {

struct SpectralResult {
  double lambda = 0;
  std::vector<double> perron;  // unit 2-norm, non-negative
  double residual = 0;         // max-norm of A x - lambda x
  int iterations = 0;
};

inline constexpr double kDefaultSpectralTol = 1e-10;

/// Largest adjacency eigenvalue by shifted power iteration with Rayleigh
/// quotient extraction, run per connected component. Throws
/// ConvergenceError (carrying the best estimate) when the iteration cap is hit.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultSpectralTol, int max_iterations = 200000);

/// Warm-started variant: `start` is used instead of the all-ones vector.
SpectralResult spectral_radius_from(const Graph& g, const std::vector<double>& start,
                                    double tol = kDefaultSpectralTol, int max_iterations = 200000);

struct QuotientMatrix {
  int k = 0;
  std::vector<std::vector<std::int64_t>> B;  // B[i][j] = neighbours in class j of a vertex in class i
  std::vector<int> class_sizes;
};

/// Validates that `classes` (class index per vertex, 0..k-1) is equitable.
QuotientMatrix equitable_quotient(const Graph& g, const std::vector<int>& classes);
/// Coarsest equitable partition (colour refinement from the trivial partition).
std::vector<int> coarsest_equitable_partition(const Graph& g);

/// det(xI - B) with exact rational arithmetic (Faddeev-LeVerrier).
Polynomial char_poly(const std::vector<std::vector<Rational>>& B);
Polynomial char_poly(const QuotientMatrix& q);

/// λ(G) through the quotient of the coarsest equitable partition.
double quotient_lambda(const Graph& g);

/// Named polynomial transcribed verbatim, in x with parameters n or (s, t).
struct PaperPolynomial {
  std::string name;
  std::string expression;
  enum class Params { N, ST } params = Params::N;
  /// Required parity of n (0 even, 1 odd), if any.
  std::optional<int> parity;
  /// Quoted expansion of the value at x = n/2, as a polynomial in n.
  std::optional<std::string> quoted_at_half;
  std::string describes;
};

const std::vector<PaperPolynomial>& paper_polynomials();
const PaperPolynomial& paper_polynomial_entry(const std::string& name);
/// Exact polynomial in x. Throws UnknownNameError / DomainError.
Polynomial paper_polynomial(const std::string& name, std::int64_t n, std::int64_t s = 0, std::int64_t t = 0);

/// Graphs the named polynomial is stated to describe at these parameters.
/// For the deletion-case polynomials this is every class of the case, of
/// which exactly one is expected to carry the polynomial.
std::vector<Graph> described_graphs(const std::string& name, std::int64_t n, std::int64_t s = 0, std::int64_t t = 0);

/// The value at x = n/2 as a polynomial in n, obtained by direct substitution.
Polynomial value_at_half(const PaperPolynomial& p);

/// The unique class index whose λ agrees with the largest root of the
/// polynomial at every sample (within tol). Family members must keep a
/// stable order across samples. Throws IdentificationError otherwise.
int match_polynomial_to_class(const std::function<std::vector<Graph>(int)>& family,
                              const std::function<Polynomial(int)>& poly, const std::vector<int>& samples,
                              double tol = 1e-9);

}  // namespace specsup
