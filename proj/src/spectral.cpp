#include "specsup/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "specsup/constructors.hpp"
#include "specsup/errors.hpp"

namespace specsup {

namespace {

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> seen(g.n(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex r = 0; r < g.n(); ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    std::vector<Vertex> comp{r};
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (Vertex w : g.neighbors(comp[h])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

struct ComponentRun {
  double lambda = 0;
  std::vector<double> x;
  double residual = 0;
  int iterations = 0;
  bool converged = false;
};

double normalize(std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += v * v;
  s = std::sqrt(s);
  if (s > 0) {
    for (double& v : x) v /= s;
  }
  return s;
}

ComponentRun power_iterate(const std::vector<std::vector<int>>& adj, std::vector<double> x, double tol,
                           int cap) {
  const int n = static_cast<int>(adj.size());
  ComponentRun out;
  if (n == 1) {
    out.x = {1.0};
    out.converged = true;
    return out;
  }
  int maxdeg = 0;
  for (const auto& a : adj) maxdeg = std::max(maxdeg, static_cast<int>(a.size()));
  // The shift pushes the most negative eigenvalue away from -λ on near-bipartite graphs.
  const double shift = std::max(1.0, maxdeg / 2.0);
  for (double& v : x) v = std::max(v, 0.0) + 1e-300;
  normalize(x);
  std::vector<double> y(n);
  double best_residual = INFINITY;
  int since_improvement = 0;
  int perturbations = 0;
  for (int it = 1; it <= cap; ++it) {
    double rho = 0;
    for (int i = 0; i < n; ++i) {
      double acc = 0;
      for (int j : adj[i]) acc += x[j];
      y[i] = acc;
      rho += acc * x[i];
    }
    double res = 0;
    for (int i = 0; i < n; ++i) res = std::max(res, std::abs(y[i] - rho * x[i]));
    out.lambda = rho;
    out.residual = res;
    out.iterations = it;
    if (res <= tol) {
      out.x = x;
      out.converged = true;
      return out;
    }
    if (res < best_residual * 0.999) {
      best_residual = res;
      since_improvement = 0;
    } else if (++since_improvement > 2000 && perturbations < 8) {
      // Deterministic index-based nudge to leave a stalled subspace.
      for (int i = 0; i < n; ++i) y[i] += 1e-3 * rho * (i + 1) / n;
      since_improvement = 0;
      ++perturbations;
    }
    for (int i = 0; i < n; ++i) x[i] = y[i] + shift * x[i];
    normalize(x);
  }
  out.x = x;
  return out;
}

}  // namespace

SpectralResult spectral_radius_from(const Graph& g, const std::vector<double>& start, double tol,
                                    int max_iterations) {
  if (!(tol > 0)) throw DomainError("spectral tolerance must be positive");
  const int n = g.n();
  if (!start.empty() && static_cast<int>(start.size()) != n) {
    throw DomainError("start vector length must equal vertex count");
  }
  SpectralResult out;
  out.perron.assign(n, 0.0);
  if (n == 0) return out;
  if (g.m() == 0) {
    out.perron[0] = 1.0;
    return out;
  }
  double best = -1;
  for (const auto& comp : components(g)) {
    if (comp.size() < 2) continue;
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(comp.size());
    std::vector<double> x0(comp.size(), 1.0);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) adj[i].push_back(local[w]);
      // Floor keeps the start strictly positive on this component.
      if (!start.empty()) x0[i] = std::max(start[comp[i]], 0.0) + 1e-3;
    }
    // A component with fewer edges cannot beat the current best: λ <= sqrt(2 e).
    std::int64_t e2 = 0;
    for (const auto& a : adj) e2 += static_cast<std::int64_t>(a.size());
    if (best >= 0 && std::sqrt(static_cast<double>(e2)) + 1e-9 < best) continue;
    ComponentRun run = power_iterate(adj, std::move(x0), tol, max_iterations);
    out.iterations += run.iterations;
    if (!run.converged) {
      throw ConvergenceError("power iteration did not reach residual " + std::to_string(tol) + " (residual " +
                                 std::to_string(run.residual) + ")",
                             std::max(best, run.lambda));
    }
    if (run.lambda > best) {
      best = run.lambda;
      std::fill(out.perron.begin(), out.perron.end(), 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) out.perron[comp[i]] = std::abs(run.x[i]);
      out.residual = run.residual;
    }
  }
  out.lambda = best;
  return out;
}

SpectralResult spectral_radius(const Graph& g, double tol, int max_iterations) {
  return spectral_radius_from(g, {}, tol, max_iterations);
}

QuotientMatrix equitable_quotient(const Graph& g, const std::vector<int>& classes) {
  const int n = g.n();
  if (static_cast<int>(classes.size()) != n) throw ValidationError("class vector length must equal vertex count");
  int k = 0;
  for (int c : classes) {
    if (c < 0) throw ValidationError("class indices must be non-negative");
    k = std::max(k, c + 1);
  }
  QuotientMatrix q;
  q.k = k;
  q.class_sizes.assign(k, 0);
  q.B.assign(k, std::vector<std::int64_t>(k, -1));
  for (int c : classes) ++q.class_sizes[c];
  for (int c = 0; c < k; ++c) {
    if (q.class_sizes[c] == 0) throw ValidationError("class " + std::to_string(c) + " is empty");
  }
  std::vector<std::int64_t> counts(k);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Vertex w : g.neighbors(v)) ++counts[classes[w]];
    auto& row = q.B[classes[v]];
    for (int j = 0; j < k; ++j) {
      if (row[j] < 0) {
        row[j] = counts[j];
      } else if (row[j] != counts[j]) {
        throw ValidationError("partition is not equitable: vertex " + std::to_string(v) + " in class " +
                              std::to_string(classes[v]) + " has " + std::to_string(counts[j]) +
                              " neighbours in class " + std::to_string(j) + ", expected " +
                              std::to_string(row[j]));
      }
    }
  }
  return q;
}

std::vector<int> coarsest_equitable_partition(const Graph& g) {
  const int n = g.n();
  std::vector<int> cls(n, 0);
  int k = n > 0 ? 1 : 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> sig;
    std::vector<std::pair<int, std::vector<int>>> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> counts(k, 0);
      for (Vertex w : g.neighbors(v)) ++counts[cls[w]];
      keys[v] = {cls[v], std::move(counts)};
      sig.emplace(keys[v], 0);
    }
    int idx = 0;
    for (auto& [key, id] : sig) id = idx++;
    std::vector<int> next(n);
    for (Vertex v = 0; v < n; ++v) next[v] = sig.at(keys[v]);
    if (idx == k) return next;
    cls = std::move(next);
    k = idx;
  }
}

Polynomial char_poly(const std::vector<std::vector<Rational>>& A) {
  const int n = static_cast<int>(A.size());
  for (const auto& row : A) {
    if (static_cast<int>(row.size()) != n) throw DomainError("char_poly needs a square matrix");
  }
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, 0));
  std::vector<std::vector<Rational>> AM(n, std::vector<Rational>(n, 0));
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I, then c_{n-k} = -tr(A M_k) / k.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rational acc = 0;
        for (int l = 0; l < n; ++l) acc += A[i][l] * M[l][j];
        AM[i][j] = acc;
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) M[i][j] = AM[i][j] + (i == j ? c[n - k + 1] : Rational(0));
    }
    Rational tr = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    }
    c[n - k] = -tr / k;
  }
  return Polynomial(std::move(c));
}

Polynomial char_poly(const QuotientMatrix& q) {
  std::vector<std::vector<Rational>> A(q.k, std::vector<Rational>(q.k));
  for (int i = 0; i < q.k; ++i) {
    for (int j = 0; j < q.k; ++j) A[i][j] = Rational(static_cast<long>(q.B[i][j]));
  }
  return char_poly(A);
}

double quotient_lambda(const Graph& g) {
  if (g.m() == 0) return 0;
  return largest_real_root(char_poly(equitable_quotient(g, coarsest_equitable_partition(g))));
}

const std::vector<PaperPolynomial>& paper_polynomials() {
  using P = PaperPolynomial::Params;
  static const std::vector<PaperPolynomial> registry = {
      {"f", "x^3 - x^2 - (n^2 x)/4 + n^2/4 - 2 n", P::N, 0, std::nullopt, "K^{+2}_{n/2,n/2}"},
      {"g", "x^3 - x^2 + x/4 - (n^2 x)/4 + n^2/4 - 2 n + 7/4", P::N, 1, std::nullopt,
       "K^{+2}_{(n+1)/2,(n-1)/2}"},
      {"l1",
       "17 x + 4 n x - (n^2 x)/2 - 9 x^2 - n x^2 + (n^2 x^2)/2 - 10 x^3 - 2 n x^3 + (n^2 x^3)/4 + 4 x^4 - "
       "(n^2 x^4)/4 - x^5 + x^6",
       P::N, 0, "1/64 (544 n - 16 n^2 - 112 n^3 + 8 n^4)", "L_1"},
      {"l2",
       "-3 x + 7 n x - (3 n^2 x)/4 - x^2 - 3 n x^2 + (3 n^2 x^2)/4 - 2 x^3 - 2 n x^3 + (n^2 x^3)/4 + 2 x^4 - "
       "(n^2 x^4)/4 - x^5 + x^6",
       P::N, 0, "1/64 (-96 n + 208 n^2 - 88 n^3 + 4 n^4)", "L_2"},
      {"l3",
       "-27 x + 11 n x - n^2 x + 3 x^2 - 6 n x^2 + n^2 x^2 + 4 x^3 - 2 n x^3 + (n^2 x^3)/4 + 2 x^4 - "
       "(n^2 x^4)/4 - x^5 + x^6",
       P::N, 0, "1/64 (-864 n + 400 n^2 - 96 n^3 + 8 n^4)", "L_3"},
      {"l4",
       "24 - 7 n + n^2/2 - 28 x + 7 n x - (n^2 x)/2 - 5 x^2 + 7 n x^2 - n^2 x^2 - 3 x^3 - 4 n x^3 + n^2 x^3 + "
       "4 x^4 - 2 n x^4 + (n^2 x^4)/4 + 2 x^5 - (n^2 x^5)/4 - x^6 + x^7",
       P::N, 0, "1/128 (3072 - 2688 n + 352 n^2 + 144 n^3 - 64 n^4 + 8 n^5)", "L_4"},
      {"l5",
       "-15 x^2 + 10 n x^2 - (5 n^2 x^2)/4 - 10 x^3 + 3 n x^3 + 6 x^4 - 7 n x^4 + (5 n^2 x^4)/4 + 6 x^5 - "
       "2 n x^5 + x^6 - (n^2 x^6)/4 + x^8",
       P::N, 0, "1/256 (-960 n^2 + 320 n^3 + 112 n^4 - 64 n^5 + 8 n^6)", "L_5"},
      {"l6",
       "-10 x^2 + 7 n x^2 - (3 n^2 x^2)/4 - 11 x^3 + 4 n x^3 + 2 x^4 - 5 n x^4 + n^2 x^4 + 5 x^5 - 2 n x^5 + "
       "x^6 - (n^2 x^6)/4 + x^8",
       P::N, 0, "1/256 (-640 n^2 + 96 n^3 + 112 n^4 - 40 n^5 + 4 n^6)", "L_6"},
      {"l7",
       "8 - 3 n + n^2/4 - 8 x + n x - 18 x^2 + 12 n x^2 - (3 n^2 x^2)/2 - 2 x^3 + 2 n x^3 + x^4 - 6 n x^4 + "
       "(5 n^2 x^4)/4 + 6 x^5 - 2 n x^5 + x^6 - (n^2 x^6)/4 + x^8",
       P::N, 0, "1/256 (2048 - 1792 n - 960 n^2 + 704 n^3 - 16 n^4 - 48 n^5 + 8 n^6)", "L_7"},
      {"l8",
       "-17 x + 6 n x - (n^2 x)/2 - 5 x^2 + 5 n x^2 - (n^2 x^2)/2 - x^3 - 3 n x^3 + (3 n^2 x^3)/4 + 2 x^4 - "
       "2 n x^4 + (n^2 x^4)/4 + 3 x^5 - (n^2 x^5)/4 - x^6 + x^7",
       P::N, 0, "1/128 (-1088 n + 224 n^2 + 112 n^3 - 48 n^4 + 8 n^5)", "L_8"},
      {"l9", "7 x - 5 n x + (3 n^2 x)/4 + 8 x^2 - 2 n x^2 + 2 x^3 - (n^2 x^3)/4 + x^5", P::N, 0,
       "1/32 (112 n - 16 n^2 + 4 n^3)", "L_9"},
      {"l10",
       "-15 x + 7 n x - (3 n^2 x)/4 - 5 x^2 - 3 n x^2 + (3 n^2 x^2)/4 + 6 x^3 - 2 n x^3 + (n^2 x^3)/4 + "
       "2 x^4 - (n^2 x^4)/4 - x^5 + x^6",
       P::N, 0, "1/64 (-480 n + 144 n^2 - 24 n^3 + 4 n^4)", "L_10"},
      {"l11", "-9 + 3 n - n^2/4 - x^2 - 2 n x^2 + (n^2 x^2)/2 + 5 x^3 - (n^2 x^3)/4 - 2 x^4 + x^5", P::N, 0,
       "1/32 (-288 + 96 n - 16 n^2 + 4 n^3)", "L_11"},
      {"l12", "6 x - 4 n x + (n^2 x)/2 + 8 x^2 - 2 n x^2 + 3 x^3 - (n^2 x^3)/4 + x^5", P::N, 0,
       "1/32 (96 n + 4 n^3)", "L_12"},
      {"l13", "4 - 2 n + n^2/4 + 4 x - (n^2 x)/4 - x^2 + x^3", P::N, 0, "4", "K^{+2}_{n/2+2,n/2-2}"},
      {"h", "x^3 - x^2 - s t x + s t - 2 t", P::ST, std::nullopt, std::nullopt, "K^+_{s,t}, edge in the s-side"},
      {"fst", "x^4 - 2 x^3 + 7 x^2 - s t x^2 + 2 s t x - 2 s x - 4 t x - 4 t - 2 s + s t + 8", P::ST,
       std::nullopt, std::nullopt, "G_1"},
      {"b",
       "x^5 - x^4 + x^3 - s t x^3 + 5 x^2 - 2 s x^2 - 2 t x^2 + s t x^2 - 2 s x - 4 t x + 3 s t x - 4 + 2 s + "
       "2 t - s t",
       P::ST, std::nullopt, std::nullopt, "H_1"},
      {"d", "x^4 - 2 x^3 + 4 x^2 - s t x^2 - 2 s x - 2 t x + 2 s t x", P::ST, std::nullopt, std::nullopt, "H_2"},
      {"f1", "-5 - 2 n + n^2/4 + x - (n^2 x)/4 - x^2 + x^3", P::N, 0, std::nullopt, "K^{+2}_{n/2-1,n/2+1}"},
      {"f2", "3 - 2 n + n^2/4 + x - (n^2 x)/4 - x^2 + x^3", P::N, 0, std::nullopt, "K^{+2}_{n/2+1,n/2-1}"},
      {"f3", "4 - 2 n + n^2/4 + 4 x - (n^2 x)/4 - x^2 + x^3", P::N, 0, "4", "K^{+2}_{n/2+2,n/2-2}"},
      {"f4",
       "x/2 + 4 n x - (n^2 x)/2 - (3 x^2)/2 - n x^2 + (n^2 x^2)/2 - x^3/4 - 2 n x^3 + (n^2 x^3)/4 + x^4/4 - "
       "(n^2 x^4)/4 - x^5 + x^6",
       P::N, 1, std::nullopt, "K^{+2}_{(n-1)/2,(n+1)/2} minus a cross edge at an inside edge"},
      {"f5", "-(33/4) - 2 n + n^2/4 + (9 x)/4 - (n^2 x)/4 - x^2 + x^3", P::N, 1, std::nullopt,
       "K^{+2}_{(n-3)/2,(n+3)/2}"},
      {"f6", "15/4 - 2 n + n^2/4 + (9 x)/4 - (n^2 x)/4 - x^2 + x^3", P::N, 1, std::nullopt,
       "K^{+2}_{(n+3)/2,(n-3)/2}"},
  };
  return registry;
}

const PaperPolynomial& paper_polynomial_entry(const std::string& name) {
  for (const auto& p : paper_polynomials()) {
    if (p.name == name) return p;
  }
  throw UnknownNameError("unknown polynomial '" + name + "'");
}

Polynomial paper_polynomial(const std::string& name, std::int64_t n, std::int64_t s, std::int64_t t) {
  const PaperPolynomial& entry = paper_polynomial_entry(name);
  if (entry.params == PaperPolynomial::Params::N) {
    if (n < 1) throw DomainError("polynomial '" + name + "' needs n >= 1");
    if (entry.parity && ((n % 2) != *entry.parity)) {
      throw DomainError("polynomial '" + name + "' is stated for " + (*entry.parity ? "odd" : "even") + " n");
    }
  } else if (s < 1 || t < 1) {
    throw DomainError("polynomial '" + name + "' needs s, t >= 1");
  }
  static std::map<std::string, MultiPoly> parsed;
  static std::mutex lock;
  MultiPoly mp;
  {
    std::lock_guard guard(lock);
    auto it = parsed.find(name);
    if (it == parsed.end()) it = parsed.emplace(name, MultiPoly::parse(entry.expression)).first;
    mp = it->second;
  }
  return mp.in_x(Rational(static_cast<long>(n)), Rational(static_cast<long>(s)), Rational(static_cast<long>(t)));
}

std::vector<Graph> described_graphs(const std::string& name, std::int64_t n, std::int64_t s, std::int64_t t) {
  const PaperPolynomial& e = paper_polynomial_entry(name);
  if (e.params == PaperPolynomial::Params::ST) {
    if (s < 1 || t < 1) throw DomainError("polynomial '" + name + "' needs s, t >= 1");
    const int si = static_cast<int>(s);
    const int ti = static_cast<int>(t);
    if (name == "h") return {build_embedded(kst_plus(si, ti))};
    if (name == "fst") return {build_embedded(g1_spec(si, ti))};
    if (name == "b") return {build_embedded(h1_spec(si, ti))};
    if (name == "d") return {build_embedded(h2_spec(si, ti))};
    return {};
  }
  if (e.parity && ((n % 2) + 2) % 2 != *e.parity) {
    throw DomainError("polynomial '" + name + "' needs " + (*e.parity == 0 ? "even" : "odd") + " n");
  }
  const int ni = static_cast<int>(n);
  const int h = ni / 2;
  if (name == "f" || name == "g") return {k_plus2(ni)};
  if (name == "f1") return {build_embedded(kst_plus2(h - 1, h + 1))};
  if (name == "f2") return {build_embedded(kst_plus2(h + 1, h - 1))};
  if (name == "f3" || name == "l13") return {build_embedded(kst_plus2(h + 2, h - 2))};
  if (name == "f4") {
    auto spec = kst_plus2((ni - 1) / 2, (ni + 1) / 2);
    spec.missing_cross.push_back({0, 0});
    return {build_embedded(spec)};
  }
  if (name == "f5") return {build_embedded(kst_plus2((ni - 3) / 2, (ni + 3) / 2))};
  if (name == "f6") return {build_embedded(kst_plus2((ni + 3) / 2, (ni - 3) / 2))};
  if (name.size() >= 2 && name[0] == 'l') {
    const int i = std::stoi(name.substr(1));
    const int which = i == 1 ? 1 : i == 2 ? 2 : i <= 8 ? 3 : 4;
    return deletion_case_classes(ni, which);
  }
  return {};
}

Polynomial value_at_half(const PaperPolynomial& p) {
  if (p.params != PaperPolynomial::Params::N) throw DomainError("value at n/2 needs an n-parametrised polynomial");
  const Polynomial y = Polynomial::monomial(1, 1);
  return MultiPoly::parse(p.expression).substitute({Rational(1, 2) * y, y, Polynomial{}, Polynomial{}});
}

int match_polynomial_to_class(const std::function<std::vector<Graph>(int)>& family,
                              const std::function<Polynomial(int)>& poly, const std::vector<int>& samples,
                              double tol) {
  if (samples.empty()) throw IdentificationError("no sample sizes given");
  std::vector<int> alive;
  for (std::size_t si = 0; si < samples.size(); ++si) {
    const int n = samples[si];
    const std::vector<Graph> members = family(n);
    if (si == 0) {
      alive.resize(members.size());
      std::iota(alive.begin(), alive.end(), 0);
    }
    const double root = largest_real_root(poly(n));
    std::vector<int> keep;
    for (int idx : alive) {
      if (idx >= static_cast<int>(members.size())) {
        throw IdentificationError("family size changes between samples");
      }
      if (std::abs(spectral_radius(members[idx], 1e-12).lambda - root) <= tol) keep.push_back(idx);
    }
    alive = std::move(keep);
  }
  if (alive.empty()) throw IdentificationError("no class matches the polynomial");
  if (alive.size() > 1) {
    throw IdentificationError("polynomial matches " + std::to_string(alive.size()) + " classes");
  }
  return alive.front();
}

}  // namespace specsup
