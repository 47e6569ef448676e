#pragma once

// Independent reference implementations used only by tests. They favour
// obviousness over speed and share no code with the library beyond Graph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "specsup/graph.hpp"

namespace oracle {

using specsup::Edge;
using specsup::Graph;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline std::int64_t triangles(const Graph& g) {
  std::int64_t t = 0;
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      for (int c = b + 1; c < g.n(); ++c) t += g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
    }
  }
  return t;
}

/// Bowtie copies: a centre plus two vertex-disjoint edges inside its neighbourhood.
inline std::int64_t bowties(const Graph& g) {
  std::int64_t total = 0;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<Edge> inside;
    for (int a = 0; a < g.n(); ++a) {
      for (int b = a + 1; b < g.n(); ++b) {
        if (a != v && b != v && g.has_edge(v, a) && g.has_edge(v, b) && g.has_edge(a, b)) inside.emplace_back(a, b);
      }
    }
    for (std::size_t i = 0; i < inside.size(); ++i) {
      for (std::size_t j = i + 1; j < inside.size(); ++j) {
        const auto [a, b] = inside[i];
        const auto [c, d] = inside[j];
        total += a != c && a != d && b != c && b != d;
      }
    }
  }
  return total;
}

inline double dense_lambda(const Graph& g) {
  if (g.n() == 0) return 0;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

inline std::int64_t max_cut(const Graph& g) {
  std::int64_t best = 0;
  const auto edges = g.edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    std::int64_t cut = 0;
    for (auto [u, v] : edges) cut += ((mask >> u) ^ (mask >> v)) & 1U;
    best = std::max(best, cut);
  }
  return best;
}

/// Maximum matching restricted to the vertex set `allowed`, by memoised search.
inline int matching_within(const Graph& g, std::uint64_t allowed) {
  std::vector<int> memo(std::size_t{1} << g.n(), -1);
  std::function<int(std::uint64_t)> go = [&](std::uint64_t free) -> int {
    if (free == 0) return 0;
    int& m = memo[free];
    if (m >= 0) return m;
    const int v = __builtin_ctzll(free);
    const std::uint64_t rest = free & ~(std::uint64_t{1} << v);
    int best = go(rest);
    for (int w = 0; w < g.n(); ++w) {
      if (((rest >> w) & 1U) && g.has_edge(v, w)) best = std::max(best, 1 + go(rest & ~(std::uint64_t{1} << w)));
    }
    return m = best;
  };
  return go(allowed);
}

inline int matching_number(const Graph& g) { return matching_within(g, (std::uint64_t{1} << g.n()) - 1); }

/// Largest k with F_k as a subgraph: a matching inside some neighbourhood.
inline int friendship_number(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v) {
    std::uint64_t nbhd = 0;
    for (int w : g.neighbors(v)) nbhd |= std::uint64_t{1} << w;
    best = std::max(best, matching_within(g, nbhd));
  }
  return best;
}

inline int triangle_cover(const Graph& g) {
  std::vector<std::uint64_t> tris;
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      for (int c = b + 1; c < g.n(); ++c) {
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
          tris.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c));
        }
      }
    }
  }
  int best = g.n();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size >= best) continue;
    if (std::all_of(tris.begin(), tris.end(), [mask](std::uint64_t t) { return (t & mask) != 0; })) best = size;
  }
  return best;
}

/// Non-isolated vertices form one complete bipartite graph (or there are none).
inline bool complete_bipartite_plus_isolated(const Graph& g) {
  std::vector<int> active;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 0) active.push_back(v);
  }
  if (active.empty()) return true;
  // In K_{a,b} two active vertices are adjacent exactly when their neighbourhoods differ.
  const int root = active.front();
  for (int u : active) {
    for (int v : active) {
      if (u == v) continue;
      const bool same_side_as_root_u = u == root || !g.has_edge(root, u);
      const bool same_side_as_root_v = v == root || !g.has_edge(root, v);
      if (g.has_edge(u, v) != (same_side_as_root_u != same_side_as_root_v)) return false;
    }
  }
  return true;
}

/// Isomorphism class representatives by exhaustive permutation filtering:
/// a labelled graph is kept iff its degrees are non-increasing and no
/// degree-preserving relabelling yields a larger upper-triangle code.
inline std::vector<Graph> permutation_filter(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const int p = static_cast<int>(pairs.size());
  std::vector<Graph> reps;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n));
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << p); ++code) {
    std::vector<int> deg(n, 0);
    for (int i = 0; i < p; ++i) {
      const bool on = (code >> (p - 1 - i)) & 1U;
      adj[pairs[i].first][pairs[i].second] = adj[pairs[i].second][pairs[i].first] = on;
      if (on) ++deg[pairs[i].first], ++deg[pairs[i].second];
    }
    if (!std::is_sorted(deg.begin(), deg.end(), std::greater<>())) continue;
    // Blocks of equal degree; every relabelling permutes within blocks.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && deg[j] == deg[i]) ++j;
      blocks.emplace_back(i, j);
      i = j;
    }
    bool canonical = true;
    std::function<void(std::size_t)> visit = [&](std::size_t b) {
      if (!canonical) return;
      if (b == blocks.size()) {
        for (const auto& [u, v] : pairs) {
          const char mine = adj[u][v];
          const char theirs = adj[perm[u]][perm[v]];
          if (theirs != mine) {
            if (theirs > mine) canonical = false;
            return;
          }
        }
        return;
      }
      auto first = perm.begin() + blocks[b].first;
      auto last = perm.begin() + blocks[b].second;
      std::sort(first, last);
      do {
        visit(b + 1);
      } while (canonical && std::next_permutation(first, last));
    };
    visit(0);
    if (!canonical) continue;
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i) {
      if ((code >> (p - 1 - i)) & 1U) edges.push_back(pairs[i]);
    }
    reps.push_back(Graph::from_edges(n, edges));
  }
  return reps;
}

/// Number of unlabelled graphs on n vertices by Burnside's lemma.
inline std::uint64_t burnside_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t sum = 0;
  std::uint64_t group = 0;
  do {
    // Cycles of the induced permutation on unordered pairs.
    std::set<std::pair<int, int>> seen;
    int cycles = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (seen.count({u, v})) continue;
        ++cycles;
        int a = u;
        int b = v;
        while (seen.insert({std::min(a, b), std::max(a, b)}).second) {
          a = perm[a];
          b = perm[b];
        }
      }
    }
    sum += std::uint64_t{1} << cycles;
    ++group;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / group;
}

}  // namespace oracle
