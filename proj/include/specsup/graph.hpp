#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace specsup {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 stored as bit rows.
///
/// Row v holds the neighbourhood of v as a little-endian bitset of
/// `words()` 64-bit words. All mutation goes through GraphBuilder or the
/// copy-returning helpers below.
class Graph {
 public:
  Graph() = default;

  /// Edge list constructor. Duplicate pairs collapse; loops and
  /// out-of-range endpoints throw ConstructionError.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }
  int words() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  int degree(Vertex v) const noexcept;
  int max_degree() const noexcept;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  int common_neighbors(Vertex u, Vertex v) const noexcept;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;
  Graph without_vertex(Vertex v) const;
  /// Vertex i of the result is vertex order[i] of this graph.
  Graph relabeled(std::span<const Vertex> order) const;

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int words_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int n() const noexcept { return g_.n_; }
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);
  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  void check_pair(Vertex u, Vertex v) const;
  Graph g_;
};

/// Copy of g with the pair uv flipped.
Graph toggle_edge(const Graph& g, Vertex u, Vertex v);

/// Disjoint union, with h's vertices shifted by g.n().
Graph disjoint_union(const Graph& g, const Graph& h);

enum class Side : std::uint8_t { S = 0, T = 1 };

/// Two-colouring of the vertex set with cached edge counts.
class Bipartition {
 public:
  Bipartition() = default;
  Bipartition(const Graph& g, std::vector<Side> side);

  const std::vector<Side>& sides() const noexcept { return side_; }
  Side side(Vertex v) const { return side_[v]; }
  std::int64_t e_s() const noexcept { return e_s_; }
  std::int64_t e_t() const noexcept { return e_t_; }
  std::int64_t e_st() const noexcept { return e_st_; }
  int count(Side s) const noexcept;

 private:
  std::vector<Side> side_;
  std::int64_t e_s_ = 0;
  std::int64_t e_t_ = 0;
  std::int64_t e_st_ = 0;
};

/// A proper 2-colouring when one exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

enum class MaxCutMode { Exact, Heuristic };

/// D(G) = m - maxcut(G): the fewest edges whose removal leaves G bipartite.
struct BipartiteDistance {
  std::int64_t value = 0;
  bool exact = false;
  Bipartition witness;
};

inline constexpr int kMaxExactCutVertices = 28;

/// Exact mode sweeps all 2^(n-1) cuts (n <= 28, else SizeError).
/// Heuristic mode runs seeded local search and returns an upper bound on D.
BipartiteDistance max_cut(const Graph& g, MaxCutMode mode, std::uint64_t seed = 0x5eed,
                          int restarts = 32);

struct BadSets {
  std::vector<Vertex> low_degree;     // L
  std::vector<Vertex> heavy_inside;   // W
};

/// L = {v : d(v) <= (1/2 - 1/200) n};
/// W = {v in S : d_S(v) >= n/150} u {v in T : d_T(v) >= n/150}.
BadSets bad_sets(const Graph& g, const Bipartition& p);

}  // namespace specsup
