#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "specsup/graph.hpp"

namespace specsup {

struct TriangleStats {
  std::int64_t total = 0;
  std::vector<std::int64_t> per_vertex;
  /// Aligned with g.edges(): |N(u) ∩ N(v)| for each edge uv.
  std::vector<Edge> edges;
  std::vector<int> per_edge;
};

TriangleStats triangle_stats(const Graph& g);
std::int64_t triangle_count(const Graph& g);
/// Largest number of triangles sharing one edge; 0 when triangle-free.
int booksize(const Graph& g);
/// Number of F_2 subgraphs (unordered triangle pairs meeting in exactly one vertex).
std::int64_t count_bowties(const Graph& g);
std::int64_t count_bowties_bruteforce(const Graph& g);
/// True iff some neighbourhood G[N(v)] has a matching of size k.
bool contains_Fk(const Graph& g, int k);
/// Maximum matching size (Edmonds' blossom algorithm).
int max_matching(const Graph& g);
/// Largest k such that G contains F_k (0 when triangle-free).
int max_friendship(const Graph& g);

inline constexpr std::int64_t kMaxCoverTriangles = 100000;
/// Minimum number of vertices meeting every triangle. Throws SizeError above
/// kMaxCoverTriangles triangles.
int triangle_cover_number(const Graph& g);
/// Edges lying in at least one triangle.
std::int64_t triangular_edge_count(const Graph& g);

/// All triangles (a < b < c) in lexicographic order.
std::vector<std::array<Vertex, 3>> list_triangles(const Graph& g);

}  // namespace specsup
