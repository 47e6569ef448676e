#include "specsup/graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "specsup/errors.hpp"

namespace specsup {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

int Graph::degree(Vertex v) const noexcept {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits; bits &= bits - 1) {
      out.push_back(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::common_neighbors(Vertex u, Vertex v) const noexcept {
  auto a = row(u);
  auto b = row(v);
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  GraphBuilder b(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return std::move(b).build();
}

Graph Graph::without_vertex(Vertex v) const {
  std::vector<Vertex> keep;
  keep.reserve(n_ > 0 ? n_ - 1 : 0);
  for (Vertex u = 0; u < n_; ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(keep);
}

Graph Graph::relabeled(std::span<const Vertex> order) const {
  if (static_cast<int>(order.size()) != n_) {
    throw ConstructionError("relabel order must list every vertex once");
  }
  return induced(order);
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw ConstructionError("vertex count must be non-negative");
  g_.n_ = n;
  g_.words_ = words_for(n);
  g_.bits_.assign(static_cast<std::size_t>(n) * g_.words_, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw ConstructionError("endpoint out of range: (" + std::to_string(u) + "," +
                            std::to_string(v) + ") with n=" + std::to_string(g_.n_));
  }
  if (u == v) throw ConstructionError("loop at vertex " + std::to_string(u));
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (g_.has_edge(u, v)) return;
  g_.bits_[static_cast<std::size_t>(u) * g_.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  g_.bits_[static_cast<std::size_t>(v) * g_.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++g_.m_;
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!g_.has_edge(u, v)) return;
  g_.bits_[static_cast<std::size_t>(u) * g_.words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  g_.bits_[static_cast<std::size_t>(v) * g_.words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --g_.m_;
}

void GraphBuilder::toggle_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (g_.has_edge(u, v)) {
    remove_edge(u, v);
  } else {
    add_edge(u, v);
  }
}

Graph toggle_edge(const Graph& g, Vertex u, Vertex v) {
  GraphBuilder b(g);
  b.toggle_edge(u, v);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.n() + h.n());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + g.n(), v + g.n());
  return std::move(b).build();
}

Bipartition::Bipartition(const Graph& g, std::vector<Side> side) : side_(std::move(side)) {
  if (static_cast<int>(side_.size()) != g.n()) {
    throw ValidationError("bipartition size does not match vertex count");
  }
  for (auto [u, v] : g.edges()) {
    if (side_[u] != side_[v]) {
      ++e_st_;
    } else if (side_[u] == Side::S) {
      ++e_s_;
    } else {
      ++e_t_;
    }
  }
}

int Bipartition::count(Side s) const noexcept {
  return static_cast<int>(std::count(side_.begin(), side_.end(), s));
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.n();
  std::vector<int> colour(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Side> side(n);
  for (Vertex v = 0; v < n; ++v) side[v] = colour[v] == 0 ? Side::S : Side::T;
  return Bipartition(g, std::move(side));
}

namespace {

BipartiteDistance exact_max_cut(const Graph& g) {
  const int n = g.n();
  if (n > kMaxExactCutVertices) {
    throw SizeError("exact max-cut supports n <= " + std::to_string(kMaxExactCutVertices) +
                    ", got n=" + std::to_string(n));
  }
  BipartiteDistance out;
  out.exact = true;
  if (n <= 1) {
    out.witness = Bipartition(g, std::vector<Side>(n, Side::S));
    return out;
  }
  std::vector<std::uint32_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.row(v)[0]);

  // Vertex n-1 stays in S; Gray-code walk over the membership of 0..n-2 in T.
  std::uint32_t in_t = 0;
  std::int64_t cut = 0;
  std::int64_t best_cut = 0;
  std::uint32_t best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    const int v = std::countr_zero(step);
    const std::uint32_t bit = std::uint32_t{1} << v;
    const int same = std::popcount(adj[v] & ((in_t & bit) ? in_t : ~in_t));
    const int other = std::popcount(adj[v]) - same;
    // Moving v to the other side turns same-side neighbours into cut edges.
    cut += same - other;
    in_t ^= bit;
    if (cut > best_cut) {
      best_cut = cut;
      best_mask = in_t;
    }
  }
  std::vector<Side> side(n, Side::S);
  for (Vertex v = 0; v < n - 1; ++v) {
    if (best_mask >> v & 1U) side[v] = Side::T;
  }
  out.value = g.m() - best_cut;
  out.witness = Bipartition(g, std::move(side));
  return out;
}

BipartiteDistance heuristic_max_cut(const Graph& g, std::uint64_t seed, int restarts) {
  const int n = g.n();
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> nbr(n);
  for (Vertex v = 0; v < n; ++v) nbr[v] = g.neighbors(v);

  std::int64_t best_cut = -1;
  std::vector<Side> best_side(n, Side::S);
  std::vector<Side> side(n);
  for (int r = 0; r < std::max(1, restarts); ++r) {
    for (Vertex v = 0; v < n; ++v) side[v] = (rng() & 1U) ? Side::T : Side::S;
    bool improved = true;
    while (improved) {
      improved = false;
      for (Vertex v = 0; v < n; ++v) {
        int same = 0;
        for (Vertex w : nbr[v]) same += side[w] == side[v];
        if (2 * same > static_cast<int>(nbr[v].size())) {
          side[v] = side[v] == Side::S ? Side::T : Side::S;
          improved = true;
        }
      }
    }
    Bipartition p(g, side);
    if (p.e_st() > best_cut) {
      best_cut = p.e_st();
      best_side = side;
    }
  }
  BipartiteDistance out;
  out.exact = false;
  out.witness = Bipartition(g, std::move(best_side));
  out.value = g.m() - out.witness.e_st();
  return out;
}

}  // namespace

BipartiteDistance max_cut(const Graph& g, MaxCutMode mode, std::uint64_t seed, int restarts) {
  if (mode == MaxCutMode::Exact) return exact_max_cut(g);
  return heuristic_max_cut(g, seed, restarts);
}

BadSets bad_sets(const Graph& g, const Bipartition& p) {
  const std::int64_t n = g.n();
  BadSets out;
  for (Vertex v = 0; v < g.n(); ++v) {
    const std::int64_t d = g.degree(v);
    // d <= (1/2 - 1/200) n  <=>  200 d <= 99 n
    if (200 * d <= 99 * n) out.low_degree.push_back(v);
    std::int64_t inside = 0;
    for (Vertex w : g.neighbors(v)) inside += p.side(w) == p.side(v);
    // d_own(v) >= n / 150
    if (150 * inside >= n) out.heavy_inside.push_back(v);
  }
  return out;
}

}  // namespace specsup
