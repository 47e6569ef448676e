#include "specsup/counting.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "specsup/errors.hpp"

namespace specsup {

namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

}  // namespace

TriangleStats triangle_stats(const Graph& g) {
  TriangleStats out;
  out.per_vertex.assign(g.n(), 0);
  out.edges = g.edges();
  out.per_edge.reserve(out.edges.size());
  std::int64_t sum = 0;
  for (auto [u, v] : out.edges) {
    const int c = g.common_neighbors(u, v);
    out.per_edge.push_back(c);
    out.per_vertex[u] += c;
    out.per_vertex[v] += c;
    sum += c;
  }
  // Each triangle is seen by its three edges, and twice at each vertex.
  out.total = sum / 3;
  for (auto& x : out.per_vertex) x /= 2;
  return out;
}

std::int64_t triangle_count(const Graph& g) { return triangle_stats(g).total; }

int booksize(const Graph& g) {
  int best = 0;
  for (auto [u, v] : g.edges()) best = std::max(best, g.common_neighbors(u, v));
  return best;
}

std::int64_t count_bowties(const Graph& g) {
  const TriangleStats st = triangle_stats(g);
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.n(); ++v) total += choose2(st.per_vertex[v]);
  // Two edges of G[N(v)] sharing u are counted once at v for every such pair.
  for (std::size_t i = 0; i < st.edges.size(); ++i) total -= 2 * choose2(st.per_edge[i]);
  return total;
}

std::vector<std::array<Vertex, 3>> list_triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (auto [a, b] : g.edges()) {
    for (Vertex c : g.neighbors(b)) {
      if (c > b && g.has_edge(a, c)) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_bowties_bruteforce(const Graph& g) {
  const auto tri = list_triangles(g);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < tri.size(); ++i) {
    for (std::size_t j = i + 1; j < tri.size(); ++j) {
      int shared = 0;
      for (Vertex a : tri[i]) {
        for (Vertex b : tri[j]) shared += a == b;
      }
      total += shared == 1;
    }
  }
  return total;
}

int max_matching(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::vector<int> match(n, -1);
  std::vector<int> parent(n);
  std::vector<int> base(n);
  std::vector<char> used(n);
  std::vector<char> blossom(n);
  std::vector<int> queue;

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    while (true) {
      a = base[a];
      seen[a] = 1;
      if (match[a] < 0) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
          const int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (match[to] < 0) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  // Greedy start, then augment from every exposed vertex.
  for (Vertex v = 0; v < n; ++v) {
    if (match[v] >= 0) continue;
    for (Vertex w : adj[v]) {
      if (match[w] < 0) {
        match[v] = w;
        match[w] = v;
        break;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (match[v] >= 0) continue;
    int u = find_path(v);
    while (u >= 0) {
      const int pv = parent[u];
      const int ppv = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = ppv;
    }
  }
  int size = 0;
  for (Vertex v = 0; v < n; ++v) size += match[v] > v;
  return size;
}

int max_friendship(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) < 2 * (best + 1)) continue;
    best = std::max(best, max_matching(g.induced(g.neighbors(v))));
  }
  return best;
}

bool contains_Fk(const Graph& g, int k) {
  if (k < 1) throw DomainError("contains_Fk needs k >= 1");
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) < 2 * k) continue;
    if (max_matching(g.induced(g.neighbors(v))) >= k) return true;
  }
  return false;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(int n, std::vector<std::array<Vertex, 3>> tri) : n_(n), tri_(std::move(tri)) {}

  int solve() {
    std::vector<int> all(tri_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    best_ = greedy(all);
    branch(all, 0);
    return best_;
  }

 private:
  // Greedy hitting set: repeatedly take the vertex in the most open triangles.
  int greedy(std::vector<int> open) const {
    int used = 0;
    std::vector<int> hits(n_);
    while (!open.empty()) {
      std::fill(hits.begin(), hits.end(), 0);
      for (int t : open) {
        for (Vertex v : tri_[t]) ++hits[v];
      }
      const Vertex pick = static_cast<Vertex>(std::max_element(hits.begin(), hits.end()) - hits.begin());
      std::erase_if(open, [&](int t) { return std::find(tri_[t].begin(), tri_[t].end(), pick) != tri_[t].end(); });
      ++used;
    }
    return used;
  }

  // Vertex-disjoint triangles each need their own cover vertex.
  int packing_bound(const std::vector<int>& open) const {
    std::vector<char> taken(n_, 0);
    int count = 0;
    for (int t : open) {
      const auto& [a, b, c] = tri_[t];
      if (taken[a] || taken[b] || taken[c]) continue;
      taken[a] = taken[b] = taken[c] = 1;
      ++count;
    }
    return count;
  }

  void branch(const std::vector<int>& open, int depth) {
    if (open.empty()) {
      best_ = std::min(best_, depth);
      return;
    }
    if (depth + packing_bound(open) >= best_) return;
    for (Vertex v : tri_[open.front()]) {
      std::vector<int> rest;
      rest.reserve(open.size());
      for (int t : open) {
        if (std::find(tri_[t].begin(), tri_[t].end(), v) == tri_[t].end()) rest.push_back(t);
      }
      branch(rest, depth + 1);
    }
  }

  int n_;
  std::vector<std::array<Vertex, 3>> tri_;
  int best_ = 0;
};

}  // namespace

int triangle_cover_number(const Graph& g) {
  const std::int64_t t = triangle_count(g);
  if (t > kMaxCoverTriangles) {
    throw SizeError("triangle cover search supports at most " + std::to_string(kMaxCoverTriangles) +
                    " triangles, got " + std::to_string(t));
  }
  if (t == 0) return 0;
  return CoverSearch(g.n(), list_triangles(g)).solve();
}

std::int64_t triangular_edge_count(const Graph& g) {
  std::int64_t count = 0;
  for (auto [u, v] : g.edges()) count += g.common_neighbors(u, v) > 0;
  return count;
}

}  // namespace specsup
