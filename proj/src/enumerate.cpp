#include "specsup/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "specsup/canonical.hpp"
#include "specsup/errors.hpp"
#include "specsup/graph6.hpp"
#include "specsup/parallel.hpp"

namespace specsup {

std::vector<Graph> augment(const Graph& parent) {
  const int p = parent.n();
  const int n = p + 1;
  const CanonicalForm parent_form = canonical_form(parent);
  std::vector<int> pdeg(p);
  for (Vertex v = 0; v < p; ++v) pdeg[v] = parent.degree(v);

  std::vector<Graph> out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<int> pos(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
    const int d = std::popcount(mask);
    // The new vertex must have minimum degree in the child.
    bool ok = true;
    for (Vertex v = 0; v < p && ok; ++v) ok = pdeg[v] + static_cast<int>(mask >> v & 1U) >= d;
    if (!ok) continue;

    GraphBuilder b(n);
    for (auto [u, v] : parent.edges()) b.add_edge(u, v);
    for (Vertex v = 0; v < p; ++v) {
      if (mask >> v & 1U) b.add_edge(v, p);
    }
    const Graph child = std::move(b).build();
    CanonicalLabeling lab = canonical_labeling(child);
    for (int i = 0; i < n; ++i) pos[lab.order[i]] = i;
    Vertex chosen = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (child.degree(v) == d && (chosen < 0 || pos[v] < pos[chosen])) chosen = v;
    }
    if (chosen != p && canonical_form(child.without_vertex(chosen)) != parent_form) continue;
    if (seen.insert(lab.form).second) out.push_back(lab.form.to_graph());
  }
  return out;
}

std::vector<Graph> generate_all(int n, int workers) {
  if (n < 0) throw SizeError("vertex count must be non-negative");
  if (n > kMaxGenerateVertices) {
    throw SizeError("built-in generation supports n <= " + std::to_string(kMaxGenerateVertices) +
                    "; supply an external graph6 stream for n=" + std::to_string(n));
  }
  std::vector<Graph> level{GraphBuilder(0).build()};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Graph>> children(level.size());
    parallel_for(level.size(), workers, [&](std::size_t i) { children[i] = augment(level[i]); });
    std::vector<Graph> next;
    for (auto& c : children) {
      for (auto& g : c) next.push_back(std::move(g));
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::string, Graph>> keyed;
  keyed.reserve(level.size());
  for (auto& g : level) keyed.emplace_back(graph6_encode(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

}  // namespace specsup
