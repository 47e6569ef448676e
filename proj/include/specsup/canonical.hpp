#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "specsup/graph.hpp"

namespace specsup {

/// Lexicographically least relabelled adjacency matrix over the leaves of an
/// individualise-and-refine search tree (equitable refinement, twin pruning).
/// Equal forms <=> isomorphic graphs (colour-preserving when colours given).
struct CanonicalForm {
  int n = 0;
  std::vector<int> colours;           // colour of the vertex at each canonical position
  std::vector<std::uint64_t> rows;    // n rows of ceil(n/64) words

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;

  Graph to_graph() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[i] = original vertex placed at canonical position i.
  std::vector<Vertex> order;
};

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours = {});
CanonicalForm canonical_form(const Graph& g, std::span<const int> colours = {});
/// g relabelled into canonical order.
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace specsup
