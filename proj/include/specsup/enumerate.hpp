#pragma once

#include <vector>

#include "specsup/graph.hpp"

namespace specsup {

inline constexpr int kMaxGenerateVertices = 10;

/// One canonical representative per isomorphism class of graphs on n
/// vertices, sorted by graph6. Built by canonical augmentation: a child of a
/// canonical parent on n-1 vertices is kept iff deleting its canonically
/// chosen minimum-degree vertex gives back that parent.
std::vector<Graph> generate_all(int n, int workers = 0);

/// Children of one canonical parent accepted by the augmentation rule,
/// as canonical graphs in a deterministic order.
std::vector<Graph> augment(const Graph& parent);

}  // namespace specsup
