#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "specsup/graph.hpp"

namespace specsup {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string graph6_encode(const Graph& g);
/// Accepts an optional ">>graph6<<" header and a trailing newline.
/// Malformed input throws ParseError carrying the byte offset.
Graph graph6_decode(std::string_view text);
/// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace specsup
