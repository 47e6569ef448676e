#include "specsup/graph6.hpp"

#include <string>

#include "specsup/errors.hpp"

namespace specsup {

std::string graph6_encode(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.n());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int value = 0;
  int bits = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  auto byte = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("graph6 input ends early", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 byte " + std::to_string(c), at);
    return c - 63;
  };
  std::uint64_t n = 0;
  if (byte(pos) < 63) {
    n = static_cast<std::uint64_t>(byte(pos));
    pos += 1;
  } else if (pos + 1 < text.size() && byte(pos + 1) == 63) {
    for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::uint64_t>(byte(pos + 2 + k));
    pos += 8;
  } else {
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(byte(pos + 1 + k));
    pos += 4;
  }
  if (n > 1000000) throw SizeError("graph6 vertex count " + std::to_string(n) + " is too large");
  const int nv = static_cast<int>(n);
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() != expected) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - std::min(text.size(), pos)) +
                         " bytes, expected " + std::to_string(expected - pos),
                     std::min(text.size(), expected));
  }
  GraphBuilder b(nv);
  std::uint64_t k = 0;
  for (int j = 1; j < nv; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte(pos + static_cast<std::size_t>(k / 6));
      if (chunk >> (5 - k % 6) & 1) b.add_edge(i, j);
    }
  }
  if (pairs % 6 != 0) {
    const int last = byte(expected - 1);
    if (last & ((1 << (6 - pairs % 6)) - 1)) throw ParseError("non-zero graph6 padding bits", expected - 1);
  }
  return std::move(b).build();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      try {
        out.push_back(graph6_decode(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("line ") + std::to_string(out.size() + 1) + ": " + e.what(),
                         offset + e.offset());
      }
    }
    offset += line.size() + 1;
  }
  return out;
}

}  // namespace specsup
