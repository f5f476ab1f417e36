#include "ctrwqo/graph6.hpp"

#include <vector>

#include "ctrwqo/errors.hpp"

namespace ctrwqo {

namespace {

constexpr int kOffset = 63;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw MalformedGraph6("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw MalformedGraph6("character code " + std::to_string(static_cast<int>(c)) +
                            " outside 63..126");
    }
  }
  const int n = text[0] - kOffset;
  if (n > kMaxGraph6Order) throw MalformedGraph6("long-form graph6 header is not supported");
  if (text.size() != 1 + body_length(n)) {
    throw MalformedGraph6("expected " + std::to_string(1 + body_length(n)) + " characters for n=" +
                          std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  Graph g(n);
  std::size_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - kOffset;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < 6 * body_length(n); ++k) {
    const int chunk = text[1 + k / 6] - kOffset;
    if ((chunk >> (5 - k % 6)) & 1) throw MalformedGraph6("nonzero padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw TooLarge("graph6 short form holds at most 62 vertices, got " + std::to_string(n));
  }
  std::vector<int> chunks(body_length(n), 0);
  std::size_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) chunks[k / 6] |= 1 << (5 - k % 6);
    }
  }
  std::string out(1, static_cast<char>(n + kOffset));
  for (int c : chunks) out.push_back(static_cast<char>(c + kOffset));
  return out;
}

}  // namespace ctrwqo
