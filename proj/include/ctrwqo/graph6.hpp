#pragma once

#include <string>
#include <string_view>

#include "ctrwqo/graph.hpp"

namespace ctrwqo {

/// Largest order representable in the short graph6 header.
inline constexpr int kMaxGraph6Order = 62;

/// Parses one short-form graph6 line. A single trailing newline (and
/// carriage return) is tolerated. Throws MalformedGraph6.
Graph parse_graph6(std::string_view text);

/// Short-form graph6 encoding, no trailing newline. Throws TooLarge for
/// n > 62.
std::string write_graph6(const Graph& g);

}  // namespace ctrwqo
