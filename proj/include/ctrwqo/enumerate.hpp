#pragma once

#include <vector>

#include "ctrwqo/graph.hpp"

namespace ctrwqo {

inline constexpr int kMaxEnumerationOrder = 8;

/// One canonical representative per isomorphism class of connected graphs
/// on n vertices (1 <= n <= 8), in a fixed order (by canonical code).
/// Throws OutOfRange otherwise. Results are computed once and cached.
const std::vector<Graph>& enumerate_connected(int n);

/// Every connected graph on 1..max_n vertices, in order of size.
std::vector<Graph> connected_corpus(int max_n);

}  // namespace ctrwqo
