#pragma once

#include <cstddef>
#include <span>

namespace ctrwqo {

/// Higman embedding: true iff there is an increasing map f with
/// leq(r[i], s[f(i)]) for all i. Greedy: each r[i] takes the earliest
/// unused later s[j] above it.
template <typename T, typename Leq>
bool sequence_embeds(std::span<const T> r, std::span<const T> s, Leq&& leq) {
  std::size_t j = 0;
  for (const T& item : r) {
    while (j < s.size() && !leq(item, s[j])) ++j;
    if (j == s.size()) return false;
    ++j;
  }
  return true;
}

}  // namespace ctrwqo
