#include "ctrwqo/enumerate.hpp"

#include <array>
#include <mutex>
#include <set>
#include <string>

#include "ctrwqo/errors.hpp"
#include "ctrwqo/isomorphism.hpp"

namespace ctrwqo {

namespace {

Graph from_form(const CanonicalForm& f) {
  Graph g(f.order);
  for (VertexId v = 0; v < f.order; ++v) {
    for (VertexId w : VertexSet(f.rows[v])) {
      if (v < w) g.add_edge(v, w);
    }
  }
  return g;
}

std::vector<Graph> collect(const std::set<CanonicalForm>& seen) {
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const auto& form : seen) out.push_back(from_form(form));
  return out;
}

// Every isomorphism class has a labelling with non-increasing degrees, so
// only those labelled graphs are canonised.
std::vector<Graph> brute_force(int n) {
  std::vector<Edge> slots;
  for (VertexId j = 1; j < n; ++j)
    for (VertexId i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::set<CanonicalForm> seen;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1) {
        ++deg[slots[k].first];
        ++deg[slots[k].second];
      }
    }
    bool sorted = true;
    for (int v = 1; v < n && sorted; ++v) sorted = deg[v - 1] >= deg[v];
    if (!sorted || (n > 1 && deg[n - 1] == 0)) continue;
    Graph g(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1) g.add_edge(slots[k].first, slots[k].second);
    }
    if (!is_connected(g)) continue;
    seen.insert(canonical_form(g));
  }
  return collect(seen);
}

// A connected graph always has a non-cutvertex, so every connected graph
// on n vertices arises from one on n-1 by adding a vertex with a nonempty
// neighbourhood.
std::vector<Graph> augment(const std::vector<Graph>& smaller) {
  std::set<CanonicalForm> seen;
  for (const Graph& base : smaller) {
    const int k = base.order();
    for (std::uint64_t nbrs = 1; nbrs < (std::uint64_t{1} << k); ++nbrs) {
      Graph g(k + 1);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (VertexId w : VertexSet(nbrs)) g.add_edge(k, w);
      seen.insert(canonical_form(g));
    }
  }
  return collect(seen);
}

}  // namespace

const std::vector<Graph>& enumerate_connected(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw OutOfRange("enumeration supports 1 <= n <= 8, got " + std::to_string(n));
  }
  static std::array<std::once_flag, kMaxEnumerationOrder + 1> once;
  static std::array<std::vector<Graph>, kMaxEnumerationOrder + 1> cache;
  std::call_once(once[n], [n] {
    cache[n] = n <= 7 ? brute_force(n) : augment(enumerate_connected(n - 1));
  });
  return cache[n];
}

std::vector<Graph> connected_corpus(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto& level = enumerate_connected(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace ctrwqo
