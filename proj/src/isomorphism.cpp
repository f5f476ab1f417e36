#include "ctrwqo/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace ctrwqo {

namespace {

/// Equitable refinement. Colours are dense ranks 0..k-1 and are reassigned
/// by sorting (old colour, neighbour-colour counts), so the result depends
/// only on the isomorphism type of (g, colours).
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  std::vector<int> by(static_cast<std::size_t>(n));
  while (classes < n) {
    for (VertexId v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.assign(static_cast<std::size_t>(classes) + 1, 0);
      s[0] = color[v];
      for (VertexId w : g.neighbors(v)) ++s[1 + color[w]];
    }
    std::iota(by.begin(), by.end(), 0);
    std::sort(by.begin(), by.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[by[i]] != sig[by[i - 1]]) ++next;
      color[by[i]] = next;
    }
    if (next + 1 == classes) break;
    classes = next + 1;
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  void run(std::vector<int> color) { search(std::move(color)); }

  std::vector<std::uint64_t> best_rows;
  std::vector<VertexId> best_labeling;

 private:
  void search(std::vector<int> color) {
    const int n = g_.order();
    refine(g_, color);
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int c : color) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }
    VertexSet tried;
    for (VertexId v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      bool twin = false;
      for (VertexId t : tried) {
        const VertexSet both = VertexSet{v, t};
        if (g_.neighbors(v) - both == g_.neighbors(t) - both) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.insert(v);
      std::vector<int> next(color);
      for (VertexId w = 0; w < n; ++w) {
        if (color[w] > target || (color[w] == target && w != v)) ++next[w];
      }
      search(std::move(next));
    }
  }

  void leaf(const std::vector<int>& pos) {
    const int n = g_.order();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) {
      std::uint64_t r = 0;
      for (VertexId w : g_.neighbors(v)) r |= std::uint64_t{1} << pos[w];
      rows[pos[v]] = r;
    }
    if (best_labeling.empty() || rows > best_rows) {
      best_rows = std::move(rows);
      best_labeling = pos;
    }
  }

  const Graph& g_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  const int n = g.order();
  std::vector<int> initial(static_cast<std::size_t>(n), 0);
  std::vector<int> sorted_colors(static_cast<std::size_t>(n), 0);
  if (!colors.empty()) {
    if (static_cast<int>(colors.size()) != n) throw std::invalid_argument("colour vector size mismatch");
    std::vector<int> distinct(colors.begin(), colors.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (VertexId v = 0; v < n; ++v) {
      initial[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors[v]) -
                                    distinct.begin());
    }
    sorted_colors.assign(colors.begin(), colors.end());
    std::sort(sorted_colors.begin(), sorted_colors.end());
  }
  CanonicalLabeling out;
  out.form.order = n;
  out.form.colors = std::move(sorted_colors);
  if (n == 0) return out;
  Canonizer c(g);
  c.run(std::move(initial));
  out.form.rows = std::move(c.best_rows);
  out.labeling = std::move(c.best_labeling);
  return out;
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  return canonical_labeling(g, colors).form;
}

Graph canonical_graph(const Graph& g) {
  const auto lab = canonical_labeling(g);
  return relabel(g, lab.labeling);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

bool is_isomorphic(const RootedGraph& g, const RootedGraph& h) {
  if (g.graph.order() != h.graph.order() || g.graph.size() != h.graph.size()) return false;
  std::vector<int> cg(static_cast<std::size_t>(g.graph.order()), 0);
  std::vector<int> ch(static_cast<std::size_t>(h.graph.order()), 0);
  cg[g.root] = 1;
  ch[h.root] = 1;
  return canonical_form(g.graph, cg) == canonical_form(h.graph, ch);
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t h = static_cast<std::size_t>(f.order) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (int c : f.colors) mix(static_cast<std::uint64_t>(c));
  for (auto r : f.rows) mix(r);
  return h;
}

}  // namespace ctrwqo
