#include "ctrwqo/blocks.hpp"

#include <algorithm>

namespace ctrwqo {

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Clique: return "clique";
    case BlockKind::Cycle: return "cycle";
    case BlockKind::Edge: return "edge";
    case BlockKind::Other: return "other";
  }
  return "other";
}

BlockKind classify_block(const Graph& g, VertexSet vertices) {
  const int k = vertices.size();
  if (k == 2) return BlockKind::Edge;
  bool complete = true;
  bool two_regular = true;
  for (VertexId v : vertices) {
    const int d = (g.neighbors(v) & vertices).size();
    complete = complete && d == k - 1;
    two_regular = two_regular && d == 2;
  }
  if (complete) return BlockKind::Clique;
  if (two_regular && k >= 4 && is_connected(g, vertices)) return BlockKind::Cycle;
  return BlockKind::Other;
}

namespace {

class Tarjan {
 public:
  explicit Tarjan(const Graph& g)
      : g_(g),
        disc_(static_cast<std::size_t>(g.order()), -1),
        low_(static_cast<std::size_t>(g.order()), 0) {}

  BlockDecomposition run() {
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (disc_[v] >= 0) continue;
      if (g_.degree(v) == 0) {
        disc_[v] = time_++;
        out_.blocks.push_back({VertexSet::single(v), BlockKind::Clique});
        continue;
      }
      visit(v, -1);
    }
    for (auto& b : out_.blocks) b.kind = classify_block(g_, b.vertices);
    std::sort(out_.blocks.begin(), out_.blocks.end(), [](const Block& a, const Block& b) {
      if (a.vertices.front() != b.vertices.front()) return a.vertices.front() < b.vertices.front();
      return a.vertices.bits() < b.vertices.bits();
    });
    return std::move(out_);
  }

 private:
  void visit(VertexId v, VertexId parent) {
    disc_[v] = low_[v] = time_++;
    int children = 0;
    for (VertexId w : g_.neighbors(v)) {
      if (disc_[w] < 0) {
        ++children;
        stack_.emplace_back(v, w);
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          if (parent >= 0 || children > 1) out_.cutvertices.insert(v);
          VertexSet block;
          while (true) {
            auto [a, b] = stack_.back();
            stack_.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == v && b == w) break;
          }
          out_.blocks.push_back({block, BlockKind::Other});
        }
      } else if (w != parent && disc_[w] < disc_[v]) {
        stack_.emplace_back(v, w);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<Edge> stack_;
  int time_ = 0;
  BlockDecomposition out_;
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) { return Tarjan(g).run(); }

}  // namespace ctrwqo
