#include "ctrwqo/structure.hpp"

#include <algorithm>

#include "ctrwqo/errors.hpp"
#include "ctrwqo/isomorphism.hpp"

namespace ctrwqo {

std::string_view to_string(CycleClass c) {
  switch (c) {
    case CycleClass::InducedCycle: return "induced_cycle";
    case CycleClass::InducesClique: return "induces_clique";
    case CycleClass::Mixed: return "mixed";
  }
  return "mixed";
}

std::string_view to_string(Constructor k) {
  switch (k) {
    case Constructor::Stick: return "stick";
    case Constructor::Cycle: return "cycle";
    case Constructor::Clique: return "clique";
  }
  return "stick";
}

namespace {

int position(std::span<const VertexId> cycle, VertexId v) {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

void validate_cycle(const Graph& g, std::span<const VertexId> cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) throw NotACycle("a cycle needs at least 3 vertices");
  VertexSet seen;
  for (VertexId v : cycle) {
    if (v < 0 || v >= g.order()) throw NotACycle("vertex " + std::to_string(v) + " outside graph");
    if (seen.contains(v)) throw NotACycle("vertex " + std::to_string(v) + " repeated");
    seen.insert(v);
  }
  for (int i = 0; i < k; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) {
      throw NotACycle("consecutive vertices " + std::to_string(cycle[i]) + "," +
                      std::to_string(cycle[(i + 1) % k]) + " are not adjacent");
    }
  }
}

}  // namespace

bool crossing(std::span<const VertexId> cycle, Edge a, Edge b) {
  int pa1 = position(cycle, a.first), pa2 = position(cycle, a.second);
  const int pb1 = position(cycle, b.first), pb2 = position(cycle, b.second);
  if (pa1 < 0 || pa2 < 0 || pb1 < 0 || pb2 < 0) return false;
  if (pa1 == pa2 || pa1 == pb1 || pa1 == pb2 || pa2 == pb1 || pa2 == pb2 || pb1 == pb2) return false;
  if (pa1 > pa2) std::swap(pa1, pa2);
  const bool in1 = pa1 < pb1 && pb1 < pa2;
  const bool in2 = pa1 < pb2 && pb2 < pa2;
  return in1 != in2;
}

CycleClassification classify_cycle(const Graph& g, std::span<const VertexId> cycle) {
  validate_cycle(g, cycle);
  const int k = static_cast<int>(cycle.size());
  auto consecutive = [k](int i, int j) { return (i - j + k) % k == 1 || (j - i + k) % k == 1; };

  bool any_chord = false;
  bool any_non_chord = false;
  Edge non_chord_pos{-1, -1};
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (consecutive(i, j)) continue;
      if (g.adjacent(cycle[i], cycle[j])) {
        any_chord = true;
      } else if (!any_non_chord) {
        any_non_chord = true;
        non_chord_pos = {i, j};
      }
    }
  }
  if (!any_non_chord) return {CycleClass::InducesClique};
  if (!any_chord) return {CycleClass::InducedCycle};

  // Split the cycle at a non-chord {x, x'} into the two open arcs p and q.
  const auto [i, j] = non_chord_pos;
  std::vector<VertexId> p(cycle.begin() + i + 1, cycle.begin() + j);
  std::vector<VertexId> q;
  for (int t = j + 1; t < k; ++t) q.push_back(cycle[t]);
  for (int t = 0; t < i; ++t) q.push_back(cycle[t]);
  const Edge x{cycle[i], cycle[j]};

  for (VertexId a : p) {
    for (VertexId b : q) {
      if (g.adjacent(a, b)) return {CycleClass::Mixed, {a, b}, x};
    }
  }
  // Every chord now has both ends on one closed arc (x and x' included);
  // pick one and a vertex z strictly inside the sub-arc it spans. The
  // first vertex of the other open arc lies outside that sub-arc.
  std::vector<VertexId> p_closed{x.first}, q_closed{x.second};
  p_closed.insert(p_closed.end(), p.begin(), p.end());
  p_closed.push_back(x.second);
  q_closed.insert(q_closed.end(), q.begin(), q.end());
  q_closed.push_back(x.first);
  for (auto* arc : {&p_closed, &q_closed}) {
    const auto& path = *arc;
    const auto& other = arc == &p_closed ? q : p;
    for (std::size_t a = 0; a < path.size(); ++a) {
      for (std::size_t b = a + 2; b < path.size(); ++b) {
        if (!g.adjacent(path[a], path[b])) continue;
        const VertexId z = path[a + 1];
        const VertexId z2 = other.front();
        if (g.adjacent(z, z2)) return {CycleClass::Mixed, {z, z2}, x};
        return {CycleClass::Mixed, {path[a], path[b]}, {z, z2}};
      }
    }
  }
  // Unreachable: a chord exists and it lies on one of the arcs.
  throw std::logic_error("classify_cycle: chord not found");
}

std::vector<std::vector<VertexId>> enumerate_cycles(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path;
  VertexSet on_path;
  for (VertexId s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    on_path = VertexSet::single(s);
    auto dfs = [&](auto&& self, VertexId v) -> void {
      for (VertexId w : g.neighbors(v)) {
        if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        if (w <= s || on_path.contains(w)) continue;
        path.push_back(w);
        on_path.insert(w);
        self(self, w);
        on_path.erase(w);
        path.pop_back();
      }
    };
    dfs(dfs, s);
  }
  return out;
}

CactusReport is_clique_cactus(const Graph& g) {
  CactusReport r;
  r.blocks = block_decomposition(g).blocks;
  for (const Block& b : r.blocks) {
    if (b.kind == BlockKind::Other) r.offending.push_back(b);
  }
  r.clique_cactus = r.offending.empty();
  return r;
}

bool excludes_diamond(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw DisconnectedInput("excludes_diamond needs a connected graph");
  return is_clique_cactus(g).clique_cactus;
}

RootedGraph compose(Constructor kind, std::span<const RootedGraph> gs) {
  if (gs.empty()) throw EmptySequence("compose needs at least one rooted graph");
  int total = 0;
  for (const auto& x : gs) total += x.graph.order();
  if (kind == Constructor::Stick) total -= static_cast<int>(gs.size()) - 1;
  Graph out(total);
  std::vector<VertexId> roots;
  VertexId next = 0;
  const VertexId root0 = gs[0].root;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const auto& x = gs[i];
    std::vector<VertexId> map(static_cast<std::size_t>(x.graph.order()));
    for (VertexId v = 0; v < x.graph.order(); ++v) {
      if (kind == Constructor::Stick && i > 0 && v == x.root) {
        map[v] = root0;
      } else {
        map[v] = next++;
      }
    }
    for (auto [u, v] : x.graph.edges()) out.add_edge(map[u], map[v]);
    roots.push_back(map[x.root]);
  }
  const std::size_t p = roots.size();
  if (kind == Constructor::Cycle) {
    for (std::size_t i = 0; i < p; ++i) {
      const std::size_t j = (i + 1) % p;
      if (i != j && !out.adjacent(roots[i], roots[j])) out.add_edge(roots[i], roots[j]);
    }
  } else if (kind == Constructor::Clique) {
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) out.add_edge(roots[i], roots[j]);
  }
  return RootedGraph(std::move(out), roots[0]);
}

std::vector<DecPiece> dec_block(const RootedGraph& g, VertexSet block) {
  if (!block.contains(g.root)) throw BlockWithoutRoot("block does not contain the root");
  std::vector<DecPiece> out;
  for (VertexSet comp : connected_components(g.graph, g.graph.vertices() - block)) {
    Graph piece(comp.size() + 1);
    std::vector<VertexId> index(static_cast<std::size_t>(g.graph.order()), -1);
    VertexId k = 1;
    for (VertexId v : comp) index[v] = k++;
    for (VertexId v : comp) {
      for (VertexId w : g.graph.neighbors(v) & comp) {
        if (v < w) piece.add_edge(index[v], index[w]);
      }
      if (g.graph.neighbors(v).intersects(block)) piece.add_edge(0, index[v]);
    }
    out.push_back({RootedGraph(std::move(piece), 0), comp, g.graph.neighbors(comp) & block});
  }
  return out;
}

std::vector<DecPiece> dec(const RootedGraph& g) {
  std::vector<DecPiece> out;
  for (const Block& b : block_decomposition(g.graph).blocks) {
    if (!b.vertices.contains(g.root)) continue;
    auto part = dec_block(g, b.vertices);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

RootedGraph reconstruct(const RootedGraph& g) {
  if (g.graph.order() == 0 || !is_connected(g.graph)) throw NotCliqueCactus("graph is not connected");
  const CactusReport report = is_clique_cactus(g.graph);
  if (!report) throw NotCliqueCactus("graph has a block that is neither a clique nor a cycle");

  const Block* root_block = nullptr;
  for (const Block& b : report.blocks) {
    if (b.vertices.contains(g.root)) {
      root_block = &b;
      break;
    }
  }
  const VertexSet b = root_block->vertices;

  // Block vertices in constructor order: the root first, then around the
  // cycle (or ascending for cliques).
  std::vector<VertexId> around{g.root};
  if (root_block->kind == BlockKind::Cycle) {
    VertexId prev = -1;
    VertexId cur = g.root;
    while (true) {
      const VertexSet nbrs = g.graph.neighbors(cur) & b;
      VertexId next = -1;
      for (VertexId w : nbrs) {
        if (w != prev) {
          next = w;
          break;
        }
      }
      if (next == g.root) break;
      around.push_back(next);
      prev = cur;
      cur = next;
    }
  } else {
    for (VertexId v : b - VertexSet::single(g.root)) around.push_back(v);
  }

  const auto pieces = dec_block(g, b);
  std::vector<RootedGraph> sticks;
  for (VertexId v : around) {
    std::vector<RootedGraph> group;
    for (const DecPiece& piece : pieces) {
      if (piece.attachment == VertexSet::single(v)) group.push_back(piece.graph);
    }
    sticks.push_back(group.empty() ? RootedGraph(Graph(1), 0) : compose(Constructor::Stick, group));
  }
  const Constructor kind = root_block->kind == BlockKind::Cycle ? Constructor::Cycle : Constructor::Clique;
  return compose(kind, sticks);
}

bool reconstruct_check(const RootedGraph& g) { return is_isomorphic(reconstruct(g), g); }

}  // namespace ctrwqo
