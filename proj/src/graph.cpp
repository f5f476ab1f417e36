#include "ctrwqo/graph.hpp"

#include <string>

#include "ctrwqo/errors.hpp"

namespace ctrwqo {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw TooLarge("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  rows_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
  int twice = 0;
  for (auto r : rows_) twice += r.size();
  return twice / 2;
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  for (VertexId v : s) out |= rows_[v];
  return out - s;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v || u < 0 || v < 0 || u >= order() || v >= order()) {
    throw std::invalid_argument("invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
  rows_[u].erase(v);
  rows_[v].erase(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : rows_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

RootedGraph::RootedGraph(Graph g, VertexId r) : graph(std::move(g)), root(r) {
  if (graph.order() < 1 || r < 0 || r >= graph.order()) {
    throw std::invalid_argument("root " + std::to_string(r) + " outside a graph of order " +
                                std::to_string(graph.order()));
  }
}

ContractedGraph contract_edge_mapped(const Graph& g, VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw NotAnEdge("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  }
  const VertexId keep = std::min(u, v);
  const VertexId gone = std::max(u, v);
  ContractedGraph out{Graph(g.order() - 1), std::vector<VertexId>(static_cast<std::size_t>(g.order()))};
  for (VertexId w = 0; w < g.order(); ++w) {
    out.image[w] = w == gone ? keep : (w > gone ? w - 1 : w);
  }
  for (auto [a, b] : g.edges()) {
    const VertexId x = out.image[a];
    const VertexId y = out.image[b];
    if (x != y) out.graph.add_edge(x, y);
  }
  return out;
}

Graph contract_edge(const Graph& g, VertexId u, VertexId v) {
  return contract_edge_mapped(g, u, v).graph;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = g.neighbors(frontier) & rest;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  VertexSet comp = VertexSet::single(s.front());
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next = (g.neighbors(frontier) & s) - comp;
    comp |= next;
    frontier = next;
  }
  return comp == s;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

int subset_degree(const Graph& g, VertexSet s) { return g.neighbors(s).size(); }

Graph induced_subgraph(const Graph& g, VertexSet s) {
  std::vector<VertexId> index(static_cast<std::size_t>(g.order()), -1);
  int k = 0;
  for (VertexId v : s) index[v] = k++;
  Graph out(k);
  for (VertexId v : s) {
    for (VertexId w : g.neighbors(v) & s) {
      if (v < w) out.add_edge(index[v], index[w]);
    }
  }
  return out;
}

bool has_dominating_vertex(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return true;
  }
  return false;
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

Graph edgeless(int n) { return Graph(n); }

Graph complete(int n) {
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (VertexId u = 0; u < a; ++u)
    for (VertexId v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph star(int r) { return complete_bipartite(1, r); }

Graph diamond_family(int r) {
  Graph g(r + 2);
  g.add_edge(0, 1);
  for (VertexId v = 2; v < r + 2; ++v) {
    g.add_edge(0, v);
    g.add_edge(1, v);
  }
  return g;
}

Graph antihole(int n) { return complement(cycle(n)); }

Graph gem() {
  Graph g = path(5);
  g.remove_edge(3, 4);
  for (VertexId v = 0; v < 4; ++v) g.add_edge(4, v);
  return g;
}

}  // namespace ctrwqo
