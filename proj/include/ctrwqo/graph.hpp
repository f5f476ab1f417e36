#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ctrwqo/vertex_set.hpp"

namespace ctrwqo {

using Edge = std::pair<VertexId, VertexId>;

/// Finite simple undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;
  VertexSet vertices() const { return VertexSet::range(order()); }

  bool adjacent(VertexId u, VertexId v) const { return rows_[u].contains(v); }
  VertexSet neighbors(VertexId v) const { return rows_[v]; }
  int degree(VertexId v) const { return rows_[v].size(); }

  /// Vertices outside `s` with a neighbor in `s`.
  VertexSet neighbors(VertexSet s) const;

  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  /// Edges as (u, v) with u < v, lexicographic.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> rows_;
};

/// A graph with a distinguished root vertex.
struct RootedGraph {
  RootedGraph() = default;
  RootedGraph(Graph g, VertexId r);

  Graph graph;
  VertexId root = 0;

  bool operator==(const RootedGraph&) const = default;
};

/// Result of contracting one edge: the graph plus where each old vertex went.
struct ContractedGraph {
  Graph graph;
  std::vector<VertexId> image;  // old vertex id -> new vertex id
};

/// Contracts {u, v}. The merged vertex takes the smaller label; labels
/// above the larger one shift down by one. Throws NotAnEdge.
ContractedGraph contract_edge_mapped(const Graph& g, VertexId u, VertexId v);
Graph contract_edge(const Graph& g, VertexId u, VertexId v);

Graph complement(const Graph& g);

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, VertexSet s);

/// Number of vertices outside `s` having a neighbor in `s`.
int subset_degree(const Graph& g, VertexSet s);

/// Subgraph induced by `s`, relabelled in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// True when some vertex is adjacent to every other vertex.
bool has_dominating_vertex(const Graph& g);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const VertexId> perm);

Graph disjoint_union(const Graph& a, const Graph& b);

// Standard graphs.
Graph edgeless(int n);
Graph complete(int n);
Graph path(int n);
/// Chordless cycle on n >= 3 vertices.
Graph cycle(int n);
/// K_{a,b}; the a-side takes labels 0..a-1.
Graph complete_bipartite(int a, int b);
/// K_{1,r}, centre 0.
Graph star(int r);
/// Complement of 2K_1 + K_r: two adjacent dominating vertices (0 and 1)
/// over r independent vertices. D_0 = K_2, D_1 = K_3, D_2 is the diamond.
Graph diamond_family(int r);
/// Complement of the n-cycle.
Graph antihole(int n);
/// P_4 plus a dominating vertex (vertex 4).
Graph gem();

}  // namespace ctrwqo
