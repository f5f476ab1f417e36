#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ctrwqo/blocks.hpp"
#include "ctrwqo/graph.hpp"

namespace ctrwqo {

enum class CycleClass { InducedCycle, InducesClique, Mixed };

std::string_view to_string(CycleClass c);

struct CycleClassification {
  CycleClass kind = CycleClass::InducedCycle;
  // Set only for Mixed: a chord and a non-chord that cross on the cycle.
  Edge chord{-1, -1};
  Edge non_chord{-1, -1};
};

/// Classifies a cycle of g given as its cyclic vertex sequence. Throws
/// NotACycle unless the sequence has >= 3 distinct vertices with
/// consecutive (and last-first) pairs adjacent.
CycleClassification classify_cycle(const Graph& g, std::span<const VertexId> cycle);

/// True when the cyclic sequence visits a, b, c, d in this order (up to
/// rotation and reversal) with all four distinct.
bool crossing(std::span<const VertexId> cycle, Edge a, Edge b);

/// Every cycle of g (length >= 3) exactly once: starts at its smallest
/// vertex, second vertex smaller than the last.
std::vector<std::vector<VertexId>> enumerate_cycles(const Graph& g);

struct CactusReport {
  bool clique_cactus = true;
  std::vector<Block> blocks;     // all blocks, in decomposition order
  std::vector<Block> offending;  // blocks of kind Other

  explicit operator bool() const { return clique_cactus; }
};

/// Every block is a clique (K_2 included) or a chordless cycle.
CactusReport is_clique_cactus(const Graph& g);

/// Structural diamond-freeness test: a connected graph excludes the
/// diamond as a contraction iff it is a clique-cactus graph. Runs no
/// search. Throws DisconnectedInput.
bool excludes_diamond(const Graph& g);

enum class Constructor { Stick, Cycle, Clique };

std::string_view to_string(Constructor k);

/// Stick identifies all roots; Cycle joins consecutive roots cyclically
/// (one edge for two graphs, none for one); Clique joins all pairs of
/// roots. The result is rooted at the root of the first graph, whose
/// vertices keep labels 0..n_0-1. Throws EmptySequence.
RootedGraph compose(Constructor kind, std::span<const RootedGraph> gs);

/// One piece of a block decomposition step: a component C of g - V(b)
/// plus a new root (label 0) joined to the vertices of C adjacent to b.
struct DecPiece {
  RootedGraph graph;
  VertexSet component;   // C, in g's labels (graph labels 1..|C| follow its order)
  VertexSet attachment;  // vertices of b adjacent to C
};

/// Throws BlockWithoutRoot when b does not contain the root of g.
std::vector<DecPiece> dec_block(const RootedGraph& g, VertexSet block);

/// Union of dec_block over every block containing the root.
std::vector<DecPiece> dec(const RootedGraph& g);

/// Rebuilds g from its root block and the stick of the pieces hanging at
/// each block vertex. Throws NotCliqueCactus.
RootedGraph reconstruct(const RootedGraph& g);

/// Whether reconstruct(g) is root-preserving isomorphic to g.
bool reconstruct_check(const RootedGraph& g);

}  // namespace ctrwqo
