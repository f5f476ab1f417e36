#pragma once

#include <string_view>
#include <vector>

#include "ctrwqo/graph.hpp"

namespace ctrwqo {

/// Shape of the subgraph induced by a block. A K_2 block is `Edge`, a
/// triangle is `Clique`, and `Cycle` means a chordless cycle on >= 4
/// vertices. Isolated vertices form singleton `Clique` blocks.
enum class BlockKind { Clique, Cycle, Edge, Other };

std::string_view to_string(BlockKind kind);

struct Block {
  VertexSet vertices;
  BlockKind kind = BlockKind::Other;

  bool operator==(const Block&) const = default;
};

struct BlockDecomposition {
  VertexSet cutvertices;
  std::vector<Block> blocks;  // ordered by vertex set (smallest member first)
};

/// Classifies the subgraph induced by `vertices`.
BlockKind classify_block(const Graph& g, VertexSet vertices);

/// Maximal 2-connected pieces, bridges and isolated vertices, per
/// component.
BlockDecomposition block_decomposition(const Graph& g);

}  // namespace ctrwqo
