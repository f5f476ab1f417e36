#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ctrwqo/graph.hpp"

namespace ctrwqo {

/// Label-invariant code of a (vertex-coloured) graph. Two graphs have equal
/// codes iff they are isomorphic by a colour-preserving bijection.
struct CanonicalForm {
  int order = 0;
  std::vector<int> colors;            // sorted colour multiset
  std::vector<std::uint64_t> rows;    // adjacency rows under the canonical labelling

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<VertexId> labeling;  // vertex -> canonical position
};

/// Canonical labelling by colour refinement and individualisation.
/// `colors` (optional) gives an initial vertex colouring that the
/// labelling must respect; an empty span means a uniform colouring.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});

/// The graph relabelled by its canonical labelling.
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Isomorphism mapping root to root.
bool is_isomorphic(const RootedGraph& g, const RootedGraph& h);

/// Hash for CanonicalForm, for unordered containers.
struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

}  // namespace ctrwqo
