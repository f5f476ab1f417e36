#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctrwqo/graph.hpp"

namespace ctrwqo {

/// Map from H-vertices (by index) to sets of G-vertices. In a contraction
/// model the parts are connected, partition V(G), and mirror H's
/// adjacency exactly.
struct ContractionModel {
  std::vector<VertexSet> parts;

  bool operator==(const ContractionModel&) const = default;
};

enum class ModelCondition { None, Connected, Partition, Adjacency };

struct ModelCheck {
  bool ok = true;
  ModelCondition failed = ModelCondition::None;
  std::vector<VertexId> witness;  // offending H-vertices (or G-vertices for Partition)
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Checks the three contraction-model conditions. Throws KeyMismatch when
/// the model does not have one part per H-vertex or names vertices outside
/// G.
ModelCheck verify_model(const Graph& h, const Graph& g, const ContractionModel& m);

/// As verify_model, but the parts need not cover V(G) (induced minors).
ModelCheck verify_partial_model(const Graph& h, const Graph& g, const ContractionModel& m);

enum class SearchOutcome { Found, NotFound, Exhausted };

std::string_view to_string(SearchOutcome o);

struct SearchOptions {
  /// Maximum number of search nodes; 0 means unlimited.
  std::uint64_t budget = 0;
  /// deg_H(v) <= subset_degree(G, part(v)).
  bool degree_rule = true;
  /// No model of a graph without a dominating vertex in one with one.
  bool dominating_rule = true;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::NotFound;
  std::optional<ContractionModel> model;
  std::uint64_t nodes = 0;

  bool found() const { return outcome == SearchOutcome::Found; }
};

/// Exhaustive search for a contraction model of h in g. Both graphs must
/// be connected (DisconnectedInput otherwise).
SearchResult find_model(const Graph& h, const Graph& g, const SearchOptions& opts = {});

/// Model whose root part contains g's root.
SearchResult find_rooted_model(const RootedGraph& h, const RootedGraph& g,
                               const SearchOptions& opts = {});

/// Partial model search (parts need not cover G).
SearchResult find_induced_minor_model(const Graph& h, const Graph& g,
                                      const SearchOptions& opts = {});

/// Unbounded decisions.
bool is_contraction(const Graph& h, const Graph& g);
bool is_rooted_contraction(const RootedGraph& h, const RootedGraph& g);
bool is_induced_minor(const Graph& h, const Graph& g);

/// { contract_edge(g, e) : e in E(g) } up to isomorphism, canonically
/// labelled and sorted.
std::vector<Graph> one_step_contractions(const Graph& g);

}  // namespace ctrwqo
