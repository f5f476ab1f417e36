#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctrwqo/contraction.hpp"
#include "ctrwqo/graph.hpp"

namespace ctrwqo {

/// Graph families with known comparability behaviour.
///   K2R(r)       K_{2,r}, r >= 2
///   DR(r)        D_r, r >= 0
///   STAR(r)      K_{1,r}, r >= 0
///   ANTIHOLE(i)  complement of C_i, i >= 6
///   W(p,q)       two non-adjacent dominating vertices over pK_1 + K_{2,q}, p,q >= 3
///   I0(i,q)      two non-adjacent dominating vertices over iK_1 + D_q, i >= 3, q >= 0
///   I1(i,q)      two non-adjacent dominating vertices over iK_1 + K_{1,q}, i >= 3, q >= 0
enum class Family { K2R, DR, STAR, ANTIHOLE, W, I0, I1 };

std::string_view to_string(Family f);
/// Throws ParamOutOfRange for an unknown name.
Family parse_family(std::string_view name);
/// Number of parameters the family takes.
int arity(Family f);

struct FamilySpec {
  Family family = Family::K2R;
  std::vector<int> params;

  /// Parses "K2R:4", "W:3,5", "ANTIHOLE:7", "I0:3,2". Throws
  /// ParamOutOfRange on a bad name, arity or range.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  /// Throws ParamOutOfRange.
  void validate() const;

  bool operator==(const FamilySpec&) const = default;
};

FamilySpec k2r(int r);
FamilySpec dr(int r);
FamilySpec star_spec(int r);
FamilySpec antihole_spec(int i);
FamilySpec w_spec(int p, int q);
FamilySpec i0_spec(int i, int q);
FamilySpec i1_spec(int i, int q);

/// Vertex roles on the pole-based families. `Free` marks the degree-2
/// vertices adjacent to the two poles only; `Inner` the remaining
/// non-pole, non-semipole vertices. Other families use `Plain` (K2R marks
/// its two-vertex side as poles).
enum class Role { Plain, Pole, Semipole, Free, Inner };

std::string_view to_string(Role r);

struct FamilyGraph {
  Graph graph;
  std::vector<Role> roles;

  VertexSet with_role(Role r) const;
};

/// Builds the family member. Layout for W/I0/I1: poles 0,1, then
/// semipoles, then free vertices, then inner vertices.
FamilyGraph make(const FamilySpec& spec);

enum class Relation { AContractionOfB, BContractionOfA, Incomparable, Equal, Unknown };

std::string_view to_string(Relation r);

/// The comparability that the antichain lemmas force between two members,
/// or Unknown where they say nothing.
Relation predicted_relation(const FamilySpec& a, const FamilySpec& b);

/// Cell (i, j): Below means gs[i] is a proper contraction of gs[j].
enum class Comparison { Below, Above, Equal, Incomparable, Exhausted };

std::string_view to_string(Comparison c);

struct ComparabilityMatrix {
  int size = 0;
  std::vector<Comparison> cells;
  std::uint64_t nodes = 0;

  Comparison at(int i, int j) const { return cells[static_cast<std::size_t>(i * size + j)]; }
};

struct MatrixOptions {
  int workers = 1;
  std::uint64_t budget = 0;  // per search, 0 = unlimited
};

/// Pairwise contraction comparison of connected graphs.
ComparabilityMatrix comparability_matrix(std::span<const Graph> gs, const MatrixOptions& opts = {});

/// Maps a relation between a and b onto the matching matrix cell.
Comparison as_comparison(Relation r);

bool contains_gem_induced_minor(const Graph& g);

enum class IClass { InI0, InI1, Neither };

std::string_view to_string(IClass c);

struct IClassification {
  IClass kind = IClass::Neither;
  int q = -1;

  bool operator==(const IClassification&) const = default;
};

/// Detects g = I0(i,q) or I1(i,q). I0(i,0) and I1(i,1) coincide; the tie
/// is reported as I0.
IClassification classify_I(const Graph& g, int i);

/// Proper contractions of g reachable in at most max_steps edge
/// contractions, canonically labelled, one per isomorphism class, sorted.
std::vector<Graph> downset_members(const Graph& g, int max_steps);
/// Full strict down-set.
std::vector<Graph> downset_members(const Graph& g);

/// Graphs reachable from make(W(i,q)) by contracting at least one inner
/// edge (an edge not incident with a pole), one per isomorphism class that
/// respects the poles.
std::vector<Graph> inner_contractions(int i, int q);

struct IntRange {
  int lo = 0;
  int hi = -1;

  bool contains(int x) const { return lo <= x && x <= hi; }
  /// "3..5" or "4".
  static IntRange parse(std::string_view text);
};

struct DingOptions {
  int workers = 1;
  std::uint64_t budget = 0;
  /// Contraction depth for the gem-freeness evidence; -1 = full down-set.
  int downset_depth = -1;
};

struct DingPairCheck {
  std::string a;
  std::string b;
  bool expected = false;  // a is a contraction of b
  SearchOutcome outcome = SearchOutcome::NotFound;
  bool ok = false;
};

struct GemEvidence {
  std::string member;
  int downset_size = 0;
  std::vector<std::string> violations;  // graph6 of members containing the gem
};

struct IClosureEvidence {
  std::string member;
  int contractions = 0;
  std::vector<std::string> violations;  // graph6 of contractions outside I0 u I1
};

struct DingReport {
  std::vector<DingPairCheck> pairs;
  std::vector<GemEvidence> gem_free;
  std::vector<IClosureEvidence> i_closure;

  int comparable_found() const;
  int wrong() const;
  int exhausted() const;
  bool premise_iii_holds() const { return wrong() == 0 && exhausted() == 0; }
  bool evidence_clean() const;
};

/// Premise (iii) exactly by search over {K_{2,i+1}} u {W(i,q)}, plus
/// bounded evidence for fundamentality (gem-freeness of down-sets and
/// closure of inner contractions under I0 u I1).
DingReport check_ding_premises(IntRange i_range, IntRange q_range, const DingOptions& opts = {});

}  // namespace ctrwqo
