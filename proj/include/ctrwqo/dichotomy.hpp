#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctrwqo/antichains.hpp"
#include "ctrwqo/contraction.hpp"
#include "ctrwqo/graph.hpp"

namespace ctrwqo {

inline constexpr int kMaxDichotomyOrder = 14;

enum class Verdict { WQO, NOT_WQO };

std::string_view to_string(Verdict v);

struct WitnessMember {
  FamilySpec spec;
  Graph graph;
};

struct DichotomyVerdict {
  Verdict verdict = Verdict::NOT_WQO;
  std::string justification;
  // WQO: a model of h in the diamond.
  std::optional<ContractionModel> model;
  // NOT_WQO: sampled members, each re-checked to exclude h.
  std::optional<Family> witness_family;
  std::vector<WitnessMember> witnesses;
  std::string note;
};

/// WQO iff h is a contraction of D_2. Otherwise a sample of K_{2,2..5}
/// (or, failing that, antiholes 6..8) that all exclude h. Throws
/// DisconnectedInput and TooLarge (more than 14 vertices).
DichotomyVerdict dichotomy_verdict(const Graph& h);

}  // namespace ctrwqo
