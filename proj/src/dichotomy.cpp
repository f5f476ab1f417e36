#include "ctrwqo/dichotomy.hpp"

#include "ctrwqo/errors.hpp"

namespace ctrwqo {

std::string_view to_string(Verdict v) { return v == Verdict::WQO ? "WQO" : "NOT_WQO"; }

namespace {

/// Members of the sample, or nothing if any of them contains h.
std::optional<std::vector<WitnessMember>> sample(const Graph& h, const std::vector<FamilySpec>& specs) {
  std::vector<WitnessMember> out;
  for (const FamilySpec& s : specs) {
    Graph g = make(s).graph;
    if (is_contraction(h, g)) return std::nullopt;
    out.push_back({s, std::move(g)});
  }
  return out;
}

}  // namespace

DichotomyVerdict dichotomy_verdict(const Graph& h) {
  if (h.order() > kMaxDichotomyOrder) {
    throw TooLarge("dichotomy takes at most " + std::to_string(kMaxDichotomyOrder) + " vertices");
  }
  if (h.order() == 0 || !is_connected(h)) throw DisconnectedInput("dichotomy needs a connected graph");

  DichotomyVerdict v;
  SearchResult in_diamond = find_model(h, diamond_family(2));
  if (in_diamond.found()) {
    v.verdict = Verdict::WQO;
    v.justification = "contraction of the diamond";
    v.model = std::move(in_diamond.model);
    return v;
  }

  v.verdict = Verdict::NOT_WQO;
  std::vector<FamilySpec> k2rs, antiholes;
  for (int r = 2; r <= 5; ++r) k2rs.push_back(k2r(r));
  for (int i = 6; i <= 8; ++i) antiholes.push_back(antihole_spec(i));
  std::optional<std::vector<WitnessMember>> found = sample(h, k2rs);
  Family family = Family::K2R;
  if (!found) {
    found = sample(h, antiholes);
    family = Family::ANTIHOLE;
  }
  if (!found) {
    v.justification = "by Theorem main";
    v.note = "no sampled witness found: every sampled K2R and ANTIHOLE member contains h";
    return v;
  }
  // Re-check before anything is reported.
  for (const WitnessMember& m : *found) {
    if (is_contraction(h, m.graph)) throw std::logic_error("witness re-check failed for " + m.spec.to_string());
  }
  v.justification = "sampled antichain members exclude h";
  v.witness_family = family;
  v.witnesses = std::move(*found);
  return v;
}

}  // namespace ctrwqo
