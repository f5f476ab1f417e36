#include "ctrwqo/antichains.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "ctrwqo/errors.hpp"
#include "ctrwqo/graph6.hpp"
#include "ctrwqo/isomorphism.hpp"
#include "ctrwqo/parallel.hpp"

namespace ctrwqo {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int arity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::K2R, "K2R", 1},      {Family::DR, "DR", 1}, {Family::STAR, "STAR", 1},
    {Family::ANTIHOLE, "ANTIHOLE", 1}, {Family::W, "W", 2}, {Family::I0, "I0", 2},
    {Family::I1, "I1", 2},
};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi;
  }
  throw std::logic_error("unknown family");
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParamOutOfRange("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(Family f) { return info(f).name; }

Family parse_family(std::string_view name) {
  for (const auto& fi : kFamilies) {
    if (fi.name == name) return fi.family;
  }
  throw ParamOutOfRange("unknown family '" + std::string(name) + "'");
}

int arity(Family f) { return info(f).arity; }

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Plain: return "plain";
    case Role::Pole: return "pole";
    case Role::Semipole: return "semipole";
    case Role::Free: return "free";
    case Role::Inner: return "inner";
  }
  return "plain";
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::AContractionOfB: return "A_contraction_of_B";
    case Relation::BContractionOfA: return "B_contraction_of_A";
    case Relation::Incomparable: return "incomparable";
    case Relation::Equal: return "equal";
    case Relation::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Below: return "below";
    case Comparison::Above: return "above";
    case Comparison::Equal: return "equal";
    case Comparison::Incomparable: return "incomparable";
    case Comparison::Exhausted: return "exhausted";
  }
  return "exhausted";
}

std::string_view to_string(IClass c) {
  switch (c) {
    case IClass::InI0: return "I0";
    case IClass::InI1: return "I1";
    case IClass::Neither: return "neither";
  }
  return "neither";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParamOutOfRange("family spec needs NAME:PARAMS, got '" + std::string(text) + "'");
  FamilySpec spec;
  spec.family = parse_family(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    spec.params.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  spec.validate();
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(ctrwqo::to_string(family));
  out += ':';
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(params[k]);
  }
  return out;
}

void FamilySpec::validate() const {
  const auto& fi = info(family);
  if (static_cast<int>(params.size()) != fi.arity) {
    throw ParamOutOfRange(std::string(fi.name) + " takes " + std::to_string(fi.arity) + " parameter(s)");
  }
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw ParamOutOfRange(to_string() + ": " + what);
  };
  switch (family) {
    case Family::K2R: need(params[0] >= 2, "r >= 2 required"); break;
    case Family::DR: need(params[0] >= 0, "r >= 0 required"); break;
    case Family::STAR: need(params[0] >= 0, "r >= 0 required"); break;
    case Family::ANTIHOLE: need(params[0] >= 6, "i >= 6 required"); break;
    case Family::W: need(params[0] >= 3 && params[1] >= 3, "p, q >= 3 required"); break;
    case Family::I0:
    case Family::I1: need(params[0] >= 3 && params[1] >= 0, "i >= 3 and q >= 0 required"); break;
  }
}

FamilySpec k2r(int r) { return {Family::K2R, {r}}; }
FamilySpec dr(int r) { return {Family::DR, {r}}; }
FamilySpec star_spec(int r) { return {Family::STAR, {r}}; }
FamilySpec antihole_spec(int i) { return {Family::ANTIHOLE, {i}}; }
FamilySpec w_spec(int p, int q) { return {Family::W, {p, q}}; }
FamilySpec i0_spec(int i, int q) { return {Family::I0, {i, q}}; }
FamilySpec i1_spec(int i, int q) { return {Family::I1, {i, q}}; }

VertexSet FamilyGraph::with_role(Role r) const {
  VertexSet out;
  for (VertexId v = 0; v < static_cast<int>(roles.size()); ++v) {
    if (roles[v] == r) out.insert(v);
  }
  return out;
}

namespace {

/// Two non-adjacent poles dominating `base`; base vertex v becomes v + 2.
FamilyGraph add_poles(const Graph& base, const std::vector<Role>& base_roles) {
  FamilyGraph out{Graph(base.order() + 2), {Role::Pole, Role::Pole}};
  for (VertexId v = 0; v < base.order(); ++v) {
    out.graph.add_edge(0, v + 2);
    out.graph.add_edge(1, v + 2);
  }
  for (auto [u, v] : base.edges()) out.graph.add_edge(u + 2, v + 2);
  out.roles.insert(out.roles.end(), base_roles.begin(), base_roles.end());
  return out;
}

/// Semipoles (adjacent or not), then `free` isolated vertices, then
/// `inner` vertices adjacent to every semipole.
FamilyGraph pole_family(int semipoles, bool semipoles_adjacent, int free, int inner) {
  const int n = semipoles + free + inner;
  Graph base(n);
  std::vector<Role> roles;
  for (int s = 0; s < semipoles; ++s) roles.push_back(Role::Semipole);
  for (int f = 0; f < free; ++f) roles.push_back(Role::Free);
  for (int k = 0; k < inner; ++k) roles.push_back(Role::Inner);
  if (semipoles_adjacent && semipoles == 2) base.add_edge(0, 1);
  for (int k = 0; k < inner; ++k) {
    for (int s = 0; s < semipoles; ++s) base.add_edge(s, semipoles + free + k);
  }
  return add_poles(base, roles);
}

}  // namespace

FamilyGraph make(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  auto plain = [](Graph g) {
    std::vector<Role> roles(static_cast<std::size_t>(g.order()), Role::Plain);
    return FamilyGraph{std::move(g), std::move(roles)};
  };
  switch (spec.family) {
    case Family::K2R: {
      FamilyGraph out = plain(complete_bipartite(2, p[0]));
      out.roles[0] = out.roles[1] = Role::Pole;
      return out;
    }
    case Family::DR: return plain(diamond_family(p[0]));
    case Family::STAR: return plain(star(p[0]));
    case Family::ANTIHOLE: return plain(antihole(p[0]));
    case Family::W: return pole_family(2, false, p[0], p[1]);
    case Family::I0: return pole_family(2, true, p[0], p[1]);
    case Family::I1: return pole_family(1, false, p[0], p[1]);
  }
  throw std::logic_error("unknown family");
}

namespace {

Relation chain(int x, int y) {
  if (x < y) return Relation::AContractionOfB;
  if (x > y) return Relation::BContractionOfA;
  return Relation::Equal;
}

Relation flip(Relation r) {
  if (r == Relation::AContractionOfB) return Relation::BContractionOfA;
  if (r == Relation::BContractionOfA) return Relation::AContractionOfB;
  return r;
}

Relation below_iff(bool below) { return below ? Relation::AContractionOfB : Relation::Incomparable; }

/// Relation for an ordered pair of family tags; Unknown when the pair is
/// only covered in the other orientation.
Relation predict_ordered(const FamilySpec& a, const FamilySpec& b) {
  const int x = a.params[0];
  const int y = b.params[0];
  switch (a.family) {
    case Family::K2R:
      // K_{2,r} versus K_{2,r'}: no model either way unless r = r'.
      if (b.family == Family::K2R) return x == y ? Relation::Equal : Relation::Incomparable;
      // K_{2,r} is a contraction of W_{p,q} iff r = p+1 (r, p, q >= 3);
      // W_{p,q} is never below K_{2,r} as it is not in D u S.
      if (b.family == Family::W && x >= 3) return below_iff(x == b.params[0] + 1);
      break;
    case Family::ANTIHOLE:
      if (b.family == Family::ANTIHOLE) return x == y ? Relation::Equal : Relation::Incomparable;
      break;
    case Family::W:
      if (b.family == Family::W) return a.params == b.params ? Relation::Equal : Relation::Incomparable;
      break;
    case Family::DR:
      if (b.family == Family::DR) return chain(x, y);
      // D_r is a contraction of K_{2,q} iff r < q; K_{2,q} has no
      // dominating vertex so it is never below D_r.
      if (b.family == Family::K2R) return below_iff(x < y);
      // Independence number 2 against >= 3, and the dominating-vertex rule.
      if (b.family == Family::ANTIHOLE && x >= 3) return Relation::Incomparable;
      break;
    case Family::STAR:
      if (b.family == Family::STAR) return chain(x, y);
      if (b.family == Family::K2R) return below_iff(x <= y - 1);
      // K_{1,r} is a contraction of D_p iff r <= p (p >= 1); D_p is not a star.
      if (b.family == Family::DR) return below_iff(x <= y);
      break;
    case Family::I0:
    case Family::I1:
      if (b.family == a.family && x == b.params[0]) return chain(a.params[1], b.params[1]);
      break;
  }
  return Relation::Unknown;
}

/// D_0 = K_2 = K_{1,1}; treat it as the star so the star laws apply.
FamilySpec normalize(const FamilySpec& s) {
  if (s.family == Family::DR && s.params[0] == 0) return star_spec(1);
  return s;
}

}  // namespace

Relation predicted_relation(const FamilySpec& a_in, const FamilySpec& b_in) {
  a_in.validate();
  b_in.validate();
  const FamilySpec a = normalize(a_in);
  const FamilySpec b = normalize(b_in);
  if (a == b) return Relation::Equal;
  const Relation forward = predict_ordered(a, b);
  if (forward != Relation::Unknown) return forward;
  return flip(predict_ordered(b, a));
}

Comparison as_comparison(Relation r) {
  switch (r) {
    case Relation::AContractionOfB: return Comparison::Below;
    case Relation::BContractionOfA: return Comparison::Above;
    case Relation::Incomparable: return Comparison::Incomparable;
    case Relation::Equal: return Comparison::Equal;
    case Relation::Unknown: break;
  }
  return Comparison::Exhausted;
}

ComparabilityMatrix comparability_matrix(std::span<const Graph> gs, const MatrixOptions& opts) {
  const int n = static_cast<int>(gs.size());
  ComparabilityMatrix m{n, std::vector<Comparison>(static_cast<std::size_t>(n) * n, Comparison::Equal), 0};
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Comparison> result(pairs.size());
  std::vector<std::uint64_t> nodes(pairs.size(), 0);
  SearchOptions so;
  so.budget = opts.budget;
  parallel_for(pairs.size(), opts.workers, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    if (is_isomorphic(gs[i], gs[j])) {
      result[k] = Comparison::Equal;
      return;
    }
    const SearchResult up = find_model(gs[i], gs[j], so);
    nodes[k] += up.nodes;
    if (up.found()) {
      result[k] = Comparison::Below;
      return;
    }
    const SearchResult down = find_model(gs[j], gs[i], so);
    nodes[k] += down.nodes;
    if (down.found()) {
      result[k] = Comparison::Above;
    } else if (up.outcome == SearchOutcome::Exhausted || down.outcome == SearchOutcome::Exhausted) {
      result[k] = Comparison::Exhausted;
    } else {
      result[k] = Comparison::Incomparable;
    }
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    m.cells[static_cast<std::size_t>(i * n + j)] = result[k];
    Comparison dual = result[k];
    if (dual == Comparison::Below) dual = Comparison::Above;
    else if (dual == Comparison::Above) dual = Comparison::Below;
    m.cells[static_cast<std::size_t>(j * n + i)] = dual;
    m.nodes += nodes[k];
  }
  return m;
}

bool contains_gem_induced_minor(const Graph& g) { return is_induced_minor(gem(), g); }

IClassification classify_I(const Graph& g, int i) {
  if (i < 3) throw ParamOutOfRange("classify_I needs i >= 3");
  const int q0 = g.order() - i - 4;
  if (q0 >= 0 && is_isomorphic(g, make(i0_spec(i, q0)).graph)) return {IClass::InI0, q0};
  const int q1 = g.order() - i - 3;
  if (q1 >= 0 && is_isomorphic(g, make(i1_spec(i, q1)).graph)) return {IClass::InI1, q1};
  return {};
}

std::vector<Graph> downset_members(const Graph& g, int max_steps) {
  std::map<CanonicalForm, Graph> seen;
  std::vector<Graph> frontier{g};
  for (int step = 0; step < max_steps && !frontier.empty(); ++step) {
    std::vector<Graph> next;
    for (const Graph& f : frontier) {
      for (Graph& c : one_step_contractions(f)) {
        auto form = canonical_form(c);
        if (seen.emplace(std::move(form), c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [form, graph] : seen) out.push_back(std::move(graph));
  return out;
}

std::vector<Graph> downset_members(const Graph& g) { return downset_members(g, g.size()); }

std::vector<Graph> inner_contractions(int i, int q) {
  const FamilyGraph w = make(w_spec(i, q));
  struct State {
    Graph graph;
    VertexId pole_a;
    VertexId pole_b;
  };
  auto key = [](const State& s) {
    std::vector<int> colors(static_cast<std::size_t>(s.graph.order()), 0);
    colors[s.pole_a] = colors[s.pole_b] = 1;
    return canonical_form(s.graph, colors);
  };
  std::set<CanonicalForm> seen;
  std::vector<Graph> out;
  std::vector<State> frontier{{w.graph, 0, 1}};
  while (!frontier.empty()) {
    std::vector<State> next;
    for (const State& s : frontier) {
      for (auto [u, v] : s.graph.edges()) {
        if (u == s.pole_a || u == s.pole_b || v == s.pole_a || v == s.pole_b) continue;
        ContractedGraph c = contract_edge_mapped(s.graph, u, v);
        State t{std::move(c.graph), c.image[s.pole_a], c.image[s.pole_b]};
        if (seen.insert(key(t)).second) {
          out.push_back(t.graph);
          next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

IntRange IntRange::parse(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.hi < r.lo) throw ParamOutOfRange("empty range '" + std::string(text) + "'");
  return r;
}

int DingReport::comparable_found() const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(),
                                        [](const auto& p) { return p.outcome == SearchOutcome::Found; }));
}

int DingReport::wrong() const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) {
    return p.outcome != SearchOutcome::Exhausted && !p.ok;
  }));
}

int DingReport::exhausted() const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(),
                                        [](const auto& p) { return p.outcome == SearchOutcome::Exhausted; }));
}

bool DingReport::evidence_clean() const {
  for (const auto& e : gem_free)
    if (!e.violations.empty()) return false;
  for (const auto& e : i_closure)
    if (!e.violations.empty()) return false;
  return true;
}

DingReport check_ding_premises(IntRange i_range, IntRange q_range, const DingOptions& opts) {
  if (i_range.lo < 3 || q_range.lo < 3 || i_range.hi < i_range.lo || q_range.hi < q_range.lo) {
    throw ParamOutOfRange("ding premises need nonempty ranges with i, q >= 3");
  }
  // Members: A_i = K_{2,i+1}, then W(i,q) for every i, q.
  struct Member {
    FamilySpec spec;
    int i;
    bool is_a;
    Graph graph;
  };
  std::vector<Member> members;
  for (int i = i_range.lo; i <= i_range.hi; ++i) members.push_back({k2r(i + 1), i, true, make(k2r(i + 1)).graph});
  for (int i = i_range.lo; i <= i_range.hi; ++i)
    for (int q = q_range.lo; q <= q_range.hi; ++q) members.push_back({w_spec(i, q), i, false, make(w_spec(i, q)).graph});

  DingReport report;
  std::vector<std::pair<std::size_t, std::size_t>> ordered;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      if (a != b) ordered.emplace_back(a, b);
  report.pairs.resize(ordered.size());
  SearchOptions so;
  so.budget = opts.budget;
  parallel_for(ordered.size(), opts.workers, [&](std::size_t k) {
    const Member& a = members[ordered[k].first];
    const Member& b = members[ordered[k].second];
    DingPairCheck& c = report.pairs[k];
    c.a = a.spec.to_string();
    c.b = b.spec.to_string();
    c.expected = a.is_a && !b.is_a && a.i == b.i;
    c.outcome = find_model(a.graph, b.graph, so).outcome;
    c.ok = c.outcome != SearchOutcome::Exhausted && (c.outcome == SearchOutcome::Found) == c.expected;
  });

  report.gem_free.resize(members.size());
  parallel_for(members.size(), opts.workers, [&](std::size_t k) {
    const Member& m = members[k];
    GemEvidence& e = report.gem_free[k];
    e.member = m.spec.to_string();
    const auto down = opts.downset_depth < 0 ? downset_members(m.graph)
                                             : downset_members(m.graph, opts.downset_depth);
    e.downset_size = static_cast<int>(down.size());
    if (contains_gem_induced_minor(m.graph)) e.violations.push_back(write_graph6(m.graph));
    for (const Graph& d : down) {
      if (contains_gem_induced_minor(d)) e.violations.push_back(write_graph6(d));
    }
  });

  std::vector<std::pair<int, int>> ws;
  for (int i = i_range.lo; i <= i_range.hi; ++i)
    for (int q = q_range.lo; q <= q_range.hi; ++q) ws.emplace_back(i, q);
  report.i_closure.resize(ws.size());
  parallel_for(ws.size(), opts.workers, [&](std::size_t k) {
    const auto [i, q] = ws[k];
    IClosureEvidence& e = report.i_closure[k];
    e.member = w_spec(i, q).to_string();
    const auto contractions = inner_contractions(i, q);
    e.contractions = static_cast<int>(contractions.size());
    for (const Graph& c : contractions) {
      if (classify_I(c, i).kind == IClass::Neither) e.violations.push_back(write_graph6(c));
    }
  });
  return report;
}

}  // namespace ctrwqo
