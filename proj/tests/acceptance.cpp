// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Brute-force oracles from oracles.hpp are used wherever they are
// feasible.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "ctrwqo/antichains.hpp"
#include "ctrwqo/contraction.hpp"
#include "ctrwqo/enumerate.hpp"
#include "ctrwqo/graph6.hpp"
#include "ctrwqo/isomorphism.hpp"
#include "ctrwqo/parallel.hpp"
#include "ctrwqo/sequence.hpp"
#include "ctrwqo/structure.hpp"
#include "oracles.hpp"

using namespace ctrwqo;

namespace {

const int kWorkers = std::max(1u, std::thread::hardware_concurrency());

struct Result {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;  // keep the first failure
    ok = false;
  }
};

// 1. Block recognizer agrees with the diamond search on all 996 graphs.
Result diamond_recognizer() {
  Result r;
  const auto corpus = connected_corpus(7);
  if (corpus.size() != 996) r.fail("corpus has " + std::to_string(corpus.size()) + " graphs");
  std::vector<char> bad(corpus.size(), 0);
  parallel_for(corpus.size(), kWorkers, [&](std::size_t k) {
    bad[k] = excludes_diamond(corpus[k]) == find_model(diamond_family(2), corpus[k]).found();
  });
  for (std::size_t k = 0; k < corpus.size(); ++k)
    if (bad[k]) r.fail("disagreement on " + write_graph6(corpus[k]));
  r.detail = r.ok ? "996 graphs" : r.detail;
  return r;
}

// 2. Search vs closure under single edge contractions.
Result search_vs_closure() {
  Result r;
  const auto corpus = connected_corpus(6);
  std::vector<std::set<CanonicalForm>> closure(corpus.size());
  parallel_for(corpus.size(), kWorkers, [&](std::size_t k) {
    std::vector<Graph> frontier{corpus[k]};
    closure[k].insert(canonical_form(corpus[k]));
    while (!frontier.empty()) {
      std::vector<Graph> next;
      for (const Graph& f : frontier)
        for (Graph& c : one_step_contractions(f))
          if (closure[k].insert(canonical_form(c)).second) next.push_back(std::move(c));
      frontier = std::move(next);
    }
  });
  std::vector<CanonicalForm> forms;
  for (const Graph& h : corpus) forms.push_back(canonical_form(h));
  std::vector<std::string> bad(corpus.size());
  std::vector<long> counts(corpus.size(), 0);
  parallel_for(corpus.size(), kWorkers, [&](std::size_t gi) {
    const Graph& g = corpus[gi];
    for (std::size_t hi = 0; hi < corpus.size(); ++hi) {
      const Graph& h = corpus[hi];
      if (h.order() > g.order()) continue;
      ++counts[gi];
      const SearchResult s = find_model(h, g);
      const bool expected = closure[gi].count(forms[hi]) > 0;
      if (s.outcome == SearchOutcome::Exhausted || s.found() != expected ||
          (s.found() && !verify_model(h, g, *s.model).ok)) {
        if (bad[gi].empty()) bad[gi] = write_graph6(h) + " in " + write_graph6(g);
      }
    }
  });
  long total = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    total += counts[k];
    if (!bad[k].empty()) r.fail(bad[k]);
  }
  if (r.ok) r.detail = std::to_string(total) + " pairs";
  return r;
}

// 3. K_{2,r} against W(p,q).
Result kpp1_table() {
  Result r;
  int entries = 0;
  for (int rr = 3; rr <= 6; ++rr)
    for (int p = 3; p <= 5; ++p)
      for (int q = 3; q <= 5; ++q) {
        ++entries;
        const SearchResult s = find_model(make(k2r(rr)).graph, make(w_spec(p, q)).graph);
        std::ostringstream what;
        what << "K2R:" << rr << " in W:" << p << "," << q;
        if (s.outcome == SearchOutcome::Exhausted) r.fail(what.str() + " exhausted");
        else if (s.found() != (rr == p + 1)) r.fail(what.str() + " wrong");
      }
  if (r.ok) r.detail = std::to_string(entries) + " entries";
  return r;
}

// 4. W members against each other.
Result w_comparisons() {
  Result r;
  std::vector<FamilySpec> specs;
  for (int p = 3; p <= 5; ++p)
    for (int q = 3; q <= 5; ++q) specs.push_back(w_spec(p, q));
  auto small = [](const FamilySpec& s) { return s.params[0] <= 4 && s.params[1] <= 4; };
  int exact = 0, decided = 0, exhausted = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < specs.size(); ++a)
    for (std::size_t b = 0; b < specs.size(); ++b) pairs.emplace_back(a, b);
  std::vector<SearchOutcome> outcomes(pairs.size());
  parallel_for(pairs.size(), kWorkers, [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    SearchOptions so;
    so.budget = small(specs[a]) && small(specs[b]) ? 0 : 2'000'000;
    outcomes[k] = find_model(make(specs[a]).graph, make(specs[b]).graph, so).outcome;
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    const bool expected = a == b;
    const std::string what = specs[a].to_string() + " in " + specs[b].to_string();
    if (small(specs[a]) && small(specs[b])) {
      ++exact;
      if (outcomes[k] == SearchOutcome::Exhausted) r.fail(what + " exhausted on the exact grid");
    }
    if (outcomes[k] == SearchOutcome::Exhausted) {
      ++exhausted;
      continue;
    }
    ++decided;
    if ((outcomes[k] == SearchOutcome::Found) != expected) r.fail(what + " wrong");
  }
  if (exact != 16) r.fail("exact grid has " + std::to_string(exact) + " pairs");
  if (r.ok) {
    r.detail = "16 exact; " + std::to_string(decided) + "/81 decided, " + std::to_string(exhausted) + " exhausted";
  }
  return r;
}

// 5. Antichains.
Result antichains() {
  Result r;
  for (const auto& [family, lo, hi] : {std::tuple{Family::K2R, 2, 6}, std::tuple{Family::ANTIHOLE, 6, 9}}) {
    std::vector<Graph> gs;
    for (int x = lo; x <= hi; ++x) gs.push_back(make(FamilySpec{family, {x}}).graph);
    const auto m = comparability_matrix(gs, {kWorkers, 0});
    for (int i = 0; i < m.size; ++i)
      for (int j = 0; j < m.size; ++j)
        if (i != j && m.at(i, j) != Comparison::Incomparable)
          r.fail(std::string(to_string(family)) + " " + std::to_string(lo + i) + " vs " + std::to_string(lo + j) +
                 ": " + std::string(to_string(m.at(i, j))));
  }
  if (r.ok) r.detail = "K2R 2..6, ANTIHOLE 6..9";
  return r;
}

// 6. Constructors preserve sequence embeddings.
struct Rooted {
  oracle::Matrix m;
  int root;
};

Rooted random_contraction(const Rooted& x, std::mt19937_64& rng) {
  Rooted out = x;
  const int steps = std::uniform_int_distribution<int>(0, oracle::edge_count(x.m))(rng);
  for (int s = 0; s < steps; ++s) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < oracle::order(out.m); ++u)
      for (int v = u + 1; v < oracle::order(out.m); ++v)
        if (out.m[u][v]) edges.emplace_back(u, v);
    if (edges.empty()) break;
    const auto [u, v] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    out.m = oracle::contract(out.m, u, v, &out.root);
  }
  return out;
}

Result constructors() {
  Result r;
  std::vector<Graph> pool;
  for (const Graph& g : connected_corpus(5))
    if (is_clique_cactus(g)) pool.push_back(g);
  std::mt19937_64 rng(20240601);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  // Rooted order on the small elements, memoised oracle closures.
  std::map<std::pair<std::vector<std::vector<char>>, int>, std::set<std::uint64_t>> memo;
  auto leq = [&](const Rooted& a, const Rooted& b) {
    auto key = std::make_pair(b.m, b.root);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, oracle::rooted_closure(b.m, b.root)).first;
    return it->second.count(oracle::canonical_code(a.m, a.root)) > 0;
  };
  std::vector<std::pair<std::vector<Rooted>, std::vector<Rooted>>> trials;
  int rejected = 0;
  while (trials.size() < 500) {
    std::vector<Rooted> g, h;
    const std::size_t len = 1 + pick(4);
    for (std::size_t k = 0; k < len; ++k) {
      const Graph& x = pool[pick(pool.size())];
      g.push_back({oracle::to_matrix(x), static_cast<int>(pick(x.order()))});
    }
    // Mostly contractions of a subsequence of g; sometimes an unrelated element.
    for (const Rooted& x : g) {
      if (pick(3) == 0) continue;
      if (pick(6) == 0) {
        const Graph& y = pool[pick(pool.size())];
        h.push_back({oracle::to_matrix(y), static_cast<int>(pick(y.order()))});
      } else {
        h.push_back(random_contraction(x, rng));
      }
    }
    if (h.empty()) h.push_back(random_contraction(g[pick(g.size())], rng));
    if (!oracle::exhaustive_embeds(h, g, leq)) {
      ++rejected;
      continue;
    }
    trials.emplace_back(std::move(h), std::move(g));
  }
  auto lift = [](const std::vector<Rooted>& xs) {
    std::vector<RootedGraph> out;
    for (const Rooted& x : xs) out.emplace_back(oracle::from_matrix(x.m), x.root);
    return out;
  };
  std::vector<std::string> bad(trials.size());
  parallel_for(trials.size(), kWorkers, [&](std::size_t k) {
    const auto h = lift(trials[k].first), g = lift(trials[k].second);
    for (Constructor kind : {Constructor::Stick, Constructor::Cycle, Constructor::Clique}) {
      const RootedGraph ch = compose(kind, h), cg = compose(kind, g);
      const SearchResult s = find_rooted_model(ch, cg);
      if (!s.found() || !verify_model(ch.graph, cg.graph, *s.model).ok || !s.model->parts[ch.root].contains(cg.root)) {
        bad[k] = std::string(to_string(kind)) + " trial " + std::to_string(k);
        return;
      }
    }
  });
  for (const auto& b : bad)
    if (!b.empty()) r.fail(b);
  if (r.ok) r.detail = "500 pairs x 3 constructors (" + std::to_string(rejected) + " non-embedding draws skipped)";
  return r;
}

// 7. Reconstruction from the root block.
Result reconstruction() {
  Result r;
  const auto corpus = connected_corpus(7);
  std::vector<int> checked(corpus.size(), 0);
  std::vector<std::string> bad(corpus.size());
  parallel_for(corpus.size(), kWorkers, [&](std::size_t k) {
    const Graph& g = corpus[k];
    if (!is_clique_cactus(g)) return;
    for (VertexId v = 0; v < g.order(); ++v) {
      ++checked[k];
      if (!reconstruct_check(RootedGraph(g, v)) && bad[k].empty()) bad[k] = write_graph6(g) + "@" + std::to_string(v);
    }
  });
  int total = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    total += checked[k];
    if (!bad[k].empty()) r.fail(bad[k]);
  }
  if (r.ok) r.detail = std::to_string(total) + " rooted graphs";
  return r;
}

// 8. P4, gem and I-closure.
Result structure_of_w() {
  Result r;
  std::vector<FamilySpec> specs;
  for (int p = 3; p <= 5; ++p)
    for (int q = 3; q <= 5; ++q) specs.push_back(w_spec(p, q));
  for (int x = 3; x <= 6; ++x) specs.push_back(k2r(x));
  std::vector<std::string> bad(specs.size());
  parallel_for(specs.size(), kWorkers, [&](std::size_t k) {
    const Graph g = make(specs[k]).graph;
    if (oracle::has_induced_p4(oracle::to_matrix(g))) bad[k] = specs[k].to_string() + " has an induced P4";
    else if (contains_gem_induced_minor(g)) bad[k] = specs[k].to_string() + " has a gem induced minor";
  });
  for (const auto& b : bad)
    if (!b.empty()) r.fail(b);
  int inner = 0;
  for (int q : {3, 4}) {
    for (const Graph& c : inner_contractions(3, q)) {
      ++inner;
      if (classify_I(c, 3).kind == IClass::Neither) r.fail("inner contraction of W:3," + std::to_string(q) + " " + write_graph6(c) + " outside I");
    }
  }
  if (inner == 0) r.fail("no inner contractions");
  if (r.ok) r.detail = std::to_string(specs.size()) + " graphs; " + std::to_string(inner) + " inner contractions";
  return r;
}

// 9. Premises for W(3..5, 3..5).
Result ding() {
  Result r;
  DingOptions opts;
  opts.workers = kWorkers;
  const DingReport d = check_ding_premises({3, 5}, {3, 5}, opts);
  if (!d.premise_iii_holds()) r.fail("premise (iii): " + std::to_string(d.wrong()) + " wrong, " + std::to_string(d.exhausted()) + " exhausted");
  std::size_t violations = 0;
  for (const auto& e : d.gem_free) violations += e.violations.size();
  for (const auto& e : d.i_closure) violations += e.violations.size();
  if (violations != 0 || !d.evidence_clean()) r.fail(std::to_string(violations) + " evidence violations");
  if (r.ok) r.detail = std::to_string(d.pairs.size()) + " pairs, " + std::to_string(d.comparable_found()) + " comparable";
  return r;
}

// 10. Property suites.
Result properties() {
  Result r;
  // graph6 round trip.
  std::size_t g6 = 0;
  for (const Graph& g : connected_corpus(8)) {
    ++g6;
    const std::string s = write_graph6(g);
    if (s != oracle::encode_graph6(oracle::to_matrix(g)) || !(parse_graph6(s) == g)) r.fail("graph6 " + s);
  }
  // Each contraction removes one vertex and at least one edge.
  long contractions = 0;
  for (const Graph& g : connected_corpus(7)) {
    for (auto [u, v] : g.edges()) {
      ++contractions;
      const Graph c = contract_edge(g, u, v);
      if (c.order() != g.order() - 1 || c.size() >= g.size()) r.fail("edge count of " + write_graph6(g));
    }
  }
  // Contraction and induced minor agree when both graphs have a dominating vertex.
  std::vector<Graph> dominated;
  for (const Graph& g : connected_corpus(6)) {
    for (VertexId v = 0; v < g.order(); ++v) {
      if (g.degree(v) == g.order() - 1) {
        dominated.push_back(g);
        break;
      }
    }
  }
  std::vector<std::string> bad(dominated.size());
  parallel_for(dominated.size(), kWorkers, [&](std::size_t k) {
    for (const Graph& h : dominated) {
      if (h.order() > dominated[k].order()) continue;
      if (is_contraction(h, dominated[k]) != is_induced_minor(h, dominated[k])) {
        bad[k] = write_graph6(h) + " vs " + write_graph6(dominated[k]);
        return;
      }
    }
  });
  for (const auto& b : bad)
    if (!b.empty()) r.fail("imctr " + b);
  // Greedy embedding vs exhaustive, all sequences of length <= 4 over 5 elements.
  std::vector<std::vector<int>> seqs{{}};
  for (std::size_t k = 0; k < seqs.size(); ++k) {
    if (seqs[k].size() == 4) continue;
    for (int e = 0; e < 5; ++e) {
      auto s = seqs[k];
      s.push_back(e);
      seqs.push_back(std::move(s));
    }
  }
  constexpr int kOrders = 1000;
  std::vector<char> order_bad(kOrders, 0);
  parallel_for(kOrders, kWorkers, [&](std::size_t t) {
    std::mt19937_64 rng(7919 * (t + 1));
    bool leq[5][5];
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) leq[a][b] = a == b || std::bernoulli_distribution(0.3)(rng);
    for (int m = 0; m < 5; ++m)
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) leq[a][b] = leq[a][b] || (leq[a][m] && leq[m][b]);
    const auto cmp = [&](int a, int b) { return leq[a][b]; };
    for (const auto& x : seqs) {
      for (const auto& y : seqs) {
        if (sequence_embeds(std::span<const int>(x), std::span<const int>(y), cmp) != oracle::exhaustive_embeds(x, y, cmp)) {
          order_bad[t] = 1;
          return;
        }
      }
    }
  });
  for (int t = 0; t < kOrders; ++t)
    if (order_bad[t]) r.fail("sequence embedding, quasi-order " + std::to_string(t));
  if (r.ok) {
    r.detail = std::to_string(g6) + " graph6, " + std::to_string(contractions) + " contractions, " +
               std::to_string(dominated.size()) + " dominated hosts, " + std::to_string(kOrders) + " quasi-orders";
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"diamond recognizer vs search, n <= 7", diamond_recognizer},
      {"search vs contraction closure, n <= 6", search_vs_closure},
      {"K2R(r) in W(p,q) iff r = p+1", kpp1_table},
      {"W(p,q) comparisons", w_comparisons},
      {"K2R and ANTIHOLE antichains", antichains},
      {"constructors preserve sequence embeddings", constructors},
      {"reconstruction of rooted clique-cacti, n <= 7", reconstruction},
      {"no P4 / gem; I-closure", structure_of_w},
      {"W(3..5,3..5) premises", ding},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !r.ok;
    std::printf("%s %zu %s -- %s (%.1fs)\n", r.ok ? "PASS" : "FAIL", k + 1, criteria[k].first, r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
