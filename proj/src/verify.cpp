#include "ctrwqo/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <utility>

#include "ctrwqo/antichains.hpp"
#include "ctrwqo/contraction.hpp"
#include "ctrwqo/enumerate.hpp"
#include "ctrwqo/errors.hpp"
#include "ctrwqo/graph6.hpp"
#include "ctrwqo/isomorphism.hpp"
#include "ctrwqo/parallel.hpp"
#include "ctrwqo/sequence.hpp"
#include "ctrwqo/structure.hpp"

namespace ctrwqo {

std::string_view to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass: return "pass";
    case ItemStatus::Fail: return "fail";
    case ItemStatus::Exhausted: return "exhausted";
  }
  return "fail";
}

int LemmaReport::count(ItemStatus s) const {
  return static_cast<int>(std::count_if(items.begin(), items.end(), [s](const LemmaItem& i) { return i.status == s; }));
}

const std::vector<std::string_view>& lemma_names() {
  static const std::vector<std::string_view> names{"dec",     "cycles", "2c",          "kpp1",   "comp",
                                                   "ctr",     "dpgraph", "cycleclique", "recons", "imctr"};
  return names;
}

namespace {

using Check = std::function<LemmaItem(std::size_t)>;

std::vector<LemmaItem> run(std::size_t count, int workers, const Check& check) {
  std::vector<LemmaItem> items(count);
  parallel_for(count, workers, [&](std::size_t k) { items[k] = check(k); });
  return items;
}

LemmaItem named(std::string item) {
  LemmaItem out;
  out.item = std::move(item);
  return out;
}

LemmaItem expect(std::string item, SearchOutcome outcome, bool expected, std::string_view what) {
  LemmaItem out = named(std::move(item));
  if (outcome == SearchOutcome::Exhausted) {
    out.status = ItemStatus::Exhausted;
  } else if ((outcome == SearchOutcome::Found) != expected) {
    out.status = ItemStatus::Fail;
    out.detail = std::string(what) + (expected ? ": expected a model, none found" : ": unexpected model found");
  }
  return out;
}

/// Search-based diamond exclusion, independent of the block structure.
SearchOutcome diamond_search(const Graph& g, std::uint64_t budget) {
  SearchOptions so;
  so.budget = budget;
  return find_model(diamond_family(2), g, so).outcome;
}

std::vector<LemmaItem> verify_dec(const std::vector<Graph>& corpus, const VerifyOptions& opts) {
  return run(corpus.size(), opts.workers, [&](std::size_t k) {
    const Graph& g = corpus[k];
    const SearchOutcome o = diamond_search(g, opts.budget);
    return expect(write_graph6(g), o, !excludes_diamond(g), "excludes_diamond disagrees with search");
  });
}

std::vector<LemmaItem> verify_cycles(const std::vector<Graph>& corpus, const VerifyOptions& opts) {
  std::vector<Graph> free;
  for (const Graph& g : corpus) {
    if (diamond_search(g, 0) == SearchOutcome::NotFound) free.push_back(g);
  }
  return run(free.size(), opts.workers, [&](std::size_t k) {
    const Graph& g = free[k];
    LemmaItem out = named(write_graph6(g));
    for (const auto& c : enumerate_cycles(g)) {
      if (classify_cycle(g, c).kind == CycleClass::Mixed) {
        out.status = ItemStatus::Fail;
        out.detail = "mixed cycle of length " + std::to_string(c.size());
        break;
      }
    }
    return out;
  });
}

bool two_connected(const Graph& g) {
  if (g.order() < 3) return false;
  const auto d = block_decomposition(g);
  return d.blocks.size() == 1 && d.blocks[0].vertices == g.vertices();
}

std::vector<LemmaItem> verify_2c(const std::vector<Graph>& corpus, const VerifyOptions& opts) {
  std::vector<Graph> targets;
  for (const Graph& g : corpus) {
    if (two_connected(g) && diamond_search(g, 0) == SearchOutcome::NotFound) targets.push_back(g);
  }
  return run(targets.size(), opts.workers, [&](std::size_t k) {
    const Graph& g = targets[k];
    LemmaItem out = named(write_graph6(g));
    if (!is_isomorphic(g, complete(g.order())) && !is_isomorphic(g, cycle(g.order()))) {
      out.status = ItemStatus::Fail;
      out.detail = "2-connected, diamond-free, but neither complete nor a cycle";
    }
    return out;
  });
}

std::vector<LemmaItem> verify_kpp1(const VerifyOptions& opts) {
  std::vector<std::pair<FamilySpec, FamilySpec>> pairs;
  for (int r = 3; r <= 6; ++r)
    for (int p = 3; p <= 5; ++p)
      for (int q = 3; q <= 5; ++q) pairs.emplace_back(k2r(r), w_spec(p, q));
  return run(pairs.size(), opts.workers, [&](std::size_t k) {
    const auto& [a, b] = pairs[k];
    SearchOptions so;
    so.budget = opts.budget;
    const auto o = find_model(make(a).graph, make(b).graph, so).outcome;
    return expect(a.to_string() + " " + b.to_string(), o, a.params[0] == b.params[0] + 1, "K2R in W");
  });
}

std::vector<LemmaItem> verify_comp(const VerifyOptions& opts) {
  // The {3,4} grid first, then the remaining pairs of the {3,4,5} grid.
  std::vector<FamilySpec> small, large;
  for (int p = 3; p <= 5; ++p)
    for (int q = 3; q <= 5; ++q) (p <= 4 && q <= 4 ? small : large).push_back(w_spec(p, q));
  std::vector<std::pair<FamilySpec, FamilySpec>> pairs;
  for (const auto& a : small)
    for (const auto& b : small) pairs.emplace_back(a, b);
  std::vector<FamilySpec> all = small;
  all.insert(all.end(), large.begin(), large.end());
  for (const auto& a : all)
    for (const auto& b : all) {
      const bool both_small = std::find(small.begin(), small.end(), a) != small.end() &&
                              std::find(small.begin(), small.end(), b) != small.end();
      if (!both_small) pairs.emplace_back(a, b);
    }
  return run(pairs.size(), opts.workers, [&](std::size_t k) {
    const auto& [a, b] = pairs[k];
    SearchOptions so;
    so.budget = opts.budget;
    const auto o = find_model(make(a).graph, make(b).graph, so).outcome;
    return expect(a.to_string() + " " + b.to_string(), o, a == b, "W in W");
  });
}

std::vector<LemmaItem> verify_ctr(const std::vector<Graph>& corpus, int max_n, const VerifyOptions& opts) {
  std::vector<LemmaItem> items = run(corpus.size(), opts.workers, [&](std::size_t k) {
    const Graph& g = corpus[k];
    LemmaItem out = named(write_graph6(g));
    for (auto [u, v] : g.edges()) {
      const Graph c = contract_edge(g, u, v);
      if (c.order() != g.order() - 1 || c.size() >= g.size()) {
        out.status = ItemStatus::Fail;
        out.detail = "contracting " + std::to_string(u) + "-" + std::to_string(v) + " does not shrink the graph";
        break;
      }
    }
    return out;
  });
  // One step below D_p: exactly D_{p-1} and K_{1,p}.
  for (int p = 1; p + 2 <= max_n; ++p) {
    std::set<CanonicalForm> expected{canonical_form(diamond_family(p - 1)), canonical_form(star(p))};
    std::set<CanonicalForm> got;
    for (const Graph& c : one_step_contractions(diamond_family(p))) got.insert(canonical_form(c));
    LemmaItem item = named(dr(p).to_string());
    if (got != expected) {
      item.status = ItemStatus::Fail;
      item.detail = "one-step contractions differ from {D_{p-1}, K_{1,p}}";
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<LemmaItem> verify_dpgraph(int max_n, const VerifyOptions& opts) {
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p + 2 <= max_n; ++p)
    for (int q = 2; q + 2 <= max_n; ++q) pairs.emplace_back(p, q);
  return run(pairs.size(), opts.workers, [&](std::size_t k) {
    const auto [p, q] = pairs[k];
    SearchOptions so;
    so.budget = opts.budget;
    const Graph d = diamond_family(p), kq = complete_bipartite(2, q);
    const std::string name = dr(p).to_string() + " " + k2r(q).to_string();
    LemmaItem up = expect(name, find_model(d, kq, so).outcome, p < q, "D_p in K_{2,q}");
    if (up.status != ItemStatus::Pass) return up;
    return expect(name, find_model(kq, d, so).outcome, false, "K_{2,q} in D_p");
  });
}

std::vector<LemmaItem> verify_recons(const std::vector<Graph>& corpus, const VerifyOptions& opts) {
  std::vector<RootedGraph> targets;
  for (const Graph& g : corpus) {
    if (!is_clique_cactus(g)) continue;
    for (VertexId r = 0; r < g.order(); ++r) targets.emplace_back(g, r);
  }
  return run(targets.size(), opts.workers, [&](std::size_t k) {
    const RootedGraph& g = targets[k];
    LemmaItem out = named(write_graph6(g.graph) + "@" + std::to_string(g.root));
    if (!reconstruct_check(g)) {
      out.status = ItemStatus::Fail;
      out.detail = "reconstruction is not root-isomorphic";
    }
    return out;
  });
}

std::vector<LemmaItem> verify_imctr(const std::vector<Graph>& corpus, const VerifyOptions& opts) {
  std::vector<const Graph*> dom;
  for (const Graph& g : corpus) {
    if (has_dominating_vertex(g)) dom.push_back(&g);
  }
  std::vector<std::pair<const Graph*, const Graph*>> pairs;
  for (const Graph* g : dom)
    for (const Graph* h : dom)
      if (h->order() <= g->order()) pairs.emplace_back(h, g);
  return run(pairs.size(), opts.workers, [&](std::size_t k) {
    const auto [h, g] = pairs[k];
    SearchOptions so;
    so.budget = opts.budget;
    const auto c = find_model(*h, *g, so).outcome;
    const auto m = find_induced_minor_model(*h, *g, so).outcome;
    LemmaItem out = named(write_graph6(*h) + " " + write_graph6(*g));
    if (c == SearchOutcome::Exhausted || m == SearchOutcome::Exhausted) {
      out.status = ItemStatus::Exhausted;
    } else if (c != m) {
      out.status = ItemStatus::Fail;
      out.detail = "induced minor and contraction disagree";
    }
    return out;
  });
}

// Sequences for constructor monotonicity: G is random, H is a random
// subsequence of G with each element replaced by a random rooted
// contraction of it, so H embeds in G by construction.
struct SequencePair {
  std::vector<RootedGraph> h;
  std::vector<RootedGraph> g;
};

RootedGraph random_rooted_contraction(const RootedGraph& g, std::mt19937_64& rng) {
  Graph cur = g.graph;
  VertexId root = g.root;
  const int steps = std::uniform_int_distribution<int>(0, cur.order() - 1)(rng);
  for (int s = 0; s < steps; ++s) {
    const auto edges = cur.edges();
    if (edges.empty()) break;
    const auto [u, v] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    ContractedGraph c = contract_edge_mapped(cur, u, v);
    root = c.image[root];
    cur = std::move(c.graph);
  }
  return RootedGraph(std::move(cur), root);
}

std::string describe(const std::vector<RootedGraph>& seq) {
  std::string out = "[";
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k > 0) out += ",";
    out += write_graph6(seq[k].graph) + "@" + std::to_string(seq[k].root);
  }
  return out + "]";
}

std::vector<LemmaItem> verify_cycleclique(int max_n, const VerifyOptions& opts) {
  std::vector<Graph> pool;
  for (const Graph& g : connected_corpus(max_n)) {
    if (is_clique_cactus(g)) pool.push_back(g);
  }
  std::mt19937_64 rng(opts.seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::vector<SequencePair> trials;
  while (static_cast<int>(trials.size()) < opts.trials) {
    SequencePair t;
    const std::size_t len = 1 + pick(4);
    for (std::size_t k = 0; k < len; ++k) {
      const Graph& g = pool[pick(pool.size())];
      t.g.emplace_back(g, static_cast<VertexId>(pick(static_cast<std::size_t>(g.order()))));
    }
    for (const RootedGraph& x : t.g) {
      if (t.h.empty() || pick(3) != 0) t.h.push_back(random_rooted_contraction(x, rng));
    }
    const auto leq = [](const RootedGraph& a, const RootedGraph& b) { return is_rooted_contraction(a, b); };
    if (sequence_embeds(std::span<const RootedGraph>(t.h), std::span<const RootedGraph>(t.g), leq)) {
      trials.push_back(std::move(t));
    }
  }
  return run(trials.size(), opts.workers, [&](std::size_t k) {
    const SequencePair& t = trials[k];
    LemmaItem out = named(describe(t.h) + " " + describe(t.g));
    SearchOptions so;
    so.budget = opts.budget;
    for (Constructor kind : {Constructor::Stick, Constructor::Cycle, Constructor::Clique}) {
      const auto o = find_rooted_model(compose(kind, t.h), compose(kind, t.g), so).outcome;
      if (o == SearchOutcome::Exhausted) {
        out.status = ItemStatus::Exhausted;
      } else if (o == SearchOutcome::NotFound) {
        out.status = ItemStatus::Fail;
        out.detail = std::string(to_string(kind)) + " composition not rooted-contained";
        break;
      }
    }
    return out;
  });
}

}  // namespace

LemmaReport verify_lemma(std::string_view name, int max_n, const VerifyOptions& opts) {
  if (max_n < 1 || max_n > kMaxEnumerationOrder) {
    throw ParamOutOfRange("--max-n must be in 1.." + std::to_string(kMaxEnumerationOrder));
  }
  LemmaReport r{std::string(name), max_n, {}};
  if (name == "kpp1") {
    r.items = verify_kpp1(opts);
  } else if (name == "comp") {
    r.items = verify_comp(opts);
  } else if (name == "dpgraph") {
    r.items = verify_dpgraph(max_n, opts);
  } else if (name == "cycleclique") {
    r.items = verify_cycleclique(max_n, opts);
  } else {
    const std::vector<Graph> corpus = connected_corpus(max_n);
    if (name == "dec") r.items = verify_dec(corpus, opts);
    else if (name == "cycles") r.items = verify_cycles(corpus, opts);
    else if (name == "2c") r.items = verify_2c(corpus, opts);
    else if (name == "ctr") r.items = verify_ctr(corpus, max_n, opts);
    else if (name == "recons") r.items = verify_recons(corpus, opts);
    else if (name == "imctr") r.items = verify_imctr(corpus, opts);
    else throw ParamOutOfRange("unknown lemma '" + std::string(name) + "'");
  }
  return r;
}

}  // namespace ctrwqo
