#include "ctrwqo/contraction.hpp"

#include <algorithm>
#include <set>

#include "ctrwqo/errors.hpp"
#include "ctrwqo/isomorphism.hpp"

namespace ctrwqo {

std::string_view to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::NotFound: return "not_found";
    case SearchOutcome::Exhausted: return "exhausted";
  }
  return "not_found";
}

namespace {

ModelCheck fail(ModelCondition c, std::vector<VertexId> witness, std::string message) {
  return ModelCheck{false, c, std::move(witness), std::move(message)};
}

ModelCheck verify(const Graph& h, const Graph& g, const ContractionModel& m, bool cover) {
  if (static_cast<int>(m.parts.size()) != h.order()) {
    throw KeyMismatch("model has " + std::to_string(m.parts.size()) + " parts for " +
                      std::to_string(h.order()) + " H-vertices");
  }
  for (VertexSet p : m.parts) {
    if (!p.subset_of(g.vertices())) throw KeyMismatch("model part names a vertex outside G");
  }
  for (VertexId v = 0; v < h.order(); ++v) {
    const VertexSet p = m.parts[v];
    if (p.empty() || !is_connected(g, p)) {
      return fail(ModelCondition::Connected, {v},
                  "part of H-vertex " + std::to_string(v) + " is empty or disconnected");
    }
  }
  VertexSet seen;
  for (VertexId v = 0; v < h.order(); ++v) {
    const VertexSet overlap = seen & m.parts[v];
    if (!overlap.empty()) {
      return fail(ModelCondition::Partition, overlap.to_vector(),
                  "parts overlap on G-vertex " + std::to_string(overlap.front()));
    }
    seen |= m.parts[v];
  }
  if (cover && seen != g.vertices()) {
    const VertexSet missing = g.vertices() - seen;
    return fail(ModelCondition::Partition, missing.to_vector(),
                "G-vertex " + std::to_string(missing.front()) + " is in no part");
  }
  for (VertexId u = 0; u < h.order(); ++u) {
    const VertexSet reach = g.neighbors(m.parts[u]);
    for (VertexId v = u + 1; v < h.order(); ++v) {
      if (h.adjacent(u, v) != reach.intersects(m.parts[v])) {
        return fail(ModelCondition::Adjacency, {u, v},
                    "H-vertices " + std::to_string(u) + "," + std::to_string(v) +
                        (h.adjacent(u, v) ? " are adjacent but their parts are not"
                                          : " are not adjacent but their parts are"));
      }
    }
  }
  return {};
}

enum class Mode { Contraction, Rooted, InducedMinor };

/// Backtracking over partitions of V(G) into connected parts. The lowest
/// undecided G-vertex seeds the next part; the branch chooses which unused
/// H-vertex owns that part and which connected set it is. In induced-minor
/// mode the seed may instead be deleted.
class ModelSearch {
 public:
  ModelSearch(const Graph& h, const Graph& g, Mode mode, const SearchOptions& opts,
              VertexId root_h = -1, VertexId root_g = -1)
      : h_(h), g_(g), mode_(mode), opts_(opts), root_h_(root_h), root_g_(root_g) {
    const int nh = h.order();
    order_.resize(static_cast<std::size_t>(nh));
    for (VertexId v = 0; v < nh; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexId a, VertexId b) { return h.degree(a) > h.degree(b); });
    twin_prev_.assign(static_cast<std::size_t>(nh), -1);
    for (VertexId v = 0; v < nh; ++v) {
      if (v == root_h_) continue;
      for (VertexId u = v - 1; u >= 0; --u) {
        if (u == root_h_) continue;
        const VertexSet both{u, v};
        if (h.neighbors(u) - both == h.neighbors(v) - both) {
          twin_prev_[v] = u;
          break;
        }
      }
    }
    part_.assign(static_cast<std::size_t>(nh), VertexSet{});
    part_nbr_.assign(static_cast<std::size_t>(nh), VertexSet{});
    free_ = g.vertices();
  }

  SearchResult run() {
    SearchResult r;
    const bool ok = place();
    r.nodes = nodes_;
    if (ok) {
      r.outcome = SearchOutcome::Found;
      r.model = ContractionModel{part_};
    } else {
      r.outcome = exhausted_ ? SearchOutcome::Exhausted : SearchOutcome::NotFound;
    }
    return r;
  }

 private:
  bool induced() const { return mode_ == Mode::InducedMinor; }
  bool rooted() const { return mode_ == Mode::Rooted; }

  bool tick() {
    ++nodes_;
    if (opts_.budget != 0 && nodes_ > opts_.budget) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  bool place() {
    const VertexSet unassigned = h_.vertices() - assigned_;
    const int remaining = unassigned.size();
    if (remaining == 0) return induced() || free_.empty();
    if (free_.size() < remaining) return false;

    const VertexId x = free_.front();
    VertexSet cand = unassigned;
    for (VertexId u : assigned_) {
      if (part_nbr_[u].contains(x)) cand &= h_.neighbors(u);
    }
    if (rooted() && x == root_g_) cand &= VertexSet::single(root_h_);
    const int max_size = free_.size() - (remaining - 1);

    for (VertexId v : order_) {
      if (!cand.contains(v)) continue;
      if (twin_prev_[v] >= 0 && !assigned_.contains(twin_prev_[v])) continue;
      VertexSet forbidden;
      for (VertexId u : assigned_) {
        if (!h_.adjacent(u, v)) forbidden |= part_nbr_[u];
      }
      VertexSet allowed = free_ - forbidden;
      if (rooted() && v != root_h_) allowed.erase(root_g_);
      if (!allowed.contains(x)) continue;
      const bool stop = grow(VertexSet::single(x), VertexSet{}, allowed, max_size, [&](VertexSet s) {
        return try_part(v, s);
      });
      if (stop) return true;
      if (exhausted_) return false;
    }

    if (induced() && free_.size() - 1 >= remaining) {
      if (!tick()) return false;
      free_.erase(x);
      deleted_.insert(x);
      if (feasible() && place()) return true;
      deleted_.erase(x);
      free_.insert(x);
    }
    return false;
  }

  /// Enumerates each connected S with seed ⊆ S ⊆ allowed, |S| <= max_size,
  /// exactly once; stops when `visit` returns true.
  template <typename Visit>
  bool grow(VertexSet s, VertexSet excluded, VertexSet allowed, int max_size, Visit&& visit) {
    if (visit(s)) return true;
    if (exhausted_ || s.size() >= max_size) return false;
    const VertexSet frontier = (g_.neighbors(s) & allowed) - excluded;
    VertexSet skip = excluded;
    for (VertexId c : frontier) {
      VertexSet next = s;
      next.insert(c);
      if (grow(next, skip, allowed, max_size, visit)) return true;
      if (exhausted_) return false;
      skip.insert(c);
    }
    return false;
  }

  bool try_part(VertexId v, VertexSet s) {
    for (VertexId u : assigned_) {
      if (h_.adjacent(u, v) && !part_nbr_[u].intersects(s)) return false;
    }
    if (rooted() && v == root_h_ && !s.contains(root_g_)) return false;
    const VertexSet nbr = g_.neighbors(s) - deleted_;
    if (opts_.degree_rule && nbr.size() < h_.degree(v)) return false;
    if (!tick()) return false;
    part_[v] = s;
    part_nbr_[v] = nbr;
    assigned_.insert(v);
    free_ -= s;
    if (feasible() && place()) return true;
    free_ |= s;
    assigned_.erase(v);
    part_[v] = VertexSet{};
    part_nbr_[v] = VertexSet{};
    return false;
  }

  bool feasible() const {
    const VertexSet unassigned = h_.vertices() - assigned_;
    const int remaining = unassigned.size();
    if (free_.size() < remaining) return false;

    for (VertexId u : assigned_) {
      const VertexSet need = h_.neighbors(u) & unassigned;
      const VertexSet avail = part_nbr_[u] & free_;
      if (avail.size() < need.size()) return false;
      if (!induced() && need.empty() && !avail.empty()) return false;
    }

    if (!induced()) {
      for (VertexId w : free_) {
        VertexSet cand = unassigned;
        for (VertexId u : assigned_) {
          if (part_nbr_[u].contains(w)) cand &= h_.neighbors(u);
        }
        if (cand.empty()) return false;
      }
      if (static_cast<int>(connected_components(g_, free_).size()) > remaining) return false;
    }

    // Each unused H-vertex needs a connected region of undecided vertices
    // touching the parts of all its placed neighbours and avoiding the
    // parts of its placed non-neighbours.
    for (VertexId v : unassigned) {
      VertexSet allowed = free_;
      VertexSet nbr_parts;
      for (VertexId u : assigned_) {
        if (h_.adjacent(u, v)) {
          nbr_parts.insert(u);
        } else {
          allowed -= part_nbr_[u];
        }
      }
      if (rooted() && v != root_h_) allowed.erase(root_g_);
      if (allowed.empty()) return false;
      bool ok = false;
      for (VertexSet comp : connected_components(g_, allowed)) {
        if (rooted() && v == root_h_ && !comp.contains(root_g_)) continue;
        bool touches_all = true;
        for (VertexId u : nbr_parts) {
          if (!part_nbr_[u].intersects(comp)) {
            touches_all = false;
            break;
          }
        }
        if (touches_all) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  const Graph& h_;
  const Graph& g_;
  Mode mode_;
  SearchOptions opts_;
  VertexId root_h_;
  VertexId root_g_;

  std::vector<VertexId> order_;
  std::vector<VertexId> twin_prev_;
  std::vector<VertexSet> part_;
  std::vector<VertexSet> part_nbr_;
  VertexSet assigned_;
  VertexSet free_;
  VertexSet deleted_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

void require_connected(const Graph& g, const char* which) {
  if (g.order() == 0 || !is_connected(g)) {
    throw DisconnectedInput(std::string(which) + " must be a nonempty connected graph");
  }
}

/// Necessary conditions checked before any search.
bool passes_global_bounds(const Graph& h, const Graph& g, const SearchOptions& opts) {
  if (h.order() > g.order() || h.size() > g.size()) return false;
  if (opts.dominating_rule && has_dominating_vertex(g) && !has_dominating_vertex(h)) return false;
  return true;
}

}  // namespace

ModelCheck verify_model(const Graph& h, const Graph& g, const ContractionModel& m) {
  return verify(h, g, m, true);
}

ModelCheck verify_partial_model(const Graph& h, const Graph& g, const ContractionModel& m) {
  return verify(h, g, m, false);
}

SearchResult find_model(const Graph& h, const Graph& g, const SearchOptions& opts) {
  require_connected(h, "H");
  require_connected(g, "G");
  if (!passes_global_bounds(h, g, opts)) return {};
  return ModelSearch(h, g, Mode::Contraction, opts).run();
}

SearchResult find_rooted_model(const RootedGraph& h, const RootedGraph& g, const SearchOptions& opts) {
  require_connected(h.graph, "H");
  require_connected(g.graph, "G");
  if (h.root < 0 || h.root >= h.graph.order() || g.root < 0 || g.root >= g.graph.order()) {
    throw std::invalid_argument("root outside graph");
  }
  // The dominating-vertex rule is unrooted; keep only the size bounds.
  if (h.graph.order() > g.graph.order() || h.graph.size() > g.graph.size()) return {};
  return ModelSearch(h.graph, g.graph, Mode::Rooted, opts, h.root, g.root).run();
}

SearchResult find_induced_minor_model(const Graph& h, const Graph& g, const SearchOptions& opts) {
  if (h.order() > g.order()) return {};
  return ModelSearch(h, g, Mode::InducedMinor, opts).run();
}

bool is_contraction(const Graph& h, const Graph& g) { return find_model(h, g).found(); }

bool is_rooted_contraction(const RootedGraph& h, const RootedGraph& g) {
  return find_rooted_model(h, g).found();
}

bool is_induced_minor(const Graph& h, const Graph& g) {
  return find_induced_minor_model(h, g).found();
}

std::vector<Graph> one_step_contractions(const Graph& g) {
  std::set<CanonicalForm> seen;
  std::vector<Graph> out;
  for (auto [u, v] : g.edges()) {
    Graph c = contract_edge(g, u, v);
    auto lab = canonical_labeling(c);
    if (seen.insert(lab.form).second) out.push_back(relabel(c, lab.labeling));
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

}  // namespace ctrwqo
