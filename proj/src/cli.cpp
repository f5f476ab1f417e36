#include "ctrwqo/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ctrwqo/antichains.hpp"
#include "ctrwqo/blocks.hpp"
#include "ctrwqo/contraction.hpp"
#include "ctrwqo/dichotomy.hpp"
#include "ctrwqo/enumerate.hpp"
#include "ctrwqo/errors.hpp"
#include "ctrwqo/graph6.hpp"
#include "ctrwqo/parallel.hpp"
#include "ctrwqo/structure.hpp"
#include "ctrwqo/verify.hpp"

namespace ctrwqo {

namespace {

using json = nlohmann::json;

class InputError : public Error {
 public:
  using Error::Error;
};

struct Loaded {
  std::string label;  // the text it came from
  Graph graph;
};

Loaded parse_one(const std::string& text) {
  if (text.find(':') != std::string::npos) return {text, make(FamilySpec::parse(text)).graph};
  return {text, parse_graph6(text)};
}

/// A graph6 string, a FamilySpec string, or a file of either, one per line.
std::vector<Loaded> load(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return {parse_one(arg)};
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read '" + arg + "'");
  std::vector<Loaded> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    line = first == std::string::npos ? "" : line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_one(line));
  }
  return out;
}

Graph load_single(const std::string& arg) {
  auto gs = load(arg);
  if (gs.size() != 1) throw InputError("'" + arg + "' must name exactly one graph, found " + std::to_string(gs.size()));
  return std::move(gs[0].graph);
}

RootedGraph load_rooted(const std::string& arg) {
  const auto at = arg.rfind('@');
  const std::string digits = at == std::string::npos ? "" : arg.substr(at + 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputError("rooted graph must be written GRAPH@ROOT, got '" + arg + "'");
  }
  return RootedGraph(load_single(arg.substr(0, at)), std::stoi(digits));
}

json vertex_list(VertexSet s) { return s.to_vector(); }

json model_json(const std::optional<ContractionModel>& m) {
  if (!m) return nullptr;
  json parts = json::array();
  for (VertexSet p : m->parts) parts.push_back(vertex_list(p));
  return parts;
}

int outcome_code(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return kExitTrue;
    case SearchOutcome::NotFound: return kExitFalse;
    case SearchOutcome::Exhausted: return kExitExhausted;
  }
  return kExitExhausted;
}

json search_json(const SearchResult& r) {
  json j;
  j["outcome"] = to_string(r.outcome);
  j["model"] = model_json(r.model);
  j["nodes"] = r.nodes;
  return j;
}

json decided(SearchOutcome o) {
  if (o == SearchOutcome::Exhausted) return nullptr;
  return o == SearchOutcome::Found;
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const MalformedGraph6*>(&e)) return "malformed_graph6";
  if (dynamic_cast<const TooLarge*>(&e)) return "too_large";
  if (dynamic_cast<const NotAnEdge*>(&e)) return "not_an_edge";
  if (dynamic_cast<const OutOfRange*>(&e)) return "out_of_range";
  if (dynamic_cast<const KeyMismatch*>(&e)) return "key_mismatch";
  if (dynamic_cast<const DisconnectedInput*>(&e)) return "disconnected";
  if (dynamic_cast<const NotACycle*>(&e)) return "not_a_cycle";
  if (dynamic_cast<const EmptySequence*>(&e)) return "empty_sequence";
  if (dynamic_cast<const BlockWithoutRoot*>(&e)) return "block_without_root";
  if (dynamic_cast<const NotCliqueCactus*>(&e)) return "not_clique_cactus";
  if (dynamic_cast<const ParamOutOfRange*>(&e)) return "param_out_of_range";
  return "input_error";
}

struct Report {
  json doc;
  int code = kExitTrue;
};

struct Globals {
  std::uint64_t budget = 0;
  int workers = 1;
  std::string json_path;
};

Report cmd_check(const Globals& gl, const std::string& h_arg, const std::string& g_arg) {
  const Graph h = load_single(h_arg), g = load_single(g_arg);
  SearchOptions so;
  so.budget = gl.budget;
  const SearchResult r = find_model(h, g, so);
  Report rep{search_json(r), outcome_code(r.outcome)};
  rep.doc["command"] = "check";
  rep.doc["h"] = write_graph6(h);
  rep.doc["g"] = write_graph6(g);
  rep.doc["contraction"] = decided(r.outcome);
  return rep;
}

Report cmd_check_rooted(const Globals& gl, const std::string& h_arg, const std::string& g_arg) {
  const RootedGraph h = load_rooted(h_arg), g = load_rooted(g_arg);
  SearchOptions so;
  so.budget = gl.budget;
  const SearchResult r = find_rooted_model(h, g, so);
  Report rep{search_json(r), outcome_code(r.outcome)};
  rep.doc["command"] = "check-rooted";
  rep.doc["h"] = {{"graph6", write_graph6(h.graph)}, {"root", h.root}};
  rep.doc["g"] = {{"graph6", write_graph6(g.graph)}, {"root", g.root}};
  rep.doc["rooted_contraction"] = decided(r.outcome);
  return rep;
}

json block_json(const Block& b) { return {{"vertices", vertex_list(b.vertices)}, {"kind", to_string(b.kind)}}; }

Report cmd_recognize(const std::string& g_arg) {
  const Graph g = load_single(g_arg);
  const bool excludes = excludes_diamond(g);  // rejects disconnected input
  const CactusReport report = is_clique_cactus(g);
  Report rep;
  rep.doc["command"] = "recognize";
  rep.doc["graph"] = write_graph6(g);
  rep.doc["clique_cactus"] = report.clique_cactus;
  rep.doc["excludes_diamond"] = excludes;
  rep.doc["blocks"] = json::array();
  for (const Block& b : report.blocks) rep.doc["blocks"].push_back(block_json(b));
  rep.doc["offending"] = json::array();
  for (const Block& b : report.offending) rep.doc["offending"].push_back(block_json(b));
  rep.doc["cutvertices"] = vertex_list(block_decomposition(g).cutvertices);
  rep.code = excludes ? kExitTrue : kExitFalse;
  return rep;
}

Report cmd_dichotomy(const std::string& h_arg) {
  const Graph h = load_single(h_arg);
  const DichotomyVerdict v = dichotomy_verdict(h);
  Report rep;
  rep.doc["command"] = "dichotomy";
  rep.doc["h"] = write_graph6(h);
  rep.doc["verdict"] = to_string(v.verdict);
  rep.doc["justification"] = v.justification;
  rep.doc["model_in_diamond"] = model_json(v.model);
  rep.doc["witness_family"] = v.witness_family ? json(to_string(*v.witness_family)) : json(nullptr);
  rep.doc["witnesses"] = json::array();
  for (const WitnessMember& m : v.witnesses) {
    rep.doc["witnesses"].push_back({{"spec", m.spec.to_string()}, {"graph6", write_graph6(m.graph)}, {"excludes_h", true}});
  }
  if (!v.note.empty()) rep.doc["note"] = v.note;
  return rep;
}

std::vector<FamilySpec> family_members(const std::string& family, const std::string& range) {
  const Family f = parse_family(family);
  std::vector<FamilySpec> out;
  if (arity(f) == 1) {
    const IntRange r = IntRange::parse(range);
    for (int x = r.lo; x <= r.hi; ++x) out.push_back({f, {x}});
  } else {
    const auto comma = range.find(',');
    const IntRange a = IntRange::parse(range.substr(0, comma));
    const IntRange b = comma == std::string::npos ? a : IntRange::parse(range.substr(comma + 1));
    for (int x = a.lo; x <= a.hi; ++x)
      for (int y = b.lo; y <= b.hi; ++y) out.push_back({f, {x, y}});
  }
  for (const FamilySpec& s : out) s.validate();
  return out;
}

json matrix_json(const ComparabilityMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size; ++i) {
    json row = json::array();
    for (int j = 0; j < m.size; ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Report cmd_antichain(const Globals& gl, const std::string& family, const std::string& range) {
  const auto specs = family_members(family, range);
  std::vector<Graph> gs;
  for (const FamilySpec& s : specs) gs.push_back(make(s).graph);
  const ComparabilityMatrix m = comparability_matrix(gs, {gl.workers, gl.budget});
  Report rep;
  rep.doc["command"] = "antichain verify";
  rep.doc["family"] = family;
  rep.doc["range"] = range;
  rep.doc["members"] = json::array();
  for (std::size_t k = 0; k < specs.size(); ++k) {
    rep.doc["members"].push_back({{"spec", specs[k].to_string()}, {"graph6", write_graph6(gs[k])}});
  }
  rep.doc["matrix"] = matrix_json(m);
  rep.doc["nodes"] = m.nodes;
  json comparable = json::array(), mismatches = json::array();
  bool exhausted = false;
  for (int i = 0; i < m.size; ++i) {
    for (int j = 0; j < m.size; ++j) {
      if (i == j) continue;
      const Comparison c = m.at(i, j);
      if (c == Comparison::Exhausted) exhausted = true;
      if (i < j && c != Comparison::Incomparable && c != Comparison::Exhausted) {
        comparable.push_back({{"a", specs[i].to_string()}, {"b", specs[j].to_string()}, {"relation", to_string(c)}});
      }
      const Relation p = predicted_relation(specs[i], specs[j]);
      if (i < j && p != Relation::Unknown && c != Comparison::Exhausted && as_comparison(p) != c) {
        mismatches.push_back({{"a", specs[i].to_string()},
                              {"b", specs[j].to_string()},
                              {"predicted", to_string(p)},
                              {"computed", to_string(c)}});
      }
    }
  }
  const bool antichain = comparable.empty() && !exhausted;
  rep.doc["antichain"] = antichain;
  rep.doc["comparable_pairs"] = std::move(comparable);
  rep.doc["prediction_mismatches"] = std::move(mismatches);
  rep.doc["exhausted"] = exhausted;
  rep.code = antichain ? kExitTrue : (rep.doc["comparable_pairs"].empty() ? kExitExhausted : kExitFalse);
  return rep;
}

Report cmd_ding(const Globals& gl, const std::string& i_text, const std::string& q_text, int depth) {
  DingOptions opts;
  opts.workers = gl.workers;
  opts.budget = gl.budget;
  opts.downset_depth = depth;
  const DingReport r = check_ding_premises(IntRange::parse(i_text), IntRange::parse(q_text), opts);
  Report rep;
  rep.doc["command"] = "ding-premises";
  rep.doc["i"] = i_text;
  rep.doc["q"] = q_text;
  json pairs = json::array();
  for (const DingPairCheck& p : r.pairs) {
    pairs.push_back({{"a", p.a}, {"b", p.b}, {"expected", p.expected}, {"outcome", to_string(p.outcome)}, {"ok", p.ok}});
  }
  rep.doc["premise_iii"] = {{"holds", r.premise_iii_holds()},
                            {"comparable", r.comparable_found()},
                            {"wrong", r.wrong()},
                            {"exhausted", r.exhausted()},
                            {"pairs", std::move(pairs)}};
  json gem = json::array(), closure = json::array();
  for (const GemEvidence& e : r.gem_free) {
    gem.push_back({{"member", e.member}, {"downset_size", e.downset_size}, {"violations", e.violations}});
  }
  for (const IClosureEvidence& e : r.i_closure) {
    closure.push_back({{"member", e.member}, {"contractions", e.contractions}, {"violations", e.violations}});
  }
  rep.doc["bounded_evidence"] = {{"label", "bounded evidence"},
                                 {"downset_depth", depth < 0 ? json("full") : json(depth)},
                                 {"gem_free", std::move(gem)},
                                 {"i_closure", std::move(closure)},
                                 {"clean", r.evidence_clean()}};
  if (r.wrong() > 0 || !r.evidence_clean()) rep.code = kExitFalse;
  else if (r.exhausted() > 0) rep.code = kExitExhausted;
  return rep;
}

Report cmd_enumerate(const Globals& gl, int n, const std::string& filter) {
  const auto& all = enumerate_connected(n);
  std::vector<char> keep(all.size(), 1);
  if (filter == "clique-cactus") {
    for (std::size_t k = 0; k < all.size(); ++k) keep[k] = is_clique_cactus(all[k]).clique_cactus;
  } else if (filter == "diamond-free") {
    // By search, independently of the block structure.
    parallel_for(all.size(), gl.workers, [&](std::size_t k) { keep[k] = !is_contraction(diamond_family(2), all[k]); });
  }
  Report rep;
  rep.doc["command"] = "enumerate";
  rep.doc["n"] = n;
  rep.doc["filter"] = filter.empty() ? json(nullptr) : json(filter);
  json graphs = json::array();
  for (std::size_t k = 0; k < all.size(); ++k)
    if (keep[k]) graphs.push_back(write_graph6(all[k]));
  rep.doc["count"] = graphs.size();
  rep.doc["graphs"] = std::move(graphs);
  return rep;
}

Report cmd_matrix(const Globals& gl, const std::string& file) {
  const auto loaded = load(file);
  std::vector<Graph> gs;
  for (const auto& l : loaded) gs.push_back(l.graph);
  const ComparabilityMatrix m = comparability_matrix(gs, {gl.workers, gl.budget});
  Report rep;
  rep.doc["command"] = "matrix";
  rep.doc["inputs"] = json::array();
  for (const auto& l : loaded) rep.doc["inputs"].push_back({{"input", l.label}, {"graph6", write_graph6(l.graph)}});
  rep.doc["matrix"] = matrix_json(m);
  rep.doc["nodes"] = m.nodes;
  if (std::find(m.cells.begin(), m.cells.end(), Comparison::Exhausted) != m.cells.end()) rep.code = kExitExhausted;
  return rep;
}

Report cmd_verify(const Globals& gl, const std::string& lemma, int max_n, int trials, std::uint64_t seed) {
  VerifyOptions opts;
  opts.workers = gl.workers;
  opts.budget = gl.budget;
  opts.trials = trials;
  opts.seed = seed;
  const LemmaReport r = verify_lemma(lemma, max_n, opts);
  Report rep;
  rep.doc["command"] = "verify-lemma";
  rep.doc["lemma"] = r.lemma;
  rep.doc["max_n"] = r.max_n;
  rep.doc["checked"] = r.items.size();
  rep.doc["failures"] = r.count(ItemStatus::Fail);
  rep.doc["exhausted"] = r.count(ItemStatus::Exhausted);
  rep.doc["passed"] = r.passed();
  json items = json::array();
  for (const LemmaItem& i : r.items) {
    json j{{"item", i.item}, {"status", to_string(i.status)}};
    if (!i.detail.empty()) j["detail"] = i.detail;
    items.push_back(std::move(j));
  }
  rep.doc["items"] = std::move(items);
  if (r.count(ItemStatus::Fail) > 0) rep.code = kExitFalse;
  else if (r.count(ItemStatus::Exhausted) > 0) rep.code = kExitExhausted;
  return rep;
}

int emit(const json& doc, const Globals& gl, std::ostream& out, std::ostream& err) {
  const std::string text = doc.dump(2);
  out << text << '\n';
  if (!gl.json_path.empty()) {
    std::ofstream f(gl.json_path);
    if (!f || !(f << text << '\n')) {
      err << "ctrwqo: cannot write " << gl.json_path << '\n';
      return kExitInputError;
    }
  }
  return kExitTrue;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contraction-order toolkit: containment search, diamond-free recognition, antichains.", "ctrwqo"};
  app.require_subcommand(1);
  Globals gl;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--budget", gl.budget, "Search node budget per query (0 = unlimited)");
    sub->add_option("--workers", gl.workers, "Worker threads")->check(CLI::Range(1, 1024));
    sub->add_option("--json", gl.json_path, "Also write the JSON report to this path");
  };

  std::string a1, a2;
  std::function<Report()> action;

  auto* check = app.add_subcommand("check", "Is H a contraction of G?");
  check->add_option("H", a1)->required();
  check->add_option("G", a2)->required();
  check->callback([&] { action = [&] { return cmd_check(gl, a1, a2); }; });

  auto* rooted = app.add_subcommand("check-rooted", "Rooted containment, H@r in G@s");
  rooted->add_option("H", a1)->required();
  rooted->add_option("G", a2)->required();
  rooted->callback([&] { action = [&] { return cmd_check_rooted(gl, a1, a2); }; });

  auto* recognize = app.add_subcommand("recognize", "Clique-cactus / diamond-free recognition");
  recognize->add_option("G", a1)->required();
  recognize->callback([&] { action = [&] { return cmd_recognize(a1); }; });

  auto* dichotomy = app.add_subcommand("dichotomy", "WQO verdict for the class excluding H");
  dichotomy->add_option("H", a1)->required();
  dichotomy->callback([&] { action = [&] { return cmd_dichotomy(a1); }; });

  auto* antichain = app.add_subcommand("antichain", "Antichain families");
  antichain->require_subcommand(1);
  auto* verify = antichain->add_subcommand("verify", "Pairwise comparability of FAMILY over RANGE");
  verify->add_option("FAMILY", a1, "K2R, DR, STAR, ANTIHOLE, W, I0 or I1")->required();
  verify->add_option("RANGE", a2, "LO..HI, or LO..HI,LO..HI for two-parameter families")->required();
  verify->callback([&] { action = [&] { return cmd_antichain(gl, a1, a2); }; });

  int depth = -1;
  auto* ding = app.add_subcommand("ding-premises", "Premise checks for W families");
  ding->add_option("--i", a1, "Range of i")->required();
  ding->add_option("--q", a2, "Range of q")->required();
  ding->add_option("--downset-depth", depth, "Contraction depth of the gem evidence (-1 = full)");
  ding->callback([&] { action = [&] { return cmd_ding(gl, a1, a2, depth); }; });

  int n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs on n vertices");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--filter", a1)->check(CLI::IsMember({"clique-cactus", "diamond-free"}));
  enumerate->callback([&] { action = [&] { return cmd_enumerate(gl, n, a1); }; });

  auto* matrix = app.add_subcommand("matrix", "Comparability matrix of the graphs in FILE");
  matrix->add_option("FILE", a1)->required();
  matrix->callback([&] { action = [&] { return cmd_matrix(gl, a1); }; });

  int max_n = 6, trials = 500;
  std::uint64_t seed = 1;
  auto* lemma = app.add_subcommand("verify-lemma", "Corpus check of one lemma");
  std::vector<std::string> names;
  for (auto name : lemma_names()) names.emplace_back(name);
  lemma->add_option("LEMMA", a1)->required()->check(CLI::IsMember(names));
  lemma->add_option("--max-n", max_n, "Largest corpus order (1..8)");
  lemma->add_option("--trials", trials, "Random trials (cycleclique)");
  lemma->add_option("--seed", seed, "Random seed (cycleclique)");
  lemma->callback([&] { action = [&] { return cmd_verify(gl, a1, max_n, trials, seed); }; });

  for (auto* sub : {check, rooted, recognize, dichotomy, verify, ding, enumerate, matrix, lemma}) add_globals(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitInputError;
  }

  Report rep;
  auto fail = [&](const std::string& type, const char* message) {
    rep.doc = json::object();
    rep.doc["error"] = {{"type", type}, {"message", message}};
    rep.code = kExitInputError;
    err << "ctrwqo: " << message << '\n';
  };
  try {
    rep = action();
  } catch (const Error& e) {
    fail(error_type(e), e.what());
  } catch (const std::invalid_argument& e) {
    fail("input_error", e.what());
  }
  const int written = emit(rep.doc, gl, out, err);
  return written != kExitTrue ? written : rep.code;
}

}  // namespace ctrwqo
