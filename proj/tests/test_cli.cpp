#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ctrwqo/cli.hpp"
#include "ctrwqo/graph.hpp"
#include "ctrwqo/graph6.hpp"

using namespace ctrwqo;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ctrwqo_test_" + name);
}

}  // namespace

TEST_CASE("check") {
  const Run r = run({"check", write_graph6(complete(1)), write_graph6(complete(5))});
  CHECK(r.code == kExitTrue);
  const json j = r.doc();
  CHECK(j["contraction"] == true);
  CHECK(j["outcome"] == "found");
  CHECK(j["model"].size() == 1);
  CHECK(j["model"][0].size() == 5);

  const Run no = run({"check", "K2R:3", "DR:2"});
  CHECK(no.code == kExitFalse);
  CHECK(no.doc()["contraction"] == false);
  CHECK(no.doc()["model"].is_null());

  const Run yes = run({"check", "DR:2", "K2R:3"});
  CHECK(yes.code == kExitTrue);
  CHECK(yes.doc()["h"] == write_graph6(diamond_family(2)));
}

TEST_CASE("check-rooted") {
  // Rooted at a degree-3 vertex of the diamond, K_{1,2} needs its centre there.
  const std::string d = write_graph6(diamond_family(2)), p = write_graph6(path(3));
  const Run a = run({"check-rooted", p + "@1", d + "@0"});
  CHECK(a.code == kExitTrue);
  CHECK(a.doc()["rooted_contraction"] == true);
  CHECK(a.doc()["h"]["root"] == 1);
  CHECK(run({"check-rooted", p + "@0", write_graph6(complete(3)) + "@0"}).code == kExitFalse);
  CHECK(run({"check-rooted", p, d + "@0"}).code == kExitInputError);
  CHECK(run({"check-rooted", p + "@7", d + "@0"}).code == kExitInputError);
  CHECK(run({"check-rooted", p + "@x", d + "@0"}).code == kExitInputError);
}

TEST_CASE("recognize") {
  const Run r = run({"recognize", write_graph6(complete_bipartite(2, 3))});
  CHECK(r.code == kExitFalse);
  const json j = r.doc();
  CHECK(j["clique_cactus"] == false);
  CHECK(j["excludes_diamond"] == false);
  REQUIRE(j["offending"].size() == 1);
  CHECK(j["offending"][0]["vertices"].size() == 5);
  CHECK(j["offending"][0]["kind"] == "other");

  const Run ok = run({"recognize", "STAR:3"});
  CHECK(ok.code == kExitTrue);
  CHECK(ok.doc()["blocks"].size() == 3);
  CHECK(ok.doc()["cutvertices"] == json::array({0}));
  CHECK(run({"recognize", write_graph6(edgeless(2))}).code == kExitInputError);
}

TEST_CASE("dichotomy") {
  const Run w = run({"dichotomy", write_graph6(complete(3))});
  CHECK(w.code == kExitTrue);
  CHECK(w.doc()["verdict"] == "WQO");
  CHECK(w.doc()["witness_family"].is_null());
  const Run n = run({"dichotomy", "DR:3"});
  CHECK(n.code == kExitTrue);
  CHECK(n.doc()["verdict"] == "NOT_WQO");
  CHECK(n.doc()["witness_family"] == "ANTIHOLE");
  CHECK(n.doc()["witnesses"].size() == 3);
  CHECK_FALSE(n.doc().contains("note"));
  const Run c4 = run({"dichotomy", "K2R:2"});
  CHECK(c4.doc()["justification"] == "by Theorem main");
  CHECK(c4.doc().contains("note"));
  const Run big = run({"dichotomy", write_graph6(path(15))});
  CHECK(big.code == kExitInputError);
  CHECK(big.doc()["error"]["type"] == "too_large");
}

TEST_CASE("antichain verify") {
  const Run k = run({"antichain", "verify", "K2R", "2..6"});
  CHECK(k.code == kExitTrue);
  CHECK(k.doc()["antichain"] == true);
  CHECK(k.doc()["members"].size() == 5);
  CHECK(k.doc()["prediction_mismatches"].empty());
  const Run a = run({"antichain", "verify", "ANTIHOLE", "6..9"});
  CHECK(a.code == kExitTrue);
  const Run d = run({"antichain", "verify", "DR", "0..3"});
  CHECK(d.code == kExitFalse);
  CHECK(d.doc()["comparable_pairs"].size() == 6);
  CHECK(d.doc()["prediction_mismatches"].empty());
  const Run w = run({"antichain", "verify", "W", "3..4,3..4"});
  CHECK(w.code == kExitTrue);
  CHECK(w.doc()["members"].size() == 4);
  // One range serves both parameters.
  const json single = run({"antichain", "verify", "W", "3..4"}).doc();
  CHECK(single["members"] == w.doc()["members"]);
  CHECK(single["matrix"] == w.doc()["matrix"]);
  CHECK(run({"antichain", "verify", "W", "3..4,x"}).code == kExitInputError);
  CHECK(run({"antichain", "verify", "K2R", "1..3"}).code == kExitInputError);
  CHECK(run({"antichain", "verify", "ANTIHOLE", "6..8", "--budget", "1"}).code == kExitExhausted);
}

TEST_CASE("ding-premises") {
  const Run r = run({"ding-premises", "--i", "3..4", "--q", "3", "--downset-depth", "1"});
  CHECK(r.code == kExitTrue);
  const json j = r.doc();
  CHECK(j["premise_iii"]["holds"] == true);
  CHECK(j["premise_iii"]["wrong"] == 0);
  CHECK(j["bounded_evidence"]["label"] == "bounded evidence");
  CHECK(j["bounded_evidence"]["downset_depth"] == 1);
  CHECK(j["bounded_evidence"]["clean"] == true);
  CHECK(run({"ding-premises", "--i", "2..3", "--q", "3"}).code == kExitInputError);
}

TEST_CASE("enumerate") {
  const Run all = run({"enumerate", "--n", "5"});
  CHECK(all.code == kExitTrue);
  CHECK(all.doc()["count"] == 21);
  CHECK(all.doc()["filter"].is_null());
  const Run cc = run({"enumerate", "--n", "5", "--filter", "clique-cactus"});
  const Run df = run({"enumerate", "--n", "5", "--filter", "diamond-free"});
  CHECK(cc.doc()["count"] == 11);
  CHECK(cc.doc()["graphs"] == df.doc()["graphs"]);
  CHECK(run({"enumerate", "--n", "9"}).code == kExitInputError);
  CHECK(run({"enumerate", "--n", "4", "--filter", "trees"}).code == kExitInputError);
}

TEST_CASE("matrix") {
  const auto path = temp_path("matrix.txt");
  {
    std::ofstream f(path);
    f << "# a small chain\n" << write_graph6(complete(2)) << "\n\n  K2R:2  \n" << write_graph6(complete(3)) << "\n";
  }
  const Run r = run({"matrix", path.string()});
  CHECK(r.code == kExitTrue);
  const json j = r.doc();
  REQUIRE(j["inputs"].size() == 3);
  CHECK(j["inputs"][1]["input"] == "K2R:2");
  CHECK(j["matrix"][0][1] == "below");
  CHECK(j["matrix"][2][0] == "above");
  CHECK(j["matrix"][1][2] == "above");
  CHECK(j["matrix"][1][1] == "equal");
  std::filesystem::remove(path);
  CHECK(run({"matrix", "/nonexistent/graphs.txt"}).code == kExitInputError);
}

TEST_CASE("verify-lemma") {
  const Run r = run({"verify-lemma", "dec", "--max-n", "6"});
  CHECK(r.code == kExitTrue);
  const json j = r.doc();
  CHECK(j["passed"] == true);
  CHECK(j["items"].size() >= 112);
  CHECK(j["failures"] == 0);
  CHECK(run({"verify-lemma", "comp", "--budget", "1"}).code == kExitExhausted);
  CHECK(run({"verify-lemma", "nope"}).code == kExitInputError);
  CHECK(run({"verify-lemma", "dec", "--max-n", "9"}).code == kExitInputError);
}

TEST_CASE("json output is sorted, deterministic and mirrored to --json") {
  const auto path = temp_path("out.json");
  const Run one = run({"antichain", "verify", "K2R", "2..5", "--workers", "1", "--json", path.string()});
  const Run four = run({"antichain", "verify", "K2R", "2..5", "--workers", "4"});
  CHECK(one.out == four.out);
  std::ifstream f(path);
  const std::string file((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(file == one.out);
  std::filesystem::remove(path);
  // Keys appear in sorted order.
  const json j = one.doc();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(one.out.find("\"antichain\"") < one.out.find("\"members\""));
  CHECK(run({"check", "@", "@", "--json", "/nonexistent/dir/x.json"}).code == kExitInputError);
}

TEST_CASE("input errors") {
  const Run bad = run({"check", "A~", "@"});
  CHECK(bad.code == kExitInputError);
  CHECK(bad.doc()["error"]["type"] == "malformed_graph6");
  CHECK(bad.err.rfind("ctrwqo: ", 0) == 0);
  CHECK(run({"check", write_graph6(edgeless(2)), "@"}).doc()["error"]["type"] == "disconnected");
  CHECK(run({"check", "K2R:1", "@"}).doc()["error"]["type"] == "param_out_of_range");
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"check", "@"}).code == kExitInputError);
  CHECK(run({"check", "@", "@", "--workers", "0"}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitTrue);
}

TEST_CASE("budget exhaustion") {
  const Run r = run({"check", "ANTIHOLE:6", "ANTIHOLE:8", "--budget", "1"});
  CHECK(r.code == kExitExhausted);
  CHECK(r.doc()["contraction"].is_null());
  CHECK(r.doc()["outcome"] == "exhausted");
}
