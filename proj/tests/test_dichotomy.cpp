#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctrwqo/contraction.hpp"
#include "ctrwqo/dichotomy.hpp"
#include "ctrwqo/enumerate.hpp"
#include "ctrwqo/errors.hpp"
#include "oracles.hpp"

using namespace ctrwqo;

TEST_CASE("examples") {
  const auto k3 = dichotomy_verdict(complete(3));
  CHECK(k3.verdict == Verdict::WQO);
  REQUIRE(k3.model.has_value());
  CHECK(verify_model(complete(3), diamond_family(2), *k3.model).ok);
  CHECK(k3.witnesses.empty());

  const auto d3 = dichotomy_verdict(diamond_family(3));
  CHECK(d3.verdict == Verdict::NOT_WQO);
  REQUIRE(d3.witness_family.has_value());
  CHECK(*d3.witness_family == Family::ANTIHOLE);
  REQUIRE(d3.witnesses.size() == 3);
  CHECK(d3.witnesses[0].spec == antihole_spec(6));
  CHECK(d3.witnesses[2].spec == antihole_spec(8));

  const auto p4 = dichotomy_verdict(path(4));
  CHECK(p4.verdict == Verdict::NOT_WQO);
  CHECK(*p4.witness_family == Family::K2R);
  REQUIRE(p4.witnesses.size() == 4);
  CHECK(p4.witnesses.front().spec == k2r(2));
  CHECK(p4.witnesses.back().spec == k2r(5));
}

TEST_CASE("no sampled witness: the 4-cycle") {
  // C_4 is K_{2,2} itself and a contraction of some sampled antihole.
  const auto v = dichotomy_verdict(cycle(4));
  CHECK(v.verdict == Verdict::NOT_WQO);
  CHECK(v.justification == "by Theorem main");
  CHECK_FALSE(v.witness_family.has_value());
  CHECK(v.witnesses.empty());
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("WQO exactly below the diamond; witnesses exclude h (n <= 6)") {
  const auto below_diamond = oracle::contraction_closure(oracle::to_matrix(diamond_family(2)));
  CHECK(below_diamond.size() == 5);
  for (const Graph& h : connected_corpus(6)) {
    const auto v = dichotomy_verdict(h);
    CHECK((v.verdict == Verdict::WQO) == (below_diamond.count(oracle::canonical_code(oracle::to_matrix(h))) > 0));
    for (const WitnessMember& m : v.witnesses) {
      CHECK(m.graph == make(m.spec).graph);
      CHECK_FALSE(is_contraction(h, m.graph));
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(dichotomy_verdict(edgeless(2)), DisconnectedInput);
  CHECK_THROWS_AS(dichotomy_verdict(path(15)), TooLarge);
  CHECK_NOTHROW(dichotomy_verdict(path(14)));
  CHECK(to_string(Verdict::NOT_WQO) == "NOT_WQO");
}
