#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "modc/errors.hpp"
#include "modc/io.hpp"
#include "modc/oracle.hpp"
#include "modc/selector.hpp"

using namespace modc;

TEST_CASE("closed set json") {
  SUBCASE("golden encodings") {
    CHECK(to_json(cylinder("0")).dump() ==
          R"({"states":2,"initial":0,"edges":[[0,0,1],[1,0,1],[1,1,1]]})");
    CHECK(to_json(empty_closed()).dump() == R"({"states":0,"initial":null,"edges":[]})");
    CHECK(to_json(full_space()).dump() ==
          R"({"states":1,"initial":0,"edges":[[0,0,0],[0,1,0]]})");
  }

  SUBCASE("round trip") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const ClosedSet c = random_closed(seed, 6);
      const Json j = to_json(c);
      CHECK(closed_set_from_json(j) == c);
      CHECK(to_json(closed_set_from_json(j)) == j);
    }
    CHECK(closed_set_from_json(to_json(empty_closed())) == empty_closed());
  }

  SUBCASE("non-canonical encodings are rejected") {
    // The full space written with a redundant second state.
    const Json j = Json::parse(
        R"({"states":2,"initial":0,"edges":[[0,0,1],[0,1,1],[1,0,0],[1,1,0]]})");
    CHECK_THROWS_AS(closed_set_from_json(j), argument_error);
    // A state with no outgoing transition is not trimmed.
    const Json dead = Json::parse(R"({"states":2,"initial":0,"edges":[[0,0,0],[0,1,1]]})");
    CHECK_THROWS_AS(closed_set_from_json(dead), argument_error);
    CHECK_THROWS_AS(
        closed_set_from_json(Json::parse(R"({"states":1,"initial":null,"edges":[]})")),
        argument_error);
    CHECK_THROWS_AS(closed_set_from_json(Json::parse(R"({"states":1})")), argument_error);
  }
}

TEST_CASE("delta02 json") {
  SUBCASE("golden encoding of a removed point") {
    const Delta02Set s =
        combine(SetOp::Difference, Delta02Set::constant(true), lift(up_singleton("0", "0")));
    CHECK(to_json(s).dump() ==
          R"({"components":[{"states":1,"initial":0,"edges":[[0,0,0]]}],"condition":["0"]})");
  }

  SUBCASE("constants") {
    CHECK(to_json(Delta02Set::constant(true)).dump() == R"({"components":[],"condition":[""]})");
    CHECK(to_json(Delta02Set::constant(false)).dump() == R"({"components":[],"condition":[]})");
  }

  SUBCASE("round trip") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Delta02Set s = random_delta02(seed, 3, 4);
      const Json j = to_json(s);
      CHECK(delta02_from_json(j) == s);
      CHECK(to_json(delta02_from_json(j)) == j);
    }
  }

  SUBCASE("non-normalized encodings are rejected") {
    // A full-space component must be folded into the condition.
    const Json j = Json::parse(
        R"({"components":[{"states":1,"initial":0,"edges":[[0,0,0],[0,1,0]]}],"condition":["1"]})");
    CHECK_THROWS_AS(delta02_from_json(j), argument_error);
    const Json bad_bits = Json::parse(R"({"components":[],"condition":["x"]})");
    CHECK_THROWS_AS(delta02_from_json(bad_bits), argument_error);
  }
}

TEST_CASE("chain json") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const DifferenceChain chain = decompose(random_delta02(seed, 2, 4));
    const Json j = to_json(chain);
    CHECK(chain_from_json(j) == chain);
    CHECK(to_json(chain_from_json(j)) == j);
    CHECK(j.at("rank").get<std::size_t>() == chain.rank());
  }
  CHECK_THROWS_AS(chain_from_json(Json::parse(R"({"rank":2,"pairs":[]})")), argument_error);
}

TEST_CASE("selection report json") {
  const SelectionReport report = selection_report(lift(cylinder("0")));
  const Json j = to_json(report);
  CHECK(j.contains("chain"));
  CHECK(j.contains("kernels"));
  CHECK(j.contains("selected"));
  CHECK(j.at("kernels").size() == report.chain.rank());
  CHECK(j.at("selected") == to_json(report.selected));
}

TEST_CASE("text rendering") {
  CHECK(to_text(cylinder("0")) ==
        "states: 2\ninitial: 0\n0 -0-> 1\n1 -0-> 1\n1 -1-> 1\n");
  CHECK(to_text(empty_closed()) == "states: 0\ninitial: none\n");
  CHECK(to_text(full_space()) == "states: 1\ninitial: 0\n0 -0-> 0\n0 -1-> 0\n");

  SUBCASE("a closed delta02 set prints as its automaton") {
    CHECK(to_text(lift(cylinder("0"))) == to_text(cylinder("0")));
    CHECK(to_text(Delta02Set::constant(true)) == to_text(full_space()));
    // The complement of cyl(1) is the closed set cyl(0).
    CHECK(to_text(complement(lift(cylinder("1")))) == to_text(cylinder("0")));
  }

  SUBCASE("a non-closed set lists components and condition") {
    const Delta02Set s =
        combine(SetOp::Difference, Delta02Set::constant(true), lift(up_singleton("0", "0")));
    CHECK(to_text(s) ==
          "components: 1\ncondition: 0\ncomponent 0\nstates: 1\ninitial: 0\n0 -0-> 0\n");
  }

  SUBCASE("chains") {
    const DifferenceChain chain = decompose(lift(cylinder("0")));
    CHECK(to_text(chain) ==
          "rank: 1\nF[0]\nstates: 1\ninitial: 0\n0 -0-> 0\n0 -1-> 0\n"
          "H[0]\nstates: 2\ninitial: 0\n0 -1-> 1\n1 -0-> 1\n1 -1-> 1\n");
  }
}

TEST_CASE("dot rendering") {
  CHECK(to_dot(cylinder("0")) ==
        "digraph closed_set {\n"
        "  rankdir=LR;\n"
        "  node [shape=circle];\n"
        "  0 [shape=doublecircle];\n"
        "  0 -> 1 [label=\"0\"];\n"
        "  1 -> 1 [label=\"0\"];\n"
        "  1 -> 1 [label=\"1\"];\n"
        "}\n");
  CHECK(to_dot(empty_closed()) ==
        "digraph closed_set {\n  rankdir=LR;\n  node [shape=circle];\n}\n");

  SUBCASE("non-closed sets render clustered components") {
    const Delta02Set s =
        combine(SetOp::Difference, Delta02Set::constant(true), lift(up_singleton("0", "0")));
    const std::string dot = to_dot(s);
    CHECK(dot.find("digraph delta02 {") == 0);
    CHECK(dot.find("condition: 0") != std::string::npos);
    CHECK(dot.find("subgraph cluster_0") != std::string::npos);
    CHECK(dot.find("c0_0 -> c0_0 [label=\"0\"];") != std::string::npos);
  }
}
