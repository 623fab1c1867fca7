#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "camoforge/errors.hpp"
#include "camoforge/pla.hpp"
#include "camoforge/rng.hpp"
#include "oracles.hpp"

using namespace camoforge;

TEST_CASE("single-cube AND table") {
  const auto table = parse_pla(".i 2\n.o 1\n.p 1\n11 1\n.e\n");
  CHECK(table.num_inputs == 2);
  CHECK(table.num_outputs == 1);
  CHECK(table.cubes.size() == 1);
  CHECK(table.cubes[0] == Cube{"11", "1"});
  CHECK(table.declared_terms == 1);
}

TEST_CASE("two cubes covering both minterms give a constant-1 function") {
  const auto table = parse_pla(".i 1\n.o 1\n.p 2\n0 1\n1 1\n.e\n");
  CHECK(table.cubes.size() == 2);
  CHECK(oracles::eval_pla(table, {false}) == std::vector<bool>{true});
  CHECK(oracles::eval_pla(table, {true}) == std::vector<bool>{true});
}

TEST_CASE("labels, comments, CRLF and missing .e are tolerated") {
  const auto table = parse_pla(
      ".i 2 # two inputs\r\n.o 1\r\n.ilb a b\r\n.ob f\r\n# full table\r\n1- 1\r\n");
  CHECK(table.input_labels == std::vector<std::string>{"a", "b"});
  CHECK(table.output_labels == std::vector<std::string>{"f"});
  CHECK(table.cubes.size() == 1);
  CHECK(table.declared_terms == 1);
}

TEST_CASE("default labels are generated") {
  const auto table = parse_pla(".i 2\n.o 2\n10 01\n.e\n");
  CHECK(table.input_labels == std::vector<std::string>{"in0", "in1"});
  CHECK(table.output_labels == std::vector<std::string>{"out0", "out1"});
}

TEST_CASE(".type f is accepted, other table types are not") {
  CHECK_NOTHROW(parse_pla(".i 1\n.o 1\n.type f\n1 1\n.e\n"));
  CHECK_THROWS_AS(parse_pla(".i 1\n.o 1\n.type fr\n1 1\n.e\n"), ParseError);
  CHECK_THROWS_AS(parse_pla(".i 1\n.o 1\n.type fd\n1 1\n.e\n"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("malformed cube width") {
    try {
      parse_pla(".i 3\n.o 1\n11 1\n.e\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }
  SUBCASE("character outside the alphabet") {
    try {
      parse_pla(".i 2\n.o 1\n1x 1\n.e\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }
  SUBCASE("output part may not contain dashes") {
    CHECK_THROWS_AS(parse_pla(".i 2\n.o 1\n11 -\n.e\n"), ParseError);
  }
  SUBCASE("unknown directive") {
    try {
      parse_pla(".i 1\n.o 1\n.phase 1\n1 1\n.e\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }
}

TEST_CASE("missing .i or .o is rejected") {
  CHECK_THROWS_AS(parse_pla(".o 1\n1 1\n.e\n"), ParseError);
  CHECK_THROWS_AS(parse_pla(".i 1\n1 1\n.e\n"), ParseError);
}

TEST_CASE("inconsistent .p is rejected") {
  CHECK_THROWS_AS(parse_pla(".i 1\n.o 1\n.p 2\n1 1\n.e\n"), ParseError);
}

TEST_CASE("content after .e is rejected") {
  CHECK_THROWS_AS(parse_pla(".i 1\n.o 1\n1 1\n.e\n1 1\n"), ParseError);
}

TEST_CASE("duplicate counts and misplaced label directives are rejected") {
  CHECK_THROWS_AS(parse_pla(".i 1\n.i 1\n.o 1\n1 1\n.e\n"), ParseError);
  CHECK_THROWS_AS(parse_pla(".ilb a\n.i 1\n.o 1\n1 1\n.e\n"), ParseError);
  CHECK_THROWS_AS(parse_pla(".i 2\n.o 1\n.ilb a\n11 1\n.e\n"), ParseError);
}

TEST_CASE("round-trip: parse, serialize, re-parse is the identity") {
  Xoshiro256StarStar rng(2024);
  for (int iter = 0; iter < 30; ++iter) {
    const auto table = oracles::random_pla(rng, 1 + rng.bounded(8), 1 + rng.bounded(4),
                                           1 + rng.bounded(20));
    const auto reparsed = parse_pla(serialize_pla(table));
    CHECK(reparsed == table);
  }
}
