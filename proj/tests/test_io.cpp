#include <random>

#include "doctest.h"
#include "mstep/gen.hpp"
#include "mstep/io.hpp"
#include "oracles.hpp"

using namespace mstep;

namespace {

std::size_t error_line(const std::string& text, InputFormat f) {
  try {
    (void)parse_input(text, f);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return 0;
}

}  // namespace

TEST_CASE("dense matrices round-trip bit-exactly") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 100; ++rep) {
    const BoolMatrix m = oracle::random_matrix(1 + rng() % 130, rng);
    const std::string text = format_matrix(m);
    CHECK(parse_matrix(text) == m);
    CHECK(format_matrix(parse_matrix(text)) == text);
  }
  CHECK(parse_matrix("2\r\n01\r\n10\r\n\n") == BoolMatrix::from_rows({"01", "10"}));
}

TEST_CASE("dense matrix errors carry line numbers") {
  CHECK(error_line("", InputFormat::Matrix) == 1);
  CHECK(error_line("x\n", InputFormat::Matrix) == 1);
  CHECK(error_line("0\n", InputFormat::Matrix) == 1);
  CHECK(error_line("3\n010\n01\n000\n", InputFormat::Matrix) == 3);
  CHECK(error_line("2\n01\n1a\n", InputFormat::Matrix) == 3);
  CHECK(error_line("2\n01\n", InputFormat::Matrix) == 3);
  CHECK(error_line("2\n01\n10\n11\n", InputFormat::Matrix) == 4);
}

TEST_CASE("edge lists") {
  const Tournament t = figure1();
  const std::string text = format_edge_list(t);
  const ParsedInput in = parse_edge_list(text);
  CHECK(in.arcs == t.arcs());
  REQUIRE(in.parts);
  CHECK(*in.parts == t.parts());
  CHECK(load_tournament("# comment\n\n" + text, InputFormat::EdgeList) == t);

  CHECK(error_line("3 2\n0\n1 2\n0 9\n", InputFormat::EdgeList) == 4);
  CHECK(error_line("3 2\n0\n1 2\n0 1 2\n", InputFormat::EdgeList) == 4);
  CHECK(error_line("3\n", InputFormat::EdgeList) == 1);
}

TEST_CASE("tournament JSON mirror") {
  std::mt19937_64 rng(62);
  for (int rep = 0; rep < 30; ++rep) {
    const Tournament t = random_tournament({{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3}, rng()});
    const std::string text = tournament_to_json(t).dump();
    CHECK(load_tournament(text, InputFormat::Json) == t);
  }
  CHECK_THROWS_AS(parse_tournament_json("{"), ParseError);
  CHECK_THROWS_AS(parse_tournament_json("{\"n\": 2}"), ParseError);
  CHECK_THROWS_AS(parse_tournament_json("{\"n\": 2, \"parts\": [[0],[5]], \"arcs\": []}"), ParseError);
}

TEST_CASE("format detection") {
  CHECK(detect_format("6\n011111\n") == InputFormat::Matrix);
  CHECK(detect_format("# x\n6 3\n") == InputFormat::EdgeList);
  CHECK(detect_format("  {\"n\": 1}") == InputFormat::Json);
  CHECK_THROWS_AS(detect_format("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(detect_format("\n\n"), ParseError);
  CHECK(parse_input_format("edges") == InputFormat::EdgeList);
  CHECK_THROWS(parse_input_format("xml"));
}

TEST_CASE("matrix input gets an inferred partition") {
  const Tournament t = load_tournament(format_matrix(figure1().arcs()), InputFormat::Matrix);
  CHECK(t == figure1());
  CHECK_THROWS_AS(load_tournament("2\n00\n00\n", InputFormat::Matrix), ValidationError);
}
