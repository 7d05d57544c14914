#include <algorithm>

#include "doctest.h"
#include "flatcheck/dsl.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flatcheck;
using testing::I;
using testing::P;

namespace {

ParseError parse_error_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("base ring declarations") {
  auto file = parse_problem("ring R = Q[y1,y2] / (4*y1^3 + 27*y2^2);");
  REQUIRE(file.base);
  CHECK(file.base->ambient->variables() == std::vector<std::string>{"y1", "y2"});
  CHECK(file.base->q == I(file.base->ambient, {"4*y1^3 + 27*y2^2"}));
  CHECK(file.base->n == 1);
  const auto* decl = file.find("ring");
  REQUIRE(decl);
  CHECK(decl->name == "R");
  CHECK(decl->span.line == 1);
  CHECK(decl->span.column == 6);

  auto plane = parse_problem("ring R = Q[y1,y2];");
  CHECK(plane.base->q.canonical().is_zero());
  CHECK(plane.base->n == 2);
}

TEST_CASE("radical constructors are resolved at load time") {
  auto file = parse_problem(
      "ring R = Q[y1,y2] / (4*y1^3 + 27*y2^2);\n"
      "module F over R = Q[y1,y2,x] / radical(4*y1^3 + 27*y2^2, x^3 + y1*x + y2);\n");
  REQUIRE(file.module);
  const auto& ring = file.module->ambient;
  const auto incidence = I(ring, {"4*y1^3 + 27*y2^2", "x^3 + y1*x + y2"});
  CHECK(file.module->I.contains(incidence));
  for (const auto& g : file.module->I.generators()) CHECK(oracle::power_in(g, incidence));
  // The radical is strictly larger: the incidence ideal is not reduced.
  CHECK_FALSE(incidence.contains(file.module->I));
}

TEST_CASE("full problem files") {
  auto file = parse_problem(
      "# comment\n"
      "ring R = Q[y1,y2] / (4*y1^3 + 27*y2^2);\n"
      "module F over R = Q[y1,y2,x] / (4*y1^3 + 27*y2^2);\n"
      "cover S over R = Q[y1,y2,u] / (y1 + 3*u^2, y2 - 2*u^3);\n"
      "ideal K = Q[x,y] / (x^2 - 1, x*y - 1);\n"
      "option power = 2;\n"
      "assert analytically_irreducible;\n");
  CHECK(file.cover);
  REQUIRE(file.ideals.size() == 1);
  CHECK(file.ideals[0].first == "K");
  CHECK(file.power == 2);
  CHECK(file.assertions.count("analytically_irreducible") == 1);
  auto problem = file.problem({}, {"cover_regular"});
  CHECK(problem.power == 2);
  CHECK(problem.waivers.count("cover_regular") == 1);
  CHECK(problem.cover);

  CHECK_THROWS_AS(parse_problem("ideal K = Q[x] / (x);").problem(), InvalidInput);
}

TEST_CASE("parse errors point at the offending token") {
  auto e = parse_error_of("ring R = Q[y1 y2];");
  CHECK(e.span().line == 1);
  CHECK(e.span().column == 15);
  CHECK(std::find(e.expected().begin(), e.expected().end(), "','") != e.expected().end());

  auto second_line = parse_error_of("ring R = Q[y];\nmodule A over R = Q[y,x] / (x*y)\n");
  CHECK(second_line.span().line >= 2);

  CHECK_THROWS_AS(parse_problem("ring R = Q[y] / (y + z);"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring R = Q[y];\noption power = x;"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring R = Q[y];\nassert nothing;"), ParseError);
  CHECK_THROWS_AS(parse_problem("rng R = Q[y];"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring R = Q[y];\nmodule A over T = Q[y,x];"), ParseError);
}

TEST_CASE("duplicates raise variable clashes with spans") {
  try {
    parse_problem("ring R = Q[y];\nring R = Q[y];\n");
    FAIL("expected a clash");
  } catch (const VariableClash& e) {
    REQUIRE(e.span());
    CHECK(e.span()->line == 2);
  }
  try {
    parse_problem("ring R = Q[y, y];");
    FAIL("expected a clash");
  } catch (const VariableClash& e) {
    REQUIRE(e.span());
    CHECK(e.span()->line == 1);
  }
  // The module ring must contain the base variables.
  CHECK_THROWS_AS(parse_problem("ring R = Q[y1,y2];\nmodule A over R = Q[y1,x] / (x);"), VariableClash);
}

TEST_CASE("ideals round-trip through text") {
  auto r = testing::ring({"x", "y", "z"});
  oracle::RandomPolys gen(3);
  for (int k = 0; k < 20; ++k) {
    Ideal ideal(r, {gen.sparse(r, 3, 3, 4), gen.sparse(r, 2, 2, 4)});
    auto reparsed = parse_ideal(ideal.to_string(), r);
    CHECK(reparsed.contains(ideal));
    CHECK(ideal.contains(reparsed));
  }
  CHECK(parse_ideal("x, y", r) == I(r, {"x", "y"}));
  CHECK(parse_ideal("()", r).canonical().is_zero());
}
