#include <chrono>

#include "doctest.h"
#include "flatcheck/groebner.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flatcheck;
using testing::P;

namespace {

std::vector<Polynomial> polys(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(r, t));
  return out;
}

std::vector<std::string> strings(const GroebnerBasis& g) {
  std::vector<std::string> out;
  for (const auto& p : g.generators) out.push_back(p.to_string());
  return out;
}

bool all_s_polynomials_reduce(const GroebnerBasis& g) {
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    for (std::size_t j = i + 1; j < g.generators.size(); ++j) {
      auto s = s_polynomial(g.generators[i], g.generators[j], g.order);
      if (!normal_form(s, g.generators, g.order).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("normal forms") {
  auto r = testing::ring({"x", "y"}, MonomialOrder::lex());
  CHECK(normal_form(P(r, "x^2"), polys(r, {"x"}), MonomialOrder::lex()).is_zero());
  auto f = P(r, "x^3 + 2*y");
  CHECK(normal_form(f, {}, MonomialOrder::lex()) == f);
  auto nf = normal_form(P(r, "x^2 + y"), polys(r, {"x - y"}), MonomialOrder::lex());
  CHECK(nf == P(r, "y^2 + y"));
  // Oracle: the difference lies in <x - y> with explicit cofactors.
  CHECK(oracle::has_cofactors(P(r, "x^2 + y") - nf, polys(r, {"x - y"}), 2));
}

TEST_CASE("division bookkeeping") {
  auto r = testing::ring({"x", "y"}, MonomialOrder::lex());
  auto divisors = polys(r, {"x*y - 1", "y^2 - 1"});
  auto f = P(r, "x^2*y + x*y^2 + y^2");
  auto d = divide(f, divisors, MonomialOrder::lex());
  Polynomial sum = d.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) sum += d.quotients[i] * divisors[i];
  CHECK(sum == f);
  CHECK(d.remainder == P(r, "x + y + 1"));
}

TEST_CASE("S-polynomials") {
  auto r = testing::ring({"x", "y"}, MonomialOrder::lex());
  CHECK(s_polynomial(P(r, "x"), P(r, "y"), MonomialOrder::lex()).is_zero());
  CHECK(s_polynomial(P(r, "x^2 - y"), P(r, "x*y - 1"), MonomialOrder::lex()) == P(r, "-y^2 + x"));
  auto f = P(r, "x^2 + y");
  CHECK(s_polynomial(f, f, MonomialOrder::lex()).is_zero());
  CHECK_THROWS_AS(s_polynomial(f, Polynomial(r), MonomialOrder::lex()), InvalidInput);
}

TEST_CASE("Buchberger on small inputs") {
  auto r = testing::ring({"x", "y"}, MonomialOrder::lex());
  auto lin = buchberger(r, polys(r, {"x - y", "x + y"}), MonomialOrder::lex());
  CHECK(strings(lin) == std::vector<std::string>{"x", "y"});

  auto g = buchberger(r, polys(r, {"x^2 - 1", "x*y - 1"}), MonomialOrder::lex());
  CHECK(strings(g) == std::vector<std::string>{"x - y", "y^2 - 1"});
  CHECK(g.reduced);

  auto empty = buchberger(r, {}, MonomialOrder::lex());
  CHECK(empty.generators.empty());

  auto unit = buchberger(r, polys(r, {"x", "x + 1"}), MonomialOrder::lex());
  CHECK(unit.is_unit());
}

TEST_CASE("reduced bases") {
  auto r = testing::ring({"x", "y"}, MonomialOrder::lex());
  GroebnerBasis raw{r, MonomialOrder::lex(), polys(r, {"x + y", "y", "2*x*y"}), false, 0};
  CHECK(strings(reduce_basis(raw)) == std::vector<std::string>{"x", "y"});
  GroebnerBasis two_x{r, MonomialOrder::lex(), polys(r, {"2*x"}), false, 0};
  CHECK(strings(reduce_basis(two_x)) == std::vector<std::string>{"x"});
  auto g = buchberger(r, polys(r, {"x^2 - 1", "x*y - 1"}), MonomialOrder::lex());
  CHECK(strings(reduce_basis(g)) == strings(g));
}

TEST_CASE("Buchberger output satisfies the S-pair criterion") {
  oracle::RandomPolys gen(2024);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
    auto r = testing::ring({"x", "y", "z"}, order);
    for (int k = 0; k < 15; ++k) {
      std::vector<Polynomial> gens{gen.sparse(r, 3, 2, 3), gen.sparse(r, 3, 2, 3),
                                   gen.sparse(r, 2, 3, 3)};
      auto g = buchberger(r, gens, order);
      CHECK(all_s_polynomials_reduce(g));
      for (const auto& f : gens) CHECK(normal_form(f, g.generators, order).is_zero());
    }
  }
}

TEST_CASE("guards abandon runaway computations") {
  auto r = testing::ring({"x", "y", "z"});
  auto gens = polys(r, {"x^2*y - z^2 + 1", "x*y^2 - x + z", "x*y*z - y - 1"});
  Guards tight;
  tight.max_pairs = 2;
  try {
    buchberger(r, gens, MonomialOrder::degrevlex(), tight);
    FAIL("expected the pair guard to trip");
  } catch (const GuardExceeded& e) {
    CHECK(e.guard() == "max_pairs");
  }
  Guards low_degree;
  low_degree.max_degree = 2;
  CHECK_THROWS_AS(buchberger(r, gens, MonomialOrder::degrevlex(), low_degree), GuardExceeded);

  auto expired = Guards::with_timeout(std::chrono::duration<double>(-1.0));
  try {
    buchberger(r, gens, MonomialOrder::lex(), expired);
    FAIL("expected the timeout guard to trip");
  } catch (const GuardExceeded& e) {
    CHECK(e.guard() == "timeout");
  }
}
