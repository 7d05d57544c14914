#include <algorithm>

#include "doctest.h"
#include "flatcheck/primdec.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flatcheck;
using testing::I;
using testing::P;

namespace {

std::vector<std::string> prime_strings(const std::vector<PrimaryComponent>& comps) {
  std::vector<std::string> out;
  for (const auto& c : comps) out.push_back(c.prime.canonical().to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> strings(const std::vector<Ideal>& ideals) {
  std::vector<std::string> out;
  for (const auto& i : ideals) out.push_back(i.canonical().to_string());
  std::sort(out.begin(), out.end());
  return out;
}

/// Checks the component invariants with oracles independent of decompose.
void check_components(const Ideal& input, const std::vector<PrimaryComponent>& comps) {
  std::vector<Ideal> primaries;
  for (const auto& c : comps) {
    primaries.push_back(c.primary);
    CHECK(c.primary.contains(input));
    CHECK(c.prime.contains(c.primary));
    for (const auto& g : c.prime.generators()) CHECK(oracle::power_in(g, c.primary));
  }
  const Ideal meet = intersect_all(primaries);
  CHECK(meet.contains(input));
  CHECK(input.contains(meet));
}

}  // namespace

TEST_CASE("zero-dimensional decomposition") {
  auto r = testing::ring({"x", "y"});
  auto fat = zero_dim_decompose(I(r, {"x^2", "y"}));
  REQUIRE(fat.size() == 1);
  CHECK(fat[0].primary == I(r, {"x^2", "y"}));
  CHECK(fat[0].prime == I(r, {"x", "y"}));

  auto line = testing::ring({"x"});
  auto point = zero_dim_decompose(I(line, {"x - 1"}));
  REQUIRE(point.size() == 1);
  CHECK(point[0].prime == I(line, {"x - 1"}));

  auto two = I(r, {"x^2 - 1", "y"});
  auto split = zero_dim_decompose(two);
  CHECK(prime_strings(split) == strings({I(r, {"x - 1", "y"}), I(r, {"x + 1", "y"})}));
  check_components(two, split);

  CHECK_THROWS_AS(zero_dim_decompose(I(r, {"x*y"})), NotZeroDimensional);
}

TEST_CASE("zero-dimensional components over extension fields") {
  auto r = testing::ring({"x", "y"});
  auto input = I(r, {"x^2 - 2", "y^2 - 2"});
  auto comps = zero_dim_decompose(input);
  // x = ±y splits the four conjugate points into two Q-irreducible orbits.
  CHECK(comps.size() == 2);
  check_components(input, comps);
}

TEST_CASE("decomposition in positive dimension") {
  auto r = testing::ring({"x", "y"});
  auto embedded = I(r, {"x*y", "y^2"});
  auto comps = decompose(embedded);
  CHECK(prime_strings(comps) == strings({I(r, {"y"}), I(r, {"x", "y"})}));
  check_components(embedded, comps);

  auto b = testing::ring({"y1", "y2", "x"});
  auto chart = I(b, {"y2*x - y1"});
  auto single = decompose(chart);
  REQUIRE(single.size() == 1);
  CHECK(single[0].primary == chart);
  CHECK(single[0].prime == chart);

  auto zero = decompose(Ideal(r));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].prime.canonical().is_zero());

  CHECK_THROWS_AS(decompose(I(r, {"1"})), InvalidInput);
}

TEST_CASE("associated primes and radicals") {
  auto r = testing::ring({"x", "y"});
  CHECK(strings(associated_primes(I(r, {"x*y", "y^2"}))) == strings({I(r, {"y"}), I(r, {"x", "y"})}));

  auto rad = radical_and_minimal(I(r, {"x^2"}));
  CHECK(rad.radical == I(r, {"x"}));
  auto rad2 = radical_and_minimal(I(r, {"x*y", "y^2"}));
  CHECK(rad2.radical == I(r, {"y"}));
  CHECK(strings(rad2.minimal_primes) == strings({I(r, {"y"})}));
  CHECK(radical_and_minimal(rad2.radical).radical == rad2.radical);
}

TEST_CASE("linear factors in one variable") {
  auto r = testing::ring({"x"});
  auto comps = decompose(I(r, {"(x - 1)*(x + 2)*(x - 3)*(2*x + 1)"}));
  CHECK(prime_strings(comps) ==
        strings({I(r, {"x - 1"}), I(r, {"x + 2"}), I(r, {"x - 3"}), I(r, {"2*x + 1"})}));
}

TEST_CASE("Douady ideals") {
  auto r = testing::ring({"y1", "y2", "x"});
  auto base = testing::ring({"y1", "y2"});
  const auto q = I(base, {"4*y1^3 + 27*y2^2"});
  const auto incidence = I(r, {"4*y1^3 + 27*y2^2", "x^3 + y1*x + y2"});
  auto rad = radical_and_minimal(incidence);
  // Double inclusion by radical membership.
  for (const auto& g : rad.radical.generators()) CHECK(oracle::power_in(g, incidence));
  CHECK(rad.radical.contains(incidence));

  // Without a cover: exactly two primes, each contracting to q.
  auto ass = associated_primes(rad.radical);
  CHECK(ass.size() == 2);
  for (const auto& p : ass) CHECK(contract_to_base(p, base) == q);

  // With the normalization cover adjoined some prime contracts to (y1, y2).
  auto big = testing::ring({"x", "u", "y1", "y2"});
  auto J = ideal_sum(transfer(rad.radical, big), I(big, {"y1 + 3*u^2", "y2 - 2*u^3"}));
  bool found = false;
  for (const auto& p : associated_primes(J))
    found = found || contract_to_base(p, base) == I(base, {"y1", "y2"});
  CHECK(found);
}

TEST_CASE("associated primes are invariant under seeds and generator order") {
  oracle::RandomPolys gen(17);
  auto r = testing::ring({"x", "y", "z"});
  for (int k = 0; k < 6; ++k) {
    std::vector<Polynomial> gens{gen.sparse(r, 2, 2, 3), gen.sparse(r, 2, 3, 3)};
    Ideal ideal(r, gens);
    if (ideal.is_unit()) continue;
    auto reference = strings(associated_primes(ideal));
    DecompositionOptions other;
    other.seed = 99;
    CHECK(strings(associated_primes(ideal, other)) == reference);
    std::reverse(gens.begin(), gens.end());
    gens[0] = gens[0].scaled(Rational(-3, 2));
    CHECK(strings(associated_primes(Ideal(r, gens))) == reference);
  }
}

TEST_CASE("minimal elements") {
  auto r = testing::ring({"x", "y"});
  auto mins = minimal_elements({I(r, {"x", "y"}), I(r, {"y"}), I(r, {"x - 1", "y"})});
  CHECK(strings(mins) == strings({I(r, {"y"})}));
}

TEST_CASE("components off the generic fibre are split off") {
  // The line component meets V(I) in points that the extension must drop;
  // in the reversed variable order the remainder ideal used to explode.
  for (auto vars : {std::vector<std::string>{"x", "y", "z"}, std::vector<std::string>{"z", "y", "x"}}) {
    auto r = testing::ring(vars);
    auto input = I(r, {"x^2*z^2 + 3*x*z^3 + 3*z^2", "x*y^2 + 1/3*x^2*z + y", "y*z - z^2"});
    auto comps = decompose(input);
    CHECK(prime_strings(comps) ==
          strings({I(r, {"x*y + 1", "z"}), I(r, {"x^2 + 3*x*z + 3", "y - z"}), I(r, {"y", "z"})}));
    check_components(input, comps);
  }
}
