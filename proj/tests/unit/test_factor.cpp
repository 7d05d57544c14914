#include <algorithm>

#include "doctest.h"
#include "flatcheck/factor.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flatcheck;
using testing::P;

namespace {

std::vector<std::pair<std::string, unsigned>> listing(const Factorization& f) {
  std::vector<std::pair<std::string, unsigned>> out;
  for (const auto& piece : f.factors) out.emplace_back(piece.factor.to_string(), piece.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

using Listing = std::vector<std::pair<std::string, unsigned>>;

}  // namespace

TEST_CASE("squarefree factorization") {
  auto r = testing::ring({"x"});
  CHECK(listing(squarefree_factorization(P(r, "x^2*(x+1)"))) == Listing{{"x", 2}, {"x + 1", 1}});
  CHECK(listing(squarefree_factorization(P(r, "x^2 + 1"))) == Listing{{"x^2 + 1", 1}});
  CHECK(listing(squarefree_factorization(P(r, "(x - 1)^3"))) == Listing{{"x - 1", 3}});
  auto f = P(r, "3*(x^2 - 2)^2*(x + 5)");
  CHECK(squarefree_factorization(f).expand(r) == f);
}

TEST_CASE("univariate factorization") {
  auto r = testing::ring({"x"});
  CHECK(listing(factor_univariate(P(r, "x^2 - 1"))) == Listing{{"x + 1", 1}, {"x - 1", 1}});
  CHECK(listing(factor_univariate(P(r, "x^2 + 1"))) == Listing{{"x^2 + 1", 1}});
  auto cubic = factor_univariate(P(r, "x^3 + x + 2"));
  CHECK(listing(cubic) == Listing{{"x + 1", 1}, {"x^2 - x + 2", 1}});
  CHECK(cubic.expand(r) == P(r, "x^3 + x + 2"));
  // Negative discriminant: the quadratic factor is irreducible.
  CHECK(oracle::irreducible_small({2, -1, 1}));

  CHECK(listing(factor_univariate(P(r, "x^4 + 4"))) ==
        Listing{{"x^2 + 2*x + 2", 1}, {"x^2 - 2*x + 2", 1}});
  CHECK(factor_univariate(P(r, "x^4 - 10*x^2 + 1")).factors.size() == 1);
  CHECK(factor_univariate(P(r, "x^8 - 1")).factors.size() == 4);

  auto scaled = P(r, "-6*x^2 + 3/2");
  auto fz = factor_univariate(scaled);
  CHECK(fz.expand(r) == scaled);
  CHECK(fz.unit == Rational(-6));

  auto two = testing::ring({"x", "y"});
  CHECK_THROWS_AS(factor_univariate(P(two, "x*y")), InvalidInput);
  CHECK_THROWS_AS(factor_univariate(Polynomial(r)), InvalidInput);
}

TEST_CASE("univariate factors agree with the brute-force oracle") {
  auto r = testing::ring({"x"});
  oracle::RandomPolys gen(31);
  for (int k = 0; k < 60; ++k) {
    auto f = gen.univariate(r, static_cast<unsigned>(gen.uniform(2, 4)), 6);
    auto fz = factor_univariate(f);
    CHECK(fz.expand(r) == f);
    for (const auto& piece : fz.factors) {
      auto cleared = piece.factor.scaled(Rational(1));
      // Clear denominators before consulting the integer oracle.
      Integer lcm = 1;
      for (const auto& t : cleared.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
      CHECK(oracle::irreducible_small(oracle::integer_coefficients(cleared.scaled(Rational(lcm)))));
    }
  }
}

TEST_CASE("multivariate gcd and content") {
  auto r = testing::ring({"x", "y"});
  CHECK(polynomial_gcd(P(r, "x^2 - y^2"), P(r, "x^2 + 2*x*y + y^2")) == P(r, "x + y"));
  CHECK(polynomial_gcd(P(r, "2*x"), P(r, "3*y")) == P(r, "1"));
  CHECK(content_in(P(r, "x*y^2 + x^2*y"), 0) == P(r, "y"));
}

TEST_CASE("multivariate factorization") {
  auto r = testing::ring({"x", "y", "z"});
  for (const char* text : {"x^2 - y^2", "x^3 - 3*y^2*x + 2*y^3", "(x - y*z)^2*(x^2 + z)*(y + 1)",
                           "y^2*(x^2 + y*z)*(x^2 - y*z)", "(x*y + z^2 + 1)*(x - 2*z)"}) {
    auto f = P(r, text);
    auto fz = factor(f);
    CHECK(fz.expand(r) == f);
    for (const auto& piece : fz.factors) CHECK(factor(piece.factor).factors.size() == 1);
  }
  CHECK(listing(factor(P(r, "x^3 - 3*y^2*x + 2*y^3"))) == Listing{{"x + 2*y", 1}, {"x - y", 2}});

  auto inx = factor_in_variable(P(r, "(x - y)^2*(x + 2*y)*(y^2 + 1)"), 0);
  std::vector<std::pair<std::string, unsigned>> got;
  for (const auto& piece : inx) got.emplace_back(piece.factor.to_string(), piece.multiplicity);
  std::sort(got.begin(), got.end());
  CHECK(got == Listing{{"x + 2*y", 1}, {"x - y", 2}});
}
