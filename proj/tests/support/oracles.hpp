#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flatcheck/ideal.hpp"

namespace oracle {

using flatcheck::Ideal;
using flatcheck::Integer;
using flatcheck::Polynomial;
using flatcheck::Rational;
using flatcheck::RingPtr;

/// Sylvester-matrix resultant of f and g with respect to variable `var`,
/// computed by fraction-free Gaussian elimination.
Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var);

/// Decides f ∈ ⟨gens⟩ by solving sum c_i g_i = f for cofactors c_i of
/// total degree ≤ degree_bound - deg g_i (dense linear algebra over Q).
/// A true answer is a certificate; false only means "no cofactors of that degree".
bool has_cofactors(const Polynomial& f, const std::vector<Polynomial>& gens,
                   unsigned degree_bound);

/// f ∈ √I by searching f^k ∈ I for k ≤ max_power.
bool power_in(const Polynomial& f, const Ideal& ideal, unsigned max_power = 16);

/// Krull dimension as the largest variable subset S with I ∩ Q[S] = 0,
/// each tested by elimination.
int dimension_by_subsets(const Ideal& ideal);

/// Rational roots of an integer polynomial (coefficients lowest degree
/// first) by the rational root theorem.
std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs);

/// Irreducibility over Q for degree ≤ 4 by exhaustion: no rational root,
/// and for degree 4 no split into two quadratics with coefficients bounded
/// by the Mignotte bound.
bool irreducible_small(const std::vector<Integer>& coeffs);

/// Integer coefficients (lowest degree first) of a univariate polynomial
/// with integral coefficients.
std::vector<Integer> integer_coefficients(const Polynomial& f);

/// Seeded generator of small random polynomials and ideals.
class RandomPolys {
 public:
  explicit RandomPolys(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  /// Sparse polynomial with `terms` terms of total degree ≤ max_degree and
  /// coefficients in [-max_coeff, max_coeff] \ {0}.
  Polynomial sparse(const RingPtr& ring, unsigned terms, unsigned max_degree, int max_coeff);
  /// Nonconstant univariate integer polynomial of exactly the given degree.
  Polynomial univariate(const RingPtr& ring, unsigned degree, int max_coeff);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
