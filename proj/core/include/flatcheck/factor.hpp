#pragma once

#include <cstddef>
#include <vector>

#include "flatcheck/polyring.hpp"

namespace flatcheck {

struct Factor {
  Polynomial factor;
  unsigned multiplicity = 1;
};

/// f = unit * prod factor^multiplicity, factors monic in the ring order.
struct Factorization {
  Rational unit;
  std::vector<Factor> factors;

  Polynomial expand(const RingPtr& ring) const;
};

/// Yun decomposition of a polynomial in at most one variable: pairwise
/// coprime squarefree parts, one per multiplicity. Throws InvalidInput for
/// multivariate or zero input.
Factorization squarefree_factorization(const Polynomial& f);

/// Irreducible factorization over Q of a polynomial in at most one variable.
Factorization factor_univariate(const Polynomial& f);

/// Greatest common divisor in Q[x1..xn], monic in the ring order.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

/// Content of f viewed as a polynomial in `var` over the other variables.
Polynomial content_in(const Polynomial& f, std::size_t var);

/// Irreducible factors of f over Q(other variables)[var], scaled to lie in
/// Q[x1..xn] and be primitive in `var`; factors free of `var` are dropped.
std::vector<Factor> factor_in_variable(const Polynomial& f, std::size_t var);

/// Full irreducible factorization in Q[x1..xn].
Factorization factor(const Polynomial& f);

}  // namespace flatcheck
