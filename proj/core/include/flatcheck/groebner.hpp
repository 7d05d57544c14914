#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flatcheck/guards.hpp"
#include "flatcheck/polyring.hpp"

namespace flatcheck {

struct GroebnerBasis {
  RingPtr ring;  // carries `order` as its default order
  MonomialOrder order;
  std::vector<Polynomial> generators;
  bool reduced = false;
  std::size_t pairs_processed = 0;

  bool is_unit() const;
};

struct BuchbergerOptions {
  bool coprime_criterion = true;
  bool chain_criterion = true;
  bool reduce = true;
};

/// f = sum(quotients[i] * divisors[i]) + remainder.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Full multivariate division; divisors are tried in listed order. All
/// polynomials are moved into `f`'s variables under `order`.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order);

/// Throws InvalidInput on a zero argument.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Buchberger's algorithm: normal selection strategy (smallest lcm in the
/// term order, which for degree orders means smallest lcm degree) with ties broken by
/// pair index, Gebauer-Moeller pair update. Deterministic for a fixed input.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         const MonomialOrder& order, const Guards& guards = current_guards(),
                         const BuchbergerOptions& options = {});

/// Minimal, tail-reduced, monic basis sorted by descending leading monomial.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

}  // namespace flatcheck
