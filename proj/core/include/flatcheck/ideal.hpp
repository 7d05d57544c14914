#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "flatcheck/groebner.hpp"
#include "flatcheck/polyring.hpp"

namespace flatcheck {

/// Finitely generated ideal of a polynomial ring. Zero generators are
/// dropped. Reduced Groebner bases are cached per monomial order; copies
/// share the cache.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  static Ideal unit(RingPtr ring);
  /// Ideal spanned by the given polynomials, which must share a ring.
  static Ideal of(RingPtr ring, std::initializer_list<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  using BasisPtr = std::shared_ptr<const GroebnerBasis>;

  /// Reduced basis for `order` (computed under the current guards).
  BasisPtr groebner(const MonomialOrder& order) const;
  /// Reduced basis for the ring's default order.
  BasisPtr groebner() const { return groebner(ring_->order()); }

  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  /// Same ideal, generated by its reduced basis in the ring's order.
  Ideal canonical() const;
  /// Ideal with the same generators moved to another ring over the same variables.
  Ideal in_ring(const RingPtr& target) const;

  /// "(g1, g2, ...)" using the reduced basis.
  std::string to_string() const;

  /// Mutual containment.
  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect_all(const std::vector<Ideal>& ideals);
/// (I : f). Throws InvalidInput for f = 0.
Ideal quotient(const Ideal& ideal, const Polynomial& f);

struct Saturation {
  Ideal ideal;
  unsigned exponent = 0;
};
/// (I : f^inf). `exponent` is the least s with I : f^s = I : f^inf, i.e.
/// the number of iterated quotients that enlarge the ideal.
Saturation saturate(const Ideal& ideal, const Polynomial& f);

/// I ∩ Q[remaining variables], returned in that subring (degrevlex).
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop);
/// Elimination ideal kept in the ambient ring.
Ideal eliminate_in_place(const Ideal& ideal, const std::vector<std::size_t>& drop);

/// Contraction of `ideal` to Q[base variables]. Throws VariableClash when a
/// base variable is missing from the ideal's ring.
Ideal contract_to_base(const Ideal& ideal, const RingPtr& base);

/// Krull dimension of Q[x]/I; -1 for the unit ideal.
int dimension(const Ideal& ideal);
/// A maximal-size independent set of variables modulo the leading ideal.
std::vector<std::size_t> maximal_independent_set(const Ideal& ideal);

bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// Name not among `ring`'s variables, derived from `stem`.
std::string fresh_variable(const PolyRing& ring, const std::string& stem);

/// Moves polynomials between rings by matching variable names.
Polynomial transfer(const Polynomial& f, const RingPtr& target);
Ideal transfer(const Ideal& ideal, const RingPtr& target);

}  // namespace flatcheck
