#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flatcheck {

using Rational = mpq_class;
using Integer = mpz_class;
using Exponent = std::uint32_t;

/// Exponent vector over the variables of a ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; `divisor` must divide *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial with_exponent(std::size_t index, Exponent e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  std::size_t hash() const noexcept;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { lex, degrevlex, block };

/// One block of a block order: the listed variables are compared with
/// `kind` (lex or degrevlex) in the listed sequence.
struct OrderBlock {
  std::vector<std::size_t> variables;
  OrderKind kind = OrderKind::degrevlex;
  friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

/// Global monomial order. Lex and degrevlex rank variables by ring index
/// (index 0 is the largest variable).
class MonomialOrder {
 public:
  static MonomialOrder lex();
  static MonomialOrder degrevlex();
  static MonomialOrder block(std::vector<OrderBlock> blocks);
  /// Two-block elimination order: `first` block dominates the rest,
  /// both under degrevlex.
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& first);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<OrderBlock>& blocks() const noexcept { return blocks_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Stable key, e.g. "degrevlex" or "block(dp[0,2];lp[1])".
  std::string descriptor() const;
  /// Throws VariableClash unless the blocks partition 0..nvars-1.
  void validate(std::size_t nvars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::degrevlex;
  std::vector<OrderBlock> blocks_;
};

/// Throws VariableClash when the monomials live over different variable counts.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Q[v1,...,vk] with a default monomial order.
class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> variables,
                      MonomialOrder order = MonomialOrder::degrevlex());

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return variables_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of, but throws VariableClash for unknown names.
  std::size_t require_index(std::string_view name) const;

  RingPtr with_order(MonomialOrder order) const;
  bool same_variables(const PolyRing& other) const { return variables_ == other.variables_; }
  /// "Q[x,y]"
  std::string describe() const;

 private:
  PolyRing(std::vector<std::string> variables, MonomialOrder order);

  std::vector<std::string> variables_;
  std::map<std::string, std::size_t, std::less<>> index_;
  MonomialOrder order_;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial with rational coefficients. Terms are kept sorted
/// descending in the ring's default order with no zero coefficients, so
/// equal polynomials have identical term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);
  /// Canonicalizes arbitrary input: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::optional<Rational> constant_value() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  std::uint64_t total_degree() const noexcept;
  Exponent degree_in(std::size_t var) const noexcept;
  bool involves(std::size_t var) const noexcept;
  /// Indices of the variables that occur.
  std::vector<std::size_t> support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  /// Leading coefficient scaled to 1; zero stays zero.
  Polynomial monic() const;
  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;

  /// Same polynomial re-sorted for a ring over the same variables.
  Polynomial in_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void check_compatible(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g);

/// Re-canonicalizes f. Idempotent.
Polynomial normalize(const Polynomial& f);

/// Exact division in the multivariate sense; nullopt unless divisor | f.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& divisor);

/// Ring homomorphism Q[source] -> Q[target] fixed by the images of the
/// source variables.
class VarMap {
 public:
  VarMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

  /// Sends each source variable to the target variable of the same name,
  /// except those listed in `overrides` (source name -> image).
  static VarMap by_name(RingPtr source, RingPtr target,
                        const std::map<std::string, Polynomial, std::less<>>& overrides = {});
  static VarMap identity(RingPtr ring);

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }

  Polynomial operator()(const Polynomial& f) const;
  /// (other ∘ this): apply this map first, then `other`.
  VarMap then(const VarMap& other) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> images_;
  // For pure renamings: target index of each source variable.
  std::optional<std::vector<std::size_t>> renaming_;
};

Polynomial apply_map(const Polynomial& f, const VarMap& map);

/// Rational -> "p/q" or "p".
std::string rational_to_string(const Rational& q);

}  // namespace flatcheck
