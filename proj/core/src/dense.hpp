#pragma once

// Dense univariate arithmetic over Q, Z and Z/p used by the factorizer.
// Coefficient vectors are stored lowest degree first with no trailing zeros;
// the zero polynomial is the empty vector.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace flatcheck::dense {

using QPoly = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;
using PPoly = std::vector<std::uint64_t>;

template <typename P>
int degree(const P& p) {
  return static_cast<int>(p.size()) - 1;
}

// ---- Q[x] ----------------------------------------------------------------

void trim(QPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
/// s with s*a ≡ 1 (mod m); a and m coprime.
QPoly inverse_mod(const QPoly& a, const QPoly& m);

// ---- Z[x] ----------------------------------------------------------------

void trim(ZPoly& p);
mpz_class content(const ZPoly& p);
/// Clears denominators and content; leading coefficient positive.
ZPoly primitive_integer(const QPoly& p);
QPoly to_rational(const ZPoly& p);
ZPoly mul(const ZPoly& a, const ZPoly& b);
/// Quotient when b divides a exactly over Z.
bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

// ---- Z/p[x] ----------------------------------------------------------------

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}
  std::uint64_t modulus() const { return p_; }

  std::uint64_t reduce(const mpz_class& z) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t inv(std::uint64_t a) const;

  void trim(PPoly& p) const;
  PPoly from(const ZPoly& z) const;
  PPoly add(const PPoly& a, const PPoly& b) const;
  PPoly sub(const PPoly& a, const PPoly& b) const;
  PPoly mul(const PPoly& a, const PPoly& b) const;
  PPoly scale(const PPoly& a, std::uint64_t c) const;
  std::pair<PPoly, PPoly> divmod(const PPoly& a, const PPoly& b) const;
  PPoly rem(const PPoly& a, const PPoly& b) const;
  PPoly monic(const PPoly& a) const;
  PPoly gcd(PPoly a, PPoly b) const;
  PPoly derivative(const PPoly& a) const;
  PPoly powmod(PPoly base, const mpz_class& exponent, const PPoly& m) const;
  PPoly inverse_mod(const PPoly& a, const PPoly& m) const;
  /// Monic irreducible factors of a monic squarefree polynomial.
  std::vector<PPoly> factor_squarefree(const PPoly& f, std::mt19937_64& rng) const;

 private:
  std::vector<std::pair<PPoly, int>> distinct_degree(PPoly f) const;
  void equal_degree(const PPoly& f, int d, std::mt19937_64& rng, std::vector<PPoly>& out) const;

  std::uint64_t p_;
};

}  // namespace flatcheck::dense
