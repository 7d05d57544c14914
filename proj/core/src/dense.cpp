#include "dense.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatcheck::dense {

// ---- Q[x] ----------------------------------------------------------------

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
  if (sgn(c) == 0) return {};
  QPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  QPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  const mpq_class lead_inv = 1 / b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpq_class c = r[k + b.size() - 1] * lead_inv;
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

QPoly rem(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, 1 / a.back());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  // Extended Euclid on (m, a): track the coefficient of a.
  QPoly r0 = m, r1 = rem(a, m);
  QPoly t0, t1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly t = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.size() != 1) throw std::domain_error("inverse_mod: arguments not coprime");
  return rem(scale(t0, 1 / r0[0]), m);
}

// ---- Z[x] ----------------------------------------------------------------

void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

ZPoly primitive_integer(const QPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p) den = lcm(den, c.get_den());
  ZPoly z;
  z.reserve(p.size());
  for (const auto& c : p) z.push_back(c.get_num() * (den / c.get_den()));
  trim(z);
  if (z.empty()) return z;
  const mpz_class g = content(z);
  for (auto& c : z) c /= g;
  if (sgn(z.back()) < 0)
    for (auto& c : z) c = -c;
  return z;
}

QPoly to_rational(const ZPoly& p) {
  QPoly q;
  q.reserve(p.size());
  for (const auto& c : p) q.emplace_back(c);
  return q;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) return false;
  ZPoly r = a;
  trim(r);
  if (r.empty()) {
    quotient.clear();
    return true;
  }
  if (r.size() < b.size()) return false;
  // Cheap necessary condition on the constant terms.
  if (sgn(b[0]) != 0 && sgn(r[0]) != 0 && !mpz_divisible_p(r[0].get_mpz_t(), b[0].get_mpz_t()))
    return false;
  ZPoly q(r.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = r[k + b.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
    const mpz_class c = top / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

// ---- Z/p[x] ----------------------------------------------------------------

std::uint64_t PrimeField::reduce(const mpz_class& z) const {
  mpz_class r = z % static_cast<unsigned long>(p_);
  if (sgn(r) < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

void PrimeField::trim(PPoly& p) const {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

PPoly PrimeField::from(const ZPoly& z) const {
  PPoly r;
  r.reserve(z.size());
  for (const auto& c : z) r.push_back(reduce(c));
  trim(r);
  return r;
}

PPoly PrimeField::add(const PPoly& a, const PPoly& b) const {
  PPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
  trim(r);
  return r;
}

PPoly PrimeField::sub(const PPoly& a, const PPoly& b) const {
  PPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
  trim(r);
  return r;
}

PPoly PrimeField::mul(const PPoly& a, const PPoly& b) const {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
  }
  trim(r);
  return r;
}

PPoly PrimeField::scale(const PPoly& a, std::uint64_t c) const {
  PPoly r = a;
  for (auto& x : r) x = mul(x, c);
  trim(r);
  return r;
}

std::pair<PPoly, PPoly> PrimeField::divmod(const PPoly& a, const PPoly& b) const {
  if (b.empty()) throw std::domain_error("polynomial division by zero mod p");
  PPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  PPoly q(r.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = mul(r[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = sub(r[k + j], mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

PPoly PrimeField::rem(const PPoly& a, const PPoly& b) const { return divmod(a, b).second; }

PPoly PrimeField::monic(const PPoly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

PPoly PrimeField::gcd(PPoly a, PPoly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

PPoly PrimeField::derivative(const PPoly& a) const {
  if (a.size() <= 1) return {};
  PPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p_);
  trim(r);
  return r;
}

PPoly PrimeField::powmod(PPoly base, const mpz_class& exponent, const PPoly& m) const {
  PPoly result{1};
  base = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t b = bits; b-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(exponent.get_mpz_t(), b)) result = rem(mul(result, base), m);
  }
  return result;
}

PPoly PrimeField::inverse_mod(const PPoly& a, const PPoly& m) const {
  PPoly r0 = m, r1 = rem(a, m);
  PPoly t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    PPoly t = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.size() != 1) throw std::domain_error("inverse_mod: arguments not coprime mod p");
  return rem(scale(t0, inv(r0[0])), m);
}

std::vector<std::pair<PPoly, int>> PrimeField::distinct_degree(PPoly f) const {
  std::vector<std::pair<PPoly, int>> out;
  const PPoly x{0, 1};
  PPoly h = x;
  const mpz_class p = static_cast<unsigned long>(p_);
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(h, p, f);
    PPoly g = gcd(sub(h, x), f);
    if (degree(g) > 0) {
      out.emplace_back(g, i);
      f = divmod(f, g).first;
      h = rem(h, f);
    }
  }
  if (degree(f) > 0) out.emplace_back(monic(f), degree(f));
  return out;
}

void PrimeField::equal_degree(const PPoly& f, int d, std::mt19937_64& rng,
                              std::vector<PPoly>& out) const {
  if (degree(f) == d) {
    out.push_back(monic(f));
    return;
  }
  mpz_class exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), p_, static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p_ - 1);
  while (true) {
    PPoly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) < 1) continue;
    PPoly b = sub(powmod(a, exponent, f), PPoly{1});
    PPoly g = gcd(b, f);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

std::vector<PPoly> PrimeField::factor_squarefree(const PPoly& f, std::mt19937_64& rng) const {
  std::vector<PPoly> out;
  for (auto& [g, d] : distinct_degree(monic(f))) equal_degree(g, d, rng, out);
  std::sort(out.begin(), out.end(), [](const PPoly& a, const PPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace flatcheck::dense
