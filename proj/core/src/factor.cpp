#include "flatcheck/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "dense.hpp"
#include "flatcheck/errors.hpp"
#include "flatcheck/guards.hpp"

namespace flatcheck {

using dense::PPoly;
using dense::QPoly;
using dense::ZPoly;

namespace {

// ---------------------------------------------------------------------------
// conversions

QPoly to_dense(const Polynomial& f, std::size_t var) {
  QPoly q(f.is_zero() ? 0 : f.degree_in(var) + 1);
  for (const auto& t : f.terms()) q[t.monomial[var]] += t.coeff;
  dense::trim(q);
  return q;
}

Polynomial from_dense(const RingPtr& ring, std::size_t var, const QPoly& q) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (sgn(q[i]) == 0) continue;
    terms.push_back(Term{Monomial::variable(ring->size(), var, static_cast<Exponent>(i)), q[i]});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

// f = sum_k coeffs[k] * var^k
std::vector<Polynomial> coeffs_in(const Polynomial& f, std::size_t var) {
  std::vector<std::vector<Term>> buckets(f.is_zero() ? 0 : f.degree_in(var) + 1);
  for (const auto& t : f.terms())
    buckets[t.monomial[var]].push_back(Term{t.monomial.with_exponent(var, 0), t.coeff});
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.ring(), std::move(b)));
  return out;
}

Polynomial leading_coeff_in(const Polynomial& f, std::size_t var) {
  const Exponent d = f.degree_in(var);
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    if (t.monomial[var] == d) terms.push_back(Term{t.monomial.with_exponent(var, 0), t.coeff});
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial divide_exactly(const Polynomial& f, const Polynomial& d) {
  auto q = exact_divide(f, d);
  if (!q) throw Error("internal: expected exact division by " + d.to_string());
  return *q;
}

Polynomial one(const RingPtr& ring) { return Polynomial::constant(ring, 1); }

void sort_factors(std::vector<Factor>& factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    if (a.factor.total_degree() != b.factor.total_degree())
      return a.factor.total_degree() < b.factor.total_degree();
    const auto sa = a.factor.to_string(), sb = b.factor.to_string();
    if (sa != sb) return sa < sb;
    return a.multiplicity < b.multiplicity;
  });
}

// ---------------------------------------------------------------------------
// univariate Yun and Zassenhaus

std::vector<std::pair<QPoly, unsigned>> yun_dense(const QPoly& f) {
  std::vector<std::pair<QPoly, unsigned>> out;
  const QPoly fp = dense::derivative(f);
  QPoly a = dense::gcd(f, fp);
  QPoly b = dense::divmod(f, a).first;
  QPoly c = dense::divmod(fp, a).first;
  QPoly d = dense::sub(c, dense::derivative(b));
  for (unsigned i = 1; dense::degree(b) > 0; ++i) {
    a = dense::gcd(b, d);
    if (dense::degree(a) > 0) out.emplace_back(a, i);
    b = dense::divmod(b, a).first;
    c = dense::divmod(d, a).first;
    d = dense::sub(c, dense::derivative(b));
  }
  return out;
}

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    constexpr std::size_t limit = 1U << 16;
    std::vector<bool> composite(limit, false);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      if (i > 2) out.push_back(i);
      for (std::size_t j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

mpz_class symmetric_mod(const mpz_class& c, const mpz_class& m) {
  mpz_class r = c % m;
  if (sgn(r) < 0) r += m;
  if (r * 2 > m) r -= m;
  return r;
}

ZPoly reduce_mod(const ZPoly& a, const mpz_class& m) {
  ZPoly r = a;
  for (auto& c : r) {
    c %= m;
    if (sgn(c) < 0) c += m;
  }
  dense::trim(r);
  return r;
}

ZPoly lift_ppoly(const PPoly& p) {
  ZPoly z;
  z.reserve(p.size());
  for (auto c : p) z.emplace_back(static_cast<unsigned long>(c));
  return z;
}

// Coefficient bound for factors of f (scaled to share f's leading coefficient).
mpz_class factor_bound(const ZPoly& f) {
  mpz_class sum_sq = 0;
  for (const auto& c : f) sum_sq += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), sum_sq.get_mpz_t());
  norm += 1;
  mpz_class bound = norm * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(dense::degree(f)));
  return bound;
}

struct ModularImage {
  std::uint64_t prime = 0;
  std::vector<PPoly> factors;
};

ModularImage choose_prime(const ZPoly& f) {
  std::mt19937_64 rng(0xfac7012eULL);
  ModularImage best;
  int tried = 0;
  for (auto p : small_primes()) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    dense::PrimeField F(p);
    const PPoly fp = F.from(f);
    if (dense::degree(F.gcd(fp, F.derivative(fp))) > 0) continue;
    auto factors = F.factor_squarefree(fp, rng);
    if (best.prime == 0 || factors.size() < best.factors.size()) {
      best.prime = p;
      best.factors = std::move(factors);
    }
    if (best.factors.size() == 1 || ++tried >= 5) break;
  }
  if (best.prime == 0) throw Error("internal: no prime keeps the polynomial squarefree");
  return best;
}

// Linear multifactor Hensel lifting of monic factors of f/lc(f) mod p to mod p^k.
std::vector<ZPoly> hensel_lift_integer(const ZPoly& f, const ModularImage& image, unsigned k) {
  const std::uint64_t p = image.prime;
  const dense::PrimeField F(p);
  const auto& g = image.factors;
  const std::size_t r = g.size();

  std::vector<PPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    PPoly others{1};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = F.mul(others, g[j]);
    s[i] = F.inverse_mod(others, g[i]);
  }

  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
  ZPoly target = f;
  for (auto& c : target) c *= lc_inv;
  target = reduce_mod(target, pk);

  std::vector<ZPoly> G;
  for (const auto& gi : g) G.push_back(lift_ppoly(gi));

  mpz_class pj = static_cast<unsigned long>(p);
  for (unsigned j = 1; j < k; ++j) {
    current_guards().check_time();
    const mpz_class next = pj * static_cast<unsigned long>(p);
    ZPoly prod{mpz_class(1)};
    for (const auto& Gi : G) prod = reduce_mod(dense::mul(prod, Gi), next);
    ZPoly e(std::max(target.size(), prod.size()));
    for (std::size_t t = 0; t < target.size(); ++t) e[t] += target[t];
    for (std::size_t t = 0; t < prod.size(); ++t) e[t] -= prod[t];
    e = reduce_mod(e, next);
    if (e.empty()) {
      pj = next;
      continue;
    }
    ZPoly scaled_e = e;
    for (auto& c : scaled_e) c /= pj;
    const PPoly ep = F.from(scaled_e);
    for (std::size_t i = 0; i < r; ++i) {
      const ZPoly sigma = lift_ppoly(F.rem(F.mul(s[i], ep), g[i]));
      if (G[i].size() < sigma.size()) G[i].resize(sigma.size());
      for (std::size_t t = 0; t < sigma.size(); ++t) G[i][t] += pj * sigma[t];
    }
    pj = next;
  }
  return G;
}

template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t size, Visit&& visit) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void count_subset(std::size_t& tested) {
  const auto& guards = current_guards();
  if (++tested > guards.max_recombination_subsets)
    throw GuardExceeded("max_recombination_subsets",
                        "factor recombination tried more than " +
                            std::to_string(guards.max_recombination_subsets) + " subsets");
  if ((tested & 63U) == 0) guards.check_time();
}

// Irreducible factors of a primitive squarefree f with positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  if (dense::degree(f) <= 1) return {f};
  const ModularImage image = choose_prime(f);
  if (image.factors.size() == 1) return {f};

  const mpz_class bound = factor_bound(f) * 2;
  unsigned k = 1;
  mpz_class pk = static_cast<unsigned long>(image.prime);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(image.prime);
    ++k;
  }
  std::vector<ZPoly> pool = hensel_lift_integer(f, image, k);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::size_t tested = 0;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    const bool hit = for_each_subset(pool.size(), size, [&](const std::vector<std::size_t>& idx) {
      count_subset(tested);
      ZPoly cand{rest.back()};
      for (auto i : idx) cand = reduce_mod(dense::mul(cand, pool[i]), pk);
      for (auto& c : cand) c = symmetric_mod(c, pk);
      dense::trim(cand);
      const mpz_class cont = dense::content(cand);
      for (auto& c : cand) c /= cont;
      if (sgn(cand.back()) < 0)
        for (auto& c : cand) c = -c;
      ZPoly quotient;
      if (!dense::exact_divide(rest, cand, quotient)) return false;
      found.push_back(cand);
      rest = std::move(quotient);
      for (std::size_t j = idx.size(); j-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[j]));
      return true;
    });
    if (!hit) ++size;
  }
  if (dense::degree(rest) > 0) found.push_back(rest);
  return found;
}

// Monic irreducible factors of a squarefree polynomial over Q.
std::vector<QPoly> factor_squarefree_dense(const QPoly& f) {
  if (dense::degree(f) <= 1) return {dense::monic(f)};
  std::vector<QPoly> out;
  for (const auto& z : zassenhaus(dense::primitive_integer(f)))
    out.push_back(dense::monic(dense::to_rational(z)));
  return out;
}

std::size_t univariate_variable(const Polynomial& f, const char* what) {
  if (f.is_zero()) throw InvalidInput(std::string(what) + " of the zero polynomial");
  const auto support = f.support();
  if (support.size() > 1)
    throw InvalidInput(std::string(what) + " expects a univariate polynomial, got " + f.to_string());
  return support.empty() ? 0 : support.front();
}

// ---------------------------------------------------------------------------
// multivariate gcd (primitive PRS)

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const Exponent db = b.degree_in(var);
  const Polynomial lb = leading_coeff_in(b, var);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const Exponent k = r.degree_in(var) - db;
    const Polynomial lr = leading_coeff_in(r, var);
    r = lb * r - lr * b.mul_term(Monomial::variable(a.ring()->size(), var, k), 1);
  }
  return r;
}

// f scaled to integral coefficients with trivial integer content, so that
// remainder sequences do not accumulate numeric factors.
Polynomial integral_primitive(const Polynomial& f) {
  mpz_class den = 1, num = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  if (num == 0) return f;
  Rational scale(den, num);
  scale.canonicalize();
  return f.scaled(scale);
}

Polynomial primitive_part(const Polynomial& f, std::size_t var) {
  return integral_primitive(divide_exactly(f, content_in(f, var)));
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return one(a.ring());

  std::size_t var = a.ring()->size();
  for (std::size_t i = 0; i < a.ring()->size(); ++i) {
    if (a.involves(i) || b.involves(i)) {
      var = i;
      break;
    }
  }
  if (!a.involves(var)) return gcd_impl(a, content_in(b, var));
  if (!b.involves(var)) return gcd_impl(content_in(a, var), b);

  const Polynomial ca = content_in(a, var), cb = content_in(b, var);
  const Polynomial c = gcd_impl(ca, cb);
  Polynomial pa = integral_primitive(divide_exactly(a, ca));
  Polynomial pb = integral_primitive(divide_exactly(b, cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  Polynomial g = one(a.ring());
  while (true) {
    current_guards().check_time();
    const Polynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(var) == 0) break;
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  g = primitive_part(g, var);
  return (c * g).monic();
}

// ---------------------------------------------------------------------------
// multivariate factorization in one variable

std::vector<std::pair<Polynomial, unsigned>> yun_in(const Polynomial& f, std::size_t var) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  const Polynomial fp = f.derivative(var);
  Polynomial a = gcd_impl(f, fp);
  Polynomial b = divide_exactly(f, a);
  Polynomial c = divide_exactly(fp, a);
  Polynomial d = c - b.derivative(var);
  for (unsigned i = 1; b.degree_in(var) > 0; ++i) {
    a = gcd_impl(b, d);
    if (a.degree_in(var) > 0) out.emplace_back(a, i);
    b = divide_exactly(b, a);
    c = divide_exactly(d, a);
    d = c - b.derivative(var);
  }
  return out;
}

std::uint64_t other_degree(const Monomial& m, std::size_t var) { return m.degree() - m[var]; }

// Product of `factors`, dropping every term whose degree in the variables
// other than `var` exceeds `cap`.
Polynomial truncated_product(const RingPtr& ring, const std::vector<const Polynomial*>& factors,
                             std::size_t var, std::uint64_t cap) {
  Polynomial acc = one(ring);
  for (const Polynomial* f : factors) {
    std::unordered_map<Monomial, Rational, MonomialHash> sums;
    for (const auto& s : acc.terms()) {
      const auto ds = other_degree(s.monomial, var);
      for (const auto& t : f->terms()) {
        if (ds + other_degree(t.monomial, var) > cap) continue;
        sums[s.monomial * t.monomial] += s.coeff * t.coeff;
      }
    }
    std::vector<Term> terms;
    terms.reserve(sums.size());
    for (auto& [m, c] : sums) terms.push_back(Term{m, std::move(c)});
    acc = Polynomial::from_terms(ring, std::move(terms));
  }
  return acc;
}

// F is monic in `var` of total degree d, F(var, 0) = prod g; lift the
// factorization to precision d+1 in the other variables.
std::vector<Polynomial> hensel_lift_multivariate(const Polynomial& F, const std::vector<QPoly>& g,
                                                 std::size_t var, std::uint64_t d) {
  const RingPtr& ring = F.ring();
  const std::size_t r = g.size();
  std::vector<QPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    QPoly others{mpq_class(1)};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = dense::mul(others, g[j]);
    s[i] = dense::inverse_mod(others, g[i]);
  }
  std::vector<Polynomial> G;
  for (const auto& gi : g) G.push_back(from_dense(ring, var, gi));

  for (std::uint64_t k = 1; k <= d; ++k) {
    current_guards().check_time();
    std::vector<const Polynomial*> ptrs;
    for (const auto& Gi : G) ptrs.push_back(&Gi);
    const Polynomial err = F - truncated_product(ring, ptrs, var, k);
    std::unordered_map<Monomial, QPoly, MonomialHash> slices;
    for (const auto& t : err.terms()) {
      if (other_degree(t.monomial, var) != k) continue;
      QPoly& e = slices[t.monomial.with_exponent(var, 0)];
      if (e.size() <= t.monomial[var]) e.resize(t.monomial[var] + 1);
      e[t.monomial[var]] = t.coeff;
    }
    for (auto& [mu, e] : slices) {
      dense::trim(e);
      for (std::size_t i = 0; i < r; ++i) {
        const QPoly sigma = dense::rem(dense::mul(s[i], e), g[i]);
        if (sigma.empty()) continue;
        G[i] += from_dense(ring, var, sigma).mul_term(mu, 1);
      }
    }
  }
  return G;
}

std::vector<Polynomial> recombine_multivariate(Polynomial rest, std::vector<Polynomial> pool,
                                               std::size_t var) {
  const RingPtr ring = rest.ring();
  std::vector<Polynomial> found;
  std::size_t tested = 0;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    const bool hit = for_each_subset(pool.size(), size, [&](const std::vector<std::size_t>& idx) {
      count_subset(tested);
      std::vector<const Polynomial*> ptrs;
      std::uint64_t e = 0;
      for (auto i : idx) {
        ptrs.push_back(&pool[i]);
        e += pool[i].degree_in(var);
      }
      const Polynomial cand = truncated_product(ring, ptrs, var, e);
      auto quotient = exact_divide(rest, cand);
      if (!quotient) return false;
      found.push_back(cand);
      rest = std::move(*quotient);
      for (std::size_t j = idx.size(); j-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[j]));
      return true;
    });
    if (!hit) ++size;
  }
  if (rest.degree_in(var) > 0) found.push_back(rest);
  return found;
}

bool squarefree_dense(const QPoly& f) { return dense::degree(dense::gcd(f, dense::derivative(f))) == 0; }

// Irreducible factors in `var` of a squarefree, primitive f.
std::vector<Polynomial> factor_squarefree_in(const Polynomial& f, std::size_t var) {
  const RingPtr& ring = f.ring();
  std::vector<std::size_t> others;
  for (auto i : f.support())
    if (i != var) others.push_back(i);
  if (others.empty()) {
    std::vector<Polynomial> out;
    for (const auto& q : factor_squarefree_dense(to_dense(f, var))) out.push_back(from_dense(ring, var, q));
    return out;
  }

  const std::uint64_t d = f.total_degree();
  const std::size_t n = ring->size();
  std::vector<Polynomial> identity;
  for (std::size_t i = 0; i < n; ++i) identity.push_back(Polynomial::variable(ring, i));
  const Polynomial v = identity[var];

  std::mt19937_64 rng(0x5eedfac7ULL + d);
  for (int attempt = 0; attempt < 64; ++attempt) {
    current_guards().check_time();
    const long radius = 1 + attempt / 4;
    std::uniform_int_distribution<long> pick(-radius, radius);

    // Shear so that var^d occurs with a constant coefficient.
    std::vector<long> shear(n, 0);
    if (attempt > 0)
      for (auto u : others) shear[u] = pick(rng);
    auto images = identity;
    for (auto u : others) images[u] = identity[u] + v.scaled(shear[u]);
    const Polynomial sheared = VarMap(ring, ring, images)(f);
    if (sheared.degree_in(var) != d || !leading_coeff_in(sheared, var).is_constant()) continue;

    // Evaluation point keeping the image squarefree.
    std::vector<long> point(n, 0);
    if (attempt > 0)
      for (auto u : others) point[u] = pick(rng);
    images = identity;
    for (auto u : others) images[u] = identity[u] + Polynomial::constant(ring, point[u]);
    Polynomial shifted = VarMap(ring, ring, images)(sheared);
    images = identity;
    for (auto u : others) images[u] = Polynomial::constant(ring, 0);
    const QPoly image = to_dense(VarMap(ring, ring, images)(shifted), var);
    if (dense::degree(image) != static_cast<int>(d) || !squarefree_dense(image)) continue;

    const auto univariate = factor_squarefree_dense(image);
    if (univariate.size() == 1) return {f.monic()};

    shifted = shifted.scaled(1 / leading_coeff_in(shifted, var).constant_value().value());
    auto lifted = hensel_lift_multivariate(shifted, univariate, var, d);
    auto pieces = recombine_multivariate(shifted, std::move(lifted), var);

    // Undo the shift, then the shear.
    images = identity;
    for (auto u : others) images[u] = identity[u] - Polynomial::constant(ring, point[u]);
    const VarMap unshift(ring, ring, images);
    images = identity;
    for (auto u : others) images[u] = identity[u] - v.scaled(shear[u]);
    const VarMap unshear(ring, ring, images);
    std::vector<Polynomial> out;
    for (const auto& piece : pieces) out.push_back(unshear(unshift(piece)).monic());
    return out;
  }
  throw GenericityFailure("factorization found no admissible shear and evaluation point for " +
                          f.to_string());
}

}  // namespace

Polynomial Factorization::expand(const RingPtr& ring) const {
  Polynomial acc = Polynomial::constant(ring, unit);
  for (const auto& f : factors) acc *= f.factor.in_ring(ring).pow(f.multiplicity);
  return acc;
}

Factorization squarefree_factorization(const Polynomial& f) {
  const std::size_t var = univariate_variable(f, "squarefree factorization");
  Factorization out{f.leading_coeff(), {}};
  if (f.is_constant()) return out;
  for (auto& [part, m] : yun_dense(dense::monic(to_dense(f, var))))
    out.factors.push_back(Factor{from_dense(f.ring(), var, part), m});
  return out;
}

Factorization factor_univariate(const Polynomial& f) {
  const std::size_t var = univariate_variable(f, "univariate factorization");
  Factorization out{f.leading_coeff(), {}};
  if (f.is_constant()) return out;
  for (auto& [part, m] : yun_dense(dense::monic(to_dense(f, var))))
    for (const auto& q : factor_squarefree_dense(part))
      out.factors.push_back(Factor{from_dense(f.ring(), var, q), m});
  sort_factors(out.factors);
  return out;
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (!a.ring()->same_variables(*b.ring()))
    throw VariableClash("gcd of polynomials over different variables");
  return gcd_impl(a, b.in_ring(a.ring()));
}

Polynomial content_in(const Polynomial& f, std::size_t var) {
  if (f.is_zero()) return f;
  Polynomial g(f.ring());
  for (const auto& c : coeffs_in(f, var)) {
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_constant()) return one(f.ring());
  }
  return g;
}

std::vector<Factor> factor_in_variable(const Polynomial& f, std::size_t var) {
  if (f.is_zero()) throw InvalidInput("factorization of the zero polynomial");
  std::vector<Factor> out;
  if (!f.involves(var)) return out;
  for (auto& [part, m] : yun_in(primitive_part(f, var), var))
    for (auto& piece : factor_squarefree_in(part, var)) out.push_back(Factor{piece.monic(), m});
  sort_factors(out);
  return out;
}

Factorization factor(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("factorization of the zero polynomial");
  Factorization out{f.leading_coeff(), {}};
  if (f.is_constant()) return out;
  const std::size_t var = f.support().front();
  const Polynomial cont = content_in(f, var);
  out.factors = factor_in_variable(divide_exactly(f, cont), var);
  if (!cont.is_constant())
    for (auto& piece : factor(cont).factors) out.factors.push_back(std::move(piece));
  sort_factors(out.factors);
  return out;
}

}  // namespace flatcheck
