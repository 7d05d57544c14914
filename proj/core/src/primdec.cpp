#include "flatcheck/primdec.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "flatcheck/errors.hpp"
#include "flatcheck/guards.hpp"

namespace flatcheck {

namespace {

struct Context {
  DecompositionOptions options;
  std::mt19937_64 rng;
  unsigned retries = 0;
};

// Block order with the `x` block above the `u` block (and optionally a
// middle block), each block degrevlex. Empty blocks are skipped.
MonomialOrder stacked_order(const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<OrderBlock> out;
  for (const auto& b : blocks)
    if (!b.empty()) out.push_back(OrderBlock{b, OrderKind::degrevlex});
  return MonomialOrder::block(std::move(out));
}

Monomial restrict_to(const Monomial& m, const std::vector<bool>& keep) {
  Monomial r = m;
  for (std::size_t v = 0; v < keep.size(); ++v)
    if (!keep[v] && m[v] != 0) r = r.with_exponent(v, 0);
  return r;
}

std::vector<bool> mask_of(std::size_t n, const std::vector<std::size_t>& vars) {
  std::vector<bool> mask(n, false);
  for (auto v : vars) mask[v] = true;
  return mask;
}

// Leading coefficient of g over Q(u), for g from a block basis with x ≫ u.
Polynomial leading_coefficient_over(const Polynomial& g, const std::vector<bool>& is_x,
                                    const RingPtr& ring) {
  const Monomial lead_x = restrict_to(g.leading_monomial(), is_x);
  std::vector<bool> is_u(is_x.size());
  for (std::size_t v = 0; v < is_x.size(); ++v) is_u[v] = !is_x[v];
  std::vector<Term> terms;
  for (const auto& t : g.terms())
    if (restrict_to(t.monomial, is_x) == lead_x) terms.push_back(Term{restrict_to(t.monomial, is_u), t.coeff});
  return Polynomial::from_terms(ring, std::move(terms));
}

// Product of the distinct irreducible factors of f (characteristic zero).
Polynomial radical_of(const Polynomial& f) {
  Polynomial g = f;
  for (auto v : f.support()) g = polynomial_gcd(g, f.derivative(v));
  return exact_divide(f, g)->monic();
}

// Squarefree lcm of the leading coefficients over Q[u] of a block-order
// basis; the extension contracts to I : h^inf. Saturating by it is the same
// as saturating by the full lcm, at a much lower degree.
Polynomial lead_coefficient_lcm(const Ideal& ideal, const std::vector<std::size_t>& x,
                                const std::vector<std::size_t>& u) {
  const RingPtr& ring = ideal.ring();
  Polynomial h = Polynomial::constant(ring, 1);
  if (u.empty()) return h;
  const auto basis = ideal.groebner(stacked_order({x, u}));
  const auto is_x = mask_of(ring->size(), x);
  for (const auto& g : basis->generators) {
    // The leading monomial must be taken in the block order of the basis.
    const Polynomial lc = leading_coefficient_over(g, is_x, g.ring()).in_ring(ring);
    if (lc.is_constant()) continue;
    const Polynomial c = radical_of(lc);
    const Polynomial common = polynomial_gcd(h, c);
    h = (h * *exact_divide(c, common)).monic();
  }
  return h;
}

// I·Q(u)[x] ∩ Q[x,u]
Ideal contract_extension(const Ideal& ideal, const std::vector<std::size_t>& x,
                         const std::vector<std::size_t>& u) {
  const Polynomial h = lead_coefficient_lcm(ideal, x, u);
  if (h.is_constant()) return ideal.canonical();
  return saturate(ideal, h).ideal.canonical();
}

// Q(u)-dimension of Q(u)[x]/I·Q(u)[x]; nullopt when it is not finite.
std::optional<std::size_t> dimension_over_u(const Ideal& ideal, const std::vector<std::size_t>& x,
                                            const std::vector<std::size_t>& u) {
  const std::size_t n = ideal.ring()->size();
  const auto basis = ideal.groebner(stacked_order({x, u}));
  if (basis->is_unit()) return 0;
  const auto is_x = mask_of(n, x);
  std::vector<std::vector<Exponent>> leads;
  for (const auto& g : basis->generators) {
    const Monomial m = g.leading_monomial();
    std::vector<Exponent> e;
    for (auto v : x) e.push_back(m[v]);
    leads.push_back(std::move(e));
  }
  std::vector<Exponent> bound(x.size(), 0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (const auto& e : leads) {
      bool pure = e[j] > 0;
      for (std::size_t k = 0; k < x.size() && pure; ++k)
        if (k != j && e[k] != 0) pure = false;
      if (pure && (bound[j] == 0 || e[j] < bound[j])) bound[j] = e[j];
    }
    if (bound[j] == 0) return std::nullopt;
  }
  std::size_t count = 0;
  std::vector<Exponent> cur(x.size(), 0);
  while (true) {
    const bool standard = std::none_of(leads.begin(), leads.end(), [&](const auto& e) {
      for (std::size_t k = 0; k < x.size(); ++k)
        if (e[k] > cur[k]) return false;
      return true;
    });
    if (standard) ++count;
    std::size_t k = 0;
    while (k < x.size() && ++cur[k] == bound[k]) cur[k++] = 0;
    if (k == x.size()) break;
  }
  return count;
}

// Element of minimal positive degree in `var` among basis elements that
// avoid `others`: the minimal polynomial of `var` over Q(u), up to content.
std::optional<Polynomial> minimal_polynomial(const Ideal& ideal, std::size_t var,
                                             const std::vector<std::size_t>& others,
                                             const std::vector<std::size_t>& u) {
  const auto basis = ideal.groebner(stacked_order({others, {var}, u}));
  std::optional<Polynomial> best;
  for (const auto& g : basis->generators) {
    if (std::any_of(others.begin(), others.end(), [&](std::size_t v) { return g.involves(v); }))
      continue;
    if (!g.involves(var)) continue;
    if (!best || g.degree_in(var) < best->degree_in(var)) best = g.in_ring(ideal.ring());
  }
  return best;
}

Polynomial squarefree_part_in(const Polynomial& f, std::size_t var) {
  const Polynomial g = polynomial_gcd(f, f.derivative(var));
  return *exact_divide(f, g);
}

Ideal with_generators(const Ideal& ideal, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = ideal.generators();
  for (const auto& f : extra) gens.push_back(f.in_ring(ideal.ring()));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal map_ideal(const Ideal& ideal, const VarMap& map) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map(g));
  return Ideal(ideal.ring(), std::move(gens));
}

// Primary decomposition of I·Q(u)[x], contracted back to Q[x,u]. The
// intersection of the result is I : h^inf.
std::vector<PrimaryComponent> split_extension(const Ideal& ideal, const std::vector<std::size_t>& x,
                                              const std::vector<std::size_t>& u, Context& ctx) {
  const RingPtr& ring = ideal.ring();
  const std::size_t last = x.back();
  const std::vector<std::size_t> front(x.begin(), x.end() - 1);

  std::vector<Polynomial> identity;
  for (std::size_t v = 0; v < ring->size(); ++v) identity.push_back(Polynomial::variable(ring, v));

  for (unsigned attempt = 0; attempt <= ctx.options.retry_budget; ++attempt) {
    current_guards().check_time();
    if (attempt > 0) ++ctx.retries;
    // x_last -> x_last + sum c_j x_j; the first attempt keeps the given coordinates.
    std::uniform_int_distribution<int> draw(-7, 7);
    Polynomial linear = identity[last];
    for (auto j : front) linear += identity[j].scaled(attempt == 0 ? 0 : draw(ctx.rng));
    auto images = identity;
    images[last] = linear;
    const VarMap forward(ring, ring, images);
    images[last] = identity[last] * Polynomial::constant(ring, 2) - linear;
    const VarMap backward(ring, ring, images);

    const Ideal moved = map_ideal(ideal, forward);
    const auto g = minimal_polynomial(moved, last, front, u);
    if (!g) throw NotZeroDimensional("ideal is not zero-dimensional over the independent variables");

    std::vector<PrimaryComponent> out;
    bool shaped = true;
    for (const auto& [p, e] : factor_in_variable(*g, last)) {
      const Ideal primary = with_generators(moved, {p.pow(e)});
      Ideal reduced = with_generators(moved, {p});
      // Seidenberg: adding squarefree parts of the coordinate minimal
      // polynomials yields the radical.
      std::vector<Polynomial> parts;
      for (auto j : front) {
        std::vector<std::size_t> rest;
        for (auto k : x)
          if (k != j) rest.push_back(k);
        const auto mu = minimal_polynomial(reduced, j, rest, u);
        if (mu) parts.push_back(squarefree_part_in(*mu, j));
      }
      reduced = with_generators(reduced, parts);
      const Ideal prime = contract_extension(reduced, x, u);
      // Shape position certificate: the residue field is generated by x_last.
      const auto dim = dimension_over_u(prime, x, u);
      if (prime.is_unit() || !dim || *dim != p.degree_in(last)) {
        shaped = false;
        break;
      }
      out.push_back(PrimaryComponent{map_ideal(contract_extension(primary, x, u), backward).canonical(),
                                     map_ideal(prime, backward).canonical()});
    }
    if (shaped) return out;
  }
  throw GenericityFailure("no coordinate change within the retry budget (" +
                          std::to_string(ctx.options.retry_budget) +
                          ") put the ideal in shape position; try another seed");
}

std::vector<PrimaryComponent> gtz(const Ideal& ideal, Context& ctx) {
  current_guards().check_time();
  if (ideal.is_unit()) return {};
  const RingPtr& ring = ideal.ring();
  if (ideal.is_zero()) return {PrimaryComponent{ideal, ideal}};

  const auto u = maximal_independent_set(ideal);
  std::vector<std::size_t> x;
  for (std::size_t v = 0; v < ring->size(); ++v)
    if (std::find(u.begin(), u.end(), v) == u.end()) x.push_back(v);

  auto comps = split_extension(ideal, x, u, ctx);
  const Polynomial h = lead_coefficient_lcm(ideal, x, u);
  if (h.is_constant()) return comps;
  // Split off one irreducible factor f of h at a time:
  // J = (J : f^inf) ∩ (J + f^s). What is left at the end is I : h^inf,
  // whose components came from the extension.
  Ideal remaining = ideal;
  for (const auto& piece : factor(h).factors) {
    const Saturation sat = saturate(remaining, piece.factor);
    if (sat.exponent == 0) continue;
    const Ideal rest = with_generators(remaining, {piece.factor.pow(sat.exponent)});
    remaining = sat.ideal;
    for (auto& c : gtz(rest, ctx)) comps.push_back(std::move(c));
  }
  return comps;
}

bool strictly_contains(const Ideal& big, const Ideal& small) {
  return big.contains(small) && !small.contains(big);
}

std::vector<PrimaryComponent> irredundant(std::vector<PrimaryComponent> comps) {
  // Merge components that share a prime.
  std::map<std::string, PrimaryComponent> by_prime;
  for (auto& c : comps) {
    const std::string key = c.prime.to_string();
    auto it = by_prime.find(key);
    if (it == by_prime.end()) {
      by_prime.emplace(key, std::move(c));
    } else {
      it->second.primary = intersect(it->second.primary, c.primary).canonical();
    }
  }
  std::vector<PrimaryComponent> out;
  for (auto& [key, c] : by_prime) out.push_back(std::move(c));

  // Only components over non-minimal primes can be redundant.
  for (std::size_t k = 0; k < out.size();) {
    const bool embedded = std::any_of(out.begin(), out.end(), [&](const PrimaryComponent& o) {
      return &o != &out[k] && strictly_contains(out[k].prime, o.prime);
    });
    if (embedded) {
      std::vector<Ideal> others;
      for (std::size_t j = 0; j < out.size(); ++j)
        if (j != k) others.push_back(out[j].primary);
      if (out[k].primary.contains(intersect_all(others))) {
        out.erase(out.begin() + static_cast<long>(k));
        continue;
      }
    }
    ++k;
  }
  return out;
}

void require_proper(const Ideal& ideal, const char* what) {
  if (!ideal.is_zero() && ideal.is_unit())
    throw InvalidInput(std::string(what) + " of the unit ideal");
}

void record(const Context& ctx, DecompositionStats* stats) {
  if (!stats) return;
  stats->seed = ctx.options.seed;
  stats->retries += ctx.retries;
}

}  // namespace

std::vector<PrimaryComponent> zero_dim_decompose(const Ideal& ideal, const DecompositionOptions& options,
                                                 DecompositionStats* stats) {
  if (dimension(ideal) != 0)
    throw NotZeroDimensional("zero-dimensional decomposition needs a zero-dimensional ideal, got dimension " +
                             std::to_string(dimension(ideal)));
  Context ctx{options, std::mt19937_64(options.seed), 0};
  std::vector<std::size_t> x(ideal.ring()->size());
  for (std::size_t v = 0; v < x.size(); ++v) x[v] = v;
  auto out = irredundant(split_extension(ideal, x, {}, ctx));
  record(ctx, stats);
  return out;
}

std::vector<PrimaryComponent> decompose(const Ideal& ideal, const DecompositionOptions& options,
                                        DecompositionStats* stats) {
  require_proper(ideal, "primary decomposition");
  Context ctx{options, std::mt19937_64(options.seed), 0};
  auto out = irredundant(gtz(ideal, ctx));
  record(ctx, stats);
  return out;
}

std::vector<Ideal> associated_primes(const Ideal& ideal, const DecompositionOptions& options,
                                     DecompositionStats* stats) {
  std::vector<Ideal> primes;
  for (auto& c : decompose(ideal, options, stats)) primes.push_back(std::move(c.prime));
  return primes;
}

std::vector<Ideal> minimal_elements(const std::vector<Ideal>& primes) {
  std::vector<Ideal> out;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    bool minimal = true;
    for (std::size_t j = 0; j < primes.size() && minimal; ++j)
      if (j != k && strictly_contains(primes[k], primes[j])) minimal = false;
    if (minimal) out.push_back(primes[k]);
  }
  return out;
}

RadicalResult radical_and_minimal(const Ideal& ideal, const DecompositionOptions& options,
                                  DecompositionStats* stats) {
  auto minimal = minimal_elements(associated_primes(ideal, options, stats));
  Ideal radical = intersect_all(minimal).canonical();
  return {std::move(radical), std::move(minimal)};
}

}  // namespace flatcheck
