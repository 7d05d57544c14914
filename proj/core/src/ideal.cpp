#include "flatcheck/ideal.hpp"

#include <algorithm>
#include <functional>

#include "flatcheck/errors.hpp"
#include "flatcheck/guards.hpp"

namespace flatcheck {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw InvalidInput("ideal without a ring");
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    if (!g.ring()->same_variables(*ring_))
      throw VariableClash("generator from " + g.ring()->describe() + " in an ideal of " +
                          ring_->describe());
    if (g.is_zero()) continue;
    generators_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::of(RingPtr ring, std::initializer_list<Polynomial> generators) {
  return Ideal(std::move(ring), std::vector<Polynomial>(generators));
}

Ideal::BasisPtr Ideal::groebner(const MonomialOrder& order) const {
  const std::string key = order.descriptor();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  auto basis = std::make_shared<const GroebnerBasis>(
      buchberger(ring_, generators_, order, current_guards()));
  std::lock_guard lock(cache_->mutex);
  return cache_->bases.emplace(key, std::move(basis)).first->second;
}

bool Ideal::is_unit() const { return groebner()->is_unit(); }

bool Ideal::contains(const Polynomial& f) const {
  if (!f.ring()->same_variables(*ring_))
    throw VariableClash("membership of a polynomial from " + f.ring()->describe() + " in " +
                        ring_->describe());
  if (f.is_zero()) return true;
  if (generators_.empty()) return false;
  auto basis = groebner();
  return normal_form(f, basis->generators, ring_->order()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Polynomial& g) { return contains(g); });
}

Ideal Ideal::canonical() const {
  auto basis = groebner();
  std::vector<Polynomial> gens;
  for (const auto& g : basis->generators) gens.push_back(g.in_ring(ring_));
  Ideal out(ring_, std::move(gens));
  std::lock_guard lock(cache_->mutex);
  out.cache_->bases = cache_->bases;
  return out;
}

Ideal Ideal::in_ring(const RingPtr& target) const { return Ideal(target, generators_); }

std::string Ideal::to_string() const {
  if (generators_.empty()) return "(0)";
  auto basis = groebner();
  std::string s = "(";
  for (std::size_t i = 0; i < basis->generators.size(); ++i) {
    if (i) s += ", ";
    s += basis->generators[i].in_ring(ring_).to_string();
  }
  return s + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!a.ring_->same_variables(*b.ring_)) return false;
  return a.contains(b) && b.contains(a);
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

// ---------------------------------------------------------------------------
// Helpers

std::string fresh_variable(const PolyRing& ring, const std::string& stem) {
  if (!ring.index_of(stem)) return stem;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!ring.index_of(candidate)) return candidate;
  }
}

Polynomial transfer(const Polynomial& f, const RingPtr& target) {
  const auto& src = f.ring()->variables();
  std::vector<std::optional<std::size_t>> where(src.size());
  for (std::size_t v = 0; v < src.size(); ++v) where[v] = target->index_of(src[v]);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(target->size(), 0);
    for (std::size_t v = 0; v < src.size(); ++v) {
      if (t.monomial[v] == 0) continue;
      if (!where[v])
        throw VariableClash("variable '" + src[v] + "' does not exist in " + target->describe());
      e[*where[v]] = t.monomial[v];
    }
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Ideal transfer(const Ideal& ideal, const RingPtr& target) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(transfer(g, target));
  return Ideal(target, std::move(gens));
}

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_variables(*b.ring()))
    throw VariableClash("ideals from different rings: " + a.ring()->describe() + " vs " +
                        b.ring()->describe());
}

/// Ring with one fresh variable in front, plus the elimination order that
/// puts it in its own leading block.
struct ExtendedRing {
  RingPtr ring;
  std::size_t aux = 0;
};

ExtendedRing extend_front(const PolyRing& base, const std::string& stem) {
  std::vector<std::string> vars;
  vars.push_back(fresh_variable(base, stem));
  for (const auto& v : base.variables()) vars.push_back(v);
  const std::size_t n = vars.size();
  return {PolyRing::make(std::move(vars), MonomialOrder::elimination(n, {0})), 0};
}

}  // namespace

// ---------------------------------------------------------------------------
// Operations

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) {
    const Polynomial h = g.in_ring(a.ring());
    if (std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(h);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  if (a.is_unit()) return b.in_ring(a.ring());
  if (b.is_unit()) return a;
  auto ext = extend_front(*a.ring(), "_t");
  const Polynomial t = Polynomial::variable(ext.ring, ext.aux);
  const Polynomial one_minus_t = Polynomial::constant(ext.ring, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * transfer(f, ext.ring));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * transfer(g, ext.ring));
  const auto basis = buchberger(ext.ring, gens, ext.ring->order());
  std::vector<Polynomial> kept;
  for (const auto& g : basis.generators)
    if (!g.involves(ext.aux)) kept.push_back(transfer(g, a.ring()));
  return Ideal(a.ring(), std::move(kept));
}

Ideal intersect_all(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw InvalidInput("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k]);
  return acc;
}

Ideal quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("ideal quotient by the zero polynomial");
  const Polynomial g = f.in_ring(ideal.ring());
  if (g.is_constant()) return ideal;
  if (ideal.is_zero()) return ideal;
  const Ideal meet = intersect(ideal, Ideal(ideal.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) {
    auto q = exact_divide(h, g);
    if (!q) throw Error("internal: intersection element not divisible by the quotient polynomial");
    gens.push_back(std::move(*q));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Saturation saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("saturation by the zero polynomial");
  const Polynomial g = f.in_ring(ideal.ring());
  if (g.is_constant() || ideal.is_zero()) return {ideal, 0};
  // (I : f^inf) = (I + <1 - t f>) ∩ Q[x]
  auto ext = extend_front(*ideal.ring(), "_t");
  std::vector<Polynomial> gens;
  for (const auto& h : ideal.generators()) gens.push_back(transfer(h, ext.ring));
  gens.push_back(Polynomial::constant(ext.ring, 1) -
                 Polynomial::variable(ext.ring, ext.aux) * transfer(g, ext.ring));
  const auto basis = buchberger(ext.ring, gens, ext.ring->order());
  std::vector<Polynomial> kept;
  for (const auto& h : basis.generators)
    if (!h.involves(ext.aux)) kept.push_back(transfer(h, ideal.ring()));
  Saturation result{Ideal(ideal.ring(), std::move(kept)), 0};
  // Smallest s with f^s * sat ⊆ I, i.e. I : f^s already saturated.
  std::vector<Polynomial> probe = result.ideal.generators();
  while (!std::all_of(probe.begin(), probe.end(), [&](const Polynomial& h) { return ideal.contains(h); })) {
    current_guards().check_time();
    for (auto& h : probe) h = h * g;
    ++result.exponent;
  }
  return result;
}

Ideal eliminate_in_place(const Ideal& ideal, const std::vector<std::size_t>& drop) {
  if (drop.empty()) return ideal;
  const RingPtr& ring = ideal.ring();
  const auto order = MonomialOrder::elimination(ring->size(), drop);
  auto basis = ideal.groebner(order);
  std::vector<Polynomial> kept;
  for (const auto& g : basis->generators) {
    const bool free = std::none_of(drop.begin(), drop.end(),
                                   [&](std::size_t v) { return g.involves(v); });
    if (free) kept.push_back(g.in_ring(ring));
  }
  return Ideal(ring, std::move(kept));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop) {
  const RingPtr& ring = ideal.ring();
  std::vector<std::size_t> indices;
  for (const auto& name : drop) indices.push_back(ring->require_index(name));
  std::vector<std::string> remaining;
  for (std::size_t v = 0; v < ring->size(); ++v)
    if (std::find(indices.begin(), indices.end(), v) == indices.end())
      remaining.push_back(ring->variables()[v]);
  const RingPtr sub = PolyRing::make(std::move(remaining));
  return transfer(eliminate_in_place(ideal, indices), sub);
}

Ideal contract_to_base(const Ideal& ideal, const RingPtr& base) {
  const RingPtr& ring = ideal.ring();
  for (const auto& name : base->variables()) {
    if (!ring->index_of(name))
      throw VariableClash("base variable '" + name + "' is missing from " + ring->describe());
  }
  std::vector<std::size_t> drop;
  for (std::size_t v = 0; v < ring->size(); ++v)
    if (!base->index_of(ring->variables()[v])) drop.push_back(v);
  return transfer(eliminate_in_place(ideal, drop), base);
}

std::vector<std::size_t> maximal_independent_set(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->size();
  if (ideal.is_zero()) {
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  auto basis = ideal.groebner();
  if (basis->is_unit()) return {};
  // Supports of the leading monomials as bitmasks over the variables.
  std::vector<std::vector<bool>> supports;
  for (const auto& g : basis->generators) {
    std::vector<bool> s(n, false);
    for (std::size_t v = 0; v < n; ++v) s[v] = g.leading_monomial()[v] != 0;
    supports.push_back(std::move(s));
  }
  std::vector<bool> chosen(n, false);
  std::vector<std::size_t> current, best;
  auto independent = [&]() {
    for (const auto& s : supports) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        if (s[v] && !chosen[v]) inside = false;
      if (inside) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> search = [&](std::size_t v) {
    if (current.size() > best.size()) best = current;
    if (v == n || current.size() + (n - v) <= best.size()) return;
    chosen[v] = true;
    current.push_back(v);
    if (independent()) search(v + 1);
    current.pop_back();
    chosen[v] = false;
    search(v + 1);
  };
  search(0);
  return best;
}

int dimension(const Ideal& ideal) {
  if (!ideal.is_zero() && ideal.is_unit()) return -1;
  return static_cast<int>(maximal_independent_set(ideal).size());
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  if (!f.ring()->same_variables(*ideal.ring()))
    throw VariableClash("radical membership across rings");
  if (f.is_zero()) return true;
  auto ext = extend_front(*ideal.ring(), "_t");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(transfer(g, ext.ring));
  gens.push_back(Polynomial::variable(ext.ring, ext.aux) * transfer(f, ext.ring) -
                 Polynomial::constant(ext.ring, 1));
  const RingPtr plain = ext.ring->with_order(MonomialOrder::degrevlex());
  return buchberger(plain, gens, plain->order()).is_unit();
}

}  // namespace flatcheck
