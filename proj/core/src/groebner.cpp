#include "flatcheck/groebner.hpp"

#include <algorithm>
#include <set>

#include "flatcheck/errors.hpp"

namespace flatcheck {

namespace {

using Terms = std::vector<Term>;

Terms terms_of(const Polynomial& p) { return Terms(p.terms().begin(), p.terms().end()); }

// ---------------------------------------------------------------------------
// Rational division with quotient bookkeeping (used by `divide`).

/// Returns p[start..] - c*m*g where c*m*LT(g) cancels p[start] exactly;
/// both cancelled terms are skipped.
Terms cancel_lead(const Terms& p, std::size_t start, const Rational& c, const Monomial& m,
                  const Terms& g, const MonomialOrder& order) {
  Terms out;
  out.reserve(p.size() - start + g.size());
  std::size_t i = start + 1, j = 1;
  while (i < p.size() && j < g.size()) {
    Monomial gm = g[j].monomial * m;
    auto cmp = order.compare(p[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), -c * g[j].coeff});
      ++j;
    } else {
      Rational s = p[i].coeff - c * g[j].coeff;
      if (sgn(s) != 0) out.push_back(Term{std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  for (; j < g.size(); ++j) out.push_back(Term{g[j].monomial * m, -c * g[j].coeff});
  return out;
}

Terms divide_terms(Terms p, const std::vector<const Terms*>& basis, const MonomialOrder& order,
                   std::vector<Terms>& quotients) {
  Terms remainder;
  std::size_t start = 0;
  while (start < p.size()) {
    const Term& lt = p[start];
    std::size_t k = 0;
    while (k < basis.size() && !(*basis[k])[0].monomial.divides(lt.monomial)) ++k;
    if (k == basis.size()) {
      remainder.push_back(lt);
      ++start;
      continue;
    }
    const Terms& g = *basis[k];
    Monomial m = lt.monomial / g[0].monomial;
    Rational c = lt.coeff / g[0].coeff;
    p = cancel_lead(p, start, c, m, g, order);
    start = 0;
    quotients[k].push_back(Term{std::move(m), std::move(c)});
  }
  return remainder;
}

// ---------------------------------------------------------------------------
// Fraction-free integer arithmetic for the basis computation. Polynomials are
// kept primitive with positive leading coefficient, which keeps coefficient
// growth far below that of monic rational arithmetic.

struct ZTerm {
  Monomial monomial;
  Integer coeff;
};
using ZTerms = std::vector<ZTerm>;

/// p = scale * terms, terms primitive and integral.
struct Integral {
  ZTerms terms;
  Rational scale;
};

Integral to_integral(std::span<const Term> p) {
  Integer den = 1;
  for (const auto& t : p) den = lcm(den, Integer(t.coeff.get_den()));
  ZTerms out;
  out.reserve(p.size());
  Integer g = 0;
  for (const auto& t : p) {
    Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
    g = gcd(g, c);
    out.push_back(ZTerm{t.monomial, std::move(c)});
  }
  if (out.empty()) return {std::move(out), Rational(1)};
  if (sgn(out.front().coeff) < 0) g = -g;
  for (auto& t : out) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  Rational scale(g, den);
  scale.canonicalize();
  return {std::move(out), scale};
}

/// Divides p (and `companion`, sharing the content) by the common content,
/// signed so that the leading coefficient of the companion, or of p without
/// one, is positive. Returns the divisor used.
Integer make_primitive(ZTerms& p, ZTerms* companion = nullptr) {
  Integer g = 0;
  auto fold = [&](const ZTerms& t) {
    for (const auto& term : t) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
      if (g == 1) return;
    }
  };
  fold(p);
  if (companion && g != 1) fold(*companion);
  if (g == 0) return Integer(1);
  const ZTerms& lead_source = (companion && !companion->empty()) ? *companion : p;
  if (!lead_source.empty() && sgn(lead_source.front().coeff) < 0) g = -g;
  if (g == 1) return g;
  for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  if (companion)
    for (auto& t : *companion) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  return g;
}

/// a*p[start+1..] - b*m*g[1..]; the leads cancel because a*lc(p) = b*lc(g).
ZTerms cancel_lead_z(const ZTerms& p, std::size_t start, const Integer& a, const Integer& b,
                     const Monomial& m, const ZTerms& g, const MonomialOrder& order) {
  ZTerms out;
  out.reserve(p.size() - start + g.size());
  const bool scale_p = a != 1;
  std::size_t i = start + 1, j = 1;
  auto push_p = [&](const ZTerm& t) {
    if (scale_p) out.push_back(ZTerm{t.monomial, a * t.coeff});
    else out.push_back(t);
  };
  while (i < p.size() && j < g.size()) {
    Monomial gm = g[j].monomial * m;
    auto cmp = order.compare(p[i].monomial, gm);
    if (cmp > 0) {
      push_p(p[i++]);
    } else if (cmp < 0) {
      out.push_back(ZTerm{std::move(gm), -b * g[j].coeff});
      ++j;
    } else {
      Integer s = a * p[i].coeff - b * g[j].coeff;
      if (sgn(s) != 0) out.push_back(ZTerm{std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) push_p(p[i]);
  for (; j < g.size(); ++j) out.push_back(ZTerm{g[j].monomial * m, -b * g[j].coeff});
  return out;
}

std::uint64_t total_degree(const ZTerms& t) {
  std::uint64_t deg = 0;
  for (const auto& term : t) deg = std::max(deg, term.monomial.degree());
  return deg;
}

// a*cp = b*cg with a, b coprime and a > 0.
void common_multipliers(const Integer& cp, const Integer& cg, Integer& a, Integer& b) {
  Integer g = gcd(cp, cg);
  if (sgn(cg) < 0) g = -g;
  mpz_divexact(a.get_mpz_t(), cg.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), cp.get_mpz_t(), g.get_mpz_t());
}

struct ZReducer {
  const MonomialOrder& order;
  const std::vector<const ZTerms*>& basis;
  const Guards* guards = nullptr;

  const ZTerms* find_divisor(const Monomial& m) const {
    for (const ZTerms* g : basis)
      if (g->front().monomial.divides(m)) return g;
    return nullptr;
  }

  /// Full reduction. The true remainder is `scale` times the result.
  ZTerms full_reduce(ZTerms p, Rational& scale) const {
    ZTerms remainder;
    std::size_t steps = 0;
    std::size_t start = 0;
    while (start < p.size()) {
      const ZTerms* g = find_divisor(p[start].monomial);
      if (!g) {
        remainder.push_back(std::move(p[start]));
        ++start;
        continue;
      }
      if (guards && (++steps & 0xffU) == 0) guards->check_time();
      Integer a, b;
      common_multipliers(p[start].coeff, g->front().coeff, a, b);
      const Monomial m = p[start].monomial / g->front().monomial;
      p = cancel_lead_z(p, start, a, b, m, *g, order);
      start = 0;
      if (a != 1) {
        for (auto& t : remainder) t.coeff *= a;
        scale /= a;
      }
      if ((steps & 0x7U) == 0) scale *= make_primitive(p, &remainder);
    }
    scale *= make_primitive(remainder);
    return remainder;
  }
};

Polynomial to_monic_polynomial(const RingPtr& ring, const ZTerms& p) {
  if (p.empty()) return Polynomial(ring);
  std::vector<Term> terms;
  terms.reserve(p.size());
  const Integer& lead = p.front().coeff;
  for (const auto& t : p) {
    Rational c(t.coeff, lead);
    c.canonicalize();
    terms.push_back(Term{t.monomial, std::move(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> prepare(const RingPtr& ring, std::span<const Polynomial> polys) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.in_ring(ring));
  return out;
}

}  // namespace

bool GroebnerBasis::is_unit() const {
  return std::any_of(generators.begin(), generators.end(), [](const Polynomial& g) {
    return !g.is_zero() && g.is_constant();
  });
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order) {
  RingPtr ring = f.ring()->order() == order ? f.ring() : f.ring()->with_order(order);
  std::vector<Polynomial> divs = prepare(ring, divisors);
  std::vector<Terms> storage;
  std::vector<std::size_t> index;  // storage slot -> divisor position
  for (std::size_t k = 0; k < divs.size(); ++k) {
    if (divs[k].is_zero()) continue;
    storage.push_back(terms_of(divs[k]));
    index.push_back(k);
  }
  std::vector<const Terms*> basis;
  for (const auto& s : storage) basis.push_back(&s);
  std::vector<Terms> q(storage.size());
  Terms rem = divide_terms(terms_of(f.in_ring(ring)), basis, order, q);

  DivisionResult result{{}, Polynomial::from_terms(f.ring(), std::move(rem))};
  result.quotients.assign(divisors.size(), Polynomial(f.ring()));
  for (std::size_t s = 0; s < storage.size(); ++s)
    result.quotients[index[s]] = Polynomial::from_terms(f.ring(), std::move(q[s]));
  return result;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
  RingPtr ring = f.ring()->order() == order ? f.ring() : f.ring()->with_order(order);
  std::vector<ZTerms> storage;
  for (const auto& d : divisors) {
    if (!d.ring()->same_variables(*f.ring()))
      throw VariableClash("normal form against polynomials of another ring");
    if (!d.is_zero()) storage.push_back(to_integral(d.in_ring(ring).terms()).terms);
  }
  std::vector<const ZTerms*> basis;
  for (const auto& s : storage) basis.push_back(&s);
  ZReducer reducer{order, basis, &current_guards()};
  Integral start = to_integral(f.in_ring(ring).terms());
  Rational scale = start.scale;
  ZTerms rem = reducer.full_reduce(std::move(start.terms), scale);
  std::vector<Term> terms;
  terms.reserve(rem.size());
  for (auto& t : rem) terms.push_back(Term{std::move(t.monomial), scale * t.coeff});
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw InvalidInput("S-polynomial of a zero polynomial");
  if (!f.ring()->same_variables(*g.ring())) throw VariableClash("S-polynomial across rings");
  RingPtr ring = f.ring()->order() == order ? f.ring() : f.ring()->with_order(order);
  const Polynomial a = f.in_ring(ring), b = g.in_ring(ring);
  const Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  Polynomial s = a.mul_term(l / a.leading_monomial(), 1 / a.leading_coeff()) -
                 b.mul_term(l / b.leading_monomial(), 1 / b.leading_coeff());
  return s.in_ring(f.ring());
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

struct PairOrder {
  const MonomialOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (auto c = order->compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class BuchbergerRun {
 public:
  BuchbergerRun(RingPtr ring, const Guards& guards, const BuchbergerOptions& options)
      : ring_(std::move(ring)), order_(ring_->order()), guards_(guards), options_(options),
        pairs_(PairOrder{&order_}) {}

  void insert(ZTerms h) {
    polys_.push_back(std::move(h));
    active_.push_back(true);
    update(polys_.size() - 1);
  }

  void run() {
    while (!pairs_.empty()) {
      guards_.check_time();
      if (++processed_ > guards_.max_pairs)
        throw GuardExceeded("max_pairs", "more than " + std::to_string(guards_.max_pairs) + " S-pairs");
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ZTerms s = spoly(p.i, p.j);
      if (s.empty()) continue;
      std::vector<const ZTerms*> basis;
      for (std::size_t k = 0; k < polys_.size(); ++k)
        if (active_[k]) basis.push_back(&polys_[k]);
      ZReducer reducer{order_, basis, &guards_};
      Rational scale = 1;
      ZTerms r = reducer.full_reduce(std::move(s), scale);
      if (r.empty()) continue;
      const std::uint64_t deg = total_degree(r);
      if (deg > guards_.max_degree)
        throw GuardExceeded("max_degree",
                            "intermediate degree " + std::to_string(deg) + " exceeds " +
                                std::to_string(guards_.max_degree));
      insert(std::move(r));
      if (polys_.back().front().monomial.is_one()) {
        pairs_.clear();
        return;
      }
    }
  }

  std::vector<Polynomial> basis() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(to_monic_polynomial(ring_, polys_[k]));
    return out;
  }

  std::size_t processed() const { return processed_; }

 private:
  const Monomial& lm(std::size_t k) const { return polys_[k].front().monomial; }

  ZTerms spoly(std::size_t i, std::size_t j) const {
    const ZTerms& a = polys_[i];
    const ZTerms& b = polys_[j];
    const Monomial l = lm(i).lcm(lm(j));
    const Monomial ma = l / lm(i), mb = l / lm(j);
    ZTerms lhs;
    lhs.reserve(a.size());
    for (const auto& t : a) lhs.push_back(ZTerm{t.monomial * ma, t.coeff});
    Integer x, y;
    common_multipliers(a.front().coeff, b.front().coeff, x, y);
    ZTerms s = cancel_lead_z(lhs, 0, x, y, mb, b, order_);
    make_primitive(s);
    return s;
  }

  void update(std::size_t h) {
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < h; ++k)
      if (active_[k]) candidates.push_back(k);

    std::vector<std::size_t> kept;
    if (options_.chain_criterion) {
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        const std::size_t g1 = candidates[c];
        bool keep = lm(g1).coprime(lm(h));
        if (!keep) {
          const Monomial l1 = lm(g1).lcm(lm(h));
          keep = true;
          for (std::size_t d = c + 1; d < candidates.size() && keep; ++d)
            if (lm(candidates[d]).lcm(lm(h)).divides(l1)) keep = false;
          for (std::size_t g2 : kept) {
            if (!keep) break;
            if (lm(g2).lcm(lm(h)).divides(l1)) keep = false;
          }
        }
        if (keep) kept.push_back(g1);
      }
    } else {
      kept = candidates;
    }

    if (options_.chain_criterion) {
      const Monomial& lh = lm(h);
      for (auto it = pairs_.begin(); it != pairs_.end();) {
        if (lh.divides(it->lcm) && !(lm(it->i).lcm(lh) == it->lcm) &&
            !(lm(it->j).lcm(lh) == it->lcm)) {
          it = pairs_.erase(it);
        } else {
          ++it;
        }
      }
    }

    for (std::size_t g : kept) {
      if (options_.coprime_criterion && lm(g).coprime(lm(h))) continue;
      pairs_.insert(Pair{g, h, lm(g).lcm(lm(h))});
    }

    if (options_.chain_criterion) {
      for (std::size_t g : candidates)
        if (lm(h).divides(lm(g))) active_[g] = false;
    }
  }

  RingPtr ring_;
  const MonomialOrder& order_;
  const Guards& guards_;
  BuchbergerOptions options_;
  std::vector<ZTerms> polys_;
  std::vector<bool> active_;
  std::set<Pair, PairOrder> pairs_;
  std::size_t processed_ = 0;
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         const MonomialOrder& order, const Guards& guards,
                         const BuchbergerOptions& options) {
  order.validate(ring->size());
  RingPtr work = ring->order() == order ? ring : ring->with_order(order);
  GroebnerBasis result{work, order, {}, false, 0};
  BuchbergerRun run(work, guards, options);
  for (const auto& g : generators) {
    if (!g.ring()->same_variables(*ring))
      throw VariableClash("generator from " + g.ring()->describe() + " in " + ring->describe());
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      result.generators = {Polynomial::constant(work, 1)};
      result.reduced = true;
      return result;
    }
    run.insert(to_integral(g.in_ring(work).terms()).terms);
  }
  run.run();
  result.generators = run.basis();
  result.pairs_processed = run.processed();
  if (options.reduce) {
    auto reduced = reduce_basis(result);
    reduced.pairs_processed = result.pairs_processed;
    return reduced;
  }
  return result;
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  const MonomialOrder& order = basis.order;
  RingPtr ring = basis.ring;
  std::vector<ZTerms> polys;
  for (const auto& g : basis.generators) {
    if (g.is_zero()) continue;
    polys.push_back(to_integral(g.in_ring(ring).terms()).terms);
  }
  std::stable_sort(polys.begin(), polys.end(), [&](const ZTerms& a, const ZTerms& b) {
    return order.compare(a.front().monomial, b.front().monomial) < 0;
  });
  std::vector<ZTerms> minimal;
  for (auto& p : polys) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const ZTerms& q) {
      return q.front().monomial.divides(p.front().monomial);
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  // Ascending by leading monomial: each tail is reduced against smaller,
  // already reduced elements first.
  std::vector<ZTerms> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const ZTerms*> others;
    for (std::size_t l = 0; l < k; ++l) others.push_back(&reduced[l]);
    for (std::size_t l = k + 1; l < minimal.size(); ++l) others.push_back(&minimal[l]);
    ZReducer reducer{order, others, &current_guards()};
    const Integer lead = minimal[k].front().coeff;
    ZTerms tail(minimal[k].begin() + 1, minimal[k].end());
    Rational scale = 1;
    ZTerms r = reducer.full_reduce(std::move(tail), scale);
    // lead*m + scale*r, cleared of the denominator of scale.
    const Integer num = scale.get_num(), den = scale.get_den();
    ZTerms out;
    out.reserve(r.size() + 1);
    out.push_back(ZTerm{minimal[k].front().monomial, lead * den});
    for (auto& t : r) out.push_back(ZTerm{std::move(t.monomial), t.coeff * num});
    make_primitive(out);
    reduced.push_back(std::move(out));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ZTerms& a, const ZTerms& b) {
    return order.compare(a.front().monomial, b.front().monomial) > 0;
  });
  GroebnerBasis out{ring, order, {}, true, basis.pairs_processed};
  for (const auto& r : reduced) out.generators.push_back(to_monic_polynomial(ring, r));
  return out;
}

}  // namespace flatcheck
