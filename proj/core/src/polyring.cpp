#include "flatcheck/polyring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "flatcheck/errors.hpp"

namespace flatcheck {

// ---------------------------------------------------------------------------
// Monomial

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::int32_t>::max();

Exponent checked_add(Exponent a, Exponent b) {
  const std::uint64_t s = std::uint64_t{a} + b;
  if (s > kMaxExponent) throw GuardExceeded("exponent_overflow", "monomial exponent too large");
  return static_cast<Exponent>(s);
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e > kMaxExponent) throw GuardExceeded("exponent_overflow", "monomial exponent too large");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = checked_add(exps_[i], other.exps_[i]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::with_exponent(std::size_t index, Exponent e) const {
  Monomial r = *this;
  r.degree_ = r.degree_ - r.exps_.at(index) + e;
  r.exps_[index] = e;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : exps_) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// MonomialOrder

namespace {

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b,
                                 std::span<const std::size_t> vars) {
  for (std::size_t v : vars) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_degrevlex(const Monomial& a, const Monomial& b,
                                       std::span<const std::size_t> vars) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t v : vars) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da <=> db;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_lex_all(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering compare_degrevlex_all(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = OrderKind::lex;
  return o;
}

MonomialOrder MonomialOrder::degrevlex() { return MonomialOrder{}; }

MonomialOrder MonomialOrder::block(std::vector<OrderBlock> blocks) {
  for (const auto& b : blocks) {
    if (b.kind == OrderKind::block) throw InvalidInput("nested block orders are not supported");
  }
  MonomialOrder o;
  o.kind_ = OrderKind::block;
  o.blocks_ = std::move(blocks);
  return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& first) {
  std::vector<bool> in_first(nvars, false);
  for (std::size_t v : first) in_first.at(v) = true;
  OrderBlock head{first, OrderKind::degrevlex};
  OrderBlock tail{{}, OrderKind::degrevlex};
  for (std::size_t v = 0; v < nvars; ++v)
    if (!in_first[v]) tail.variables.push_back(v);
  std::vector<OrderBlock> blocks;
  if (!head.variables.empty()) blocks.push_back(std::move(head));
  if (!tail.variables.empty()) blocks.push_back(std::move(tail));
  return block(std::move(blocks));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::lex:
      return compare_lex_all(a, b);
    case OrderKind::degrevlex:
      return compare_degrevlex_all(a, b);
    case OrderKind::block:
      for (const auto& blk : blocks_) {
        auto c = blk.kind == OrderKind::lex ? compare_lex(a, b, blk.variables)
                                            : compare_degrevlex(a, b, blk.variables);
        if (c != 0) return c;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::descriptor() const {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::degrevlex:
      return "degrevlex";
    case OrderKind::block: {
      std::ostringstream out;
      out << "block(";
      for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out << ';';
        out << (blocks_[i].kind == OrderKind::lex ? "lp[" : "dp[");
        for (std::size_t j = 0; j < blocks_[i].variables.size(); ++j) {
          if (j) out << ',';
          out << blocks_[i].variables[j];
        }
        out << ']';
      }
      out << ')';
      return out.str();
    }
  }
  return {};
}

void MonomialOrder::validate(std::size_t nvars) const {
  if (kind_ != OrderKind::block) return;
  std::vector<int> seen(nvars, 0);
  for (const auto& b : blocks_) {
    for (std::size_t v : b.variables) {
      if (v >= nvars) throw VariableClash("block order refers to variable index out of range");
      ++seen[v];
    }
  }
  for (int s : seen)
    if (s != 1) throw VariableClash("block order does not partition the ring variables");
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order) {
  if (a.size() != b.size()) throw VariableClash("monomials over different variable counts");
  return order.compare(a, b);
}

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(std::vector<std::string> variables, MonomialOrder order)
    : variables_(std::move(variables)), order_(std::move(order)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].empty()) throw VariableClash("empty variable name");
    if (!index_.emplace(variables_[i], i).second)
      throw VariableClash("duplicate variable '" + variables_[i] + "'");
  }
  order_.validate(variables_.size());
}

RingPtr PolyRing::make(std::vector<std::string> variables, MonomialOrder order) {
  return RingPtr(new PolyRing(std::move(variables), std::move(order)));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw VariableClash("variable '" + std::string(name) + "' is not in " + describe());
  return *idx;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return make(variables_, std::move(order));
}

std::string PolyRing::describe() const {
  std::string s = "Q[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ',';
    s += variables_[i];
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void sort_terms(std::vector<Term>& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
}

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const MonomialOrder& order, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(s) != 0) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidInput("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back(Term{Monomial(p.ring_->size()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw VariableClash("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back(Term{Monomial::variable(p.ring_->size(), index), Rational(1)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const std::size_t idx = ring->require_index(name);
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  if (m.size() != ring->size()) throw VariableClash("monomial does not match ring");
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.size() != ring->size()) throw VariableClash("monomial does not match ring");
  sort_terms(terms, ring->order());
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  for (auto& t : out) t.coeff.canonicalize();
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::optional<Rational> Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_[0].coeff;
  return std::nullopt;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvalidInput("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Exponent Polynomial::degree_in(std::size_t var) const noexcept {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.monomial[var] != 0; });
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < ring_->size(); ++v)
    if (involves(v)) out.push_back(v);
  return out;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (ring_ != other.ring_ && !ring_->same_variables(*other.ring_))
    throw VariableClash("polynomials from different rings: " + ring_->describe() + " vs " +
                        other.ring_->describe());
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  if (ring_ != other.ring_ && !(ring_->order() == other.ring_->order())) {
    return *this += other.in_ring(ring_);
  }
  terms_ = merge_terms(terms_, other.terms_, ring_->order(), false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  if (ring_ != other.ring_ && !(ring_->order() == other.ring_->order())) {
    return *this -= other.in_ring(ring_);
  }
  terms_ = merge_terms(terms_, other.terms_, ring_->order(), true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].monomial, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.in_ring(a.ring_).mul_term(a.terms_[0].monomial, a.terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial);
      if (inserted) {
        it->second = s.coeff * t.coeff;
      } else {
        it->second += s.coeff * t.coeff;
      }
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back(Term{m, std::move(c)});
  sort_terms(terms, a.ring_->order());
  return Polynomial(a.ring_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (m.size() != ring_->size()) throw VariableClash("monomial does not match ring");
  if (sgn(c) == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.monomial * m, t.coeff * c});
  // Multiplying by a monomial preserves the order of a global monomial order.
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  const Rational inv = 1 / terms_.front().coeff;
  return scaled(inv);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const Exponent e = t.monomial[var];
    if (e == 0) continue;
    out.push_back(Term{t.monomial.with_exponent(var, e - 1), t.coeff * e});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target == ring_) return *this;
  if (!ring_->same_variables(*target))
    throw VariableClash("cannot move polynomial from " + ring_->describe() + " to " +
                        target->describe());
  std::vector<Term> terms = terms_;
  if (!(ring_->order() == target->order())) sort_terms(terms, target->order());
  return Polynomial(target, std::move(terms));
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  const auto& names = ring_->variables();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    Rational c = t.coeff;
    if (k == 0) {
      if (sgn(c) < 0) {
        out << '-';
        c = -c;
      }
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    const bool unit = (c == 1);
    if (t.monomial.is_one()) {
      out << rational_to_string(c);
      continue;
    }
    bool first = true;
    if (!unit) {
      out << rational_to_string(c);
      first = false;
    }
    for (std::size_t v = 0; v < names.size(); ++v) {
      const Exponent e = t.monomial[v];
      if (e == 0) continue;
      if (!first) out << '*';
      out << names[v];
      if (e > 1) out << '^' << e;
      first = false;
    }
  }
  return out.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_variables(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ != b.ring_ && !(a.ring_->order() == b.ring_->order())) {
    return a == b.in_ring(a.ring_);
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  }
  return true;
}

Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case ArithOp::add:
      return f + g;
    case ArithOp::sub:
      return f - g;
    case ArithOp::mul:
      return f * g;
  }
  throw InvalidInput("unknown arithmetic operation");
}

Polynomial normalize(const Polynomial& f) {
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& divisor) {
  if (divisor.is_zero()) throw InvalidInput("division by zero polynomial");
  const Polynomial d = divisor.in_ring(f.ring());
  Polynomial rest = f;
  std::vector<Term> quotient;
  const Term& lead = d.leading_term();
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!lead.monomial.divides(lt.monomial)) return std::nullopt;
    Monomial m = lt.monomial / lead.monomial;
    Rational c = lt.coeff / lead.coeff;
    rest -= d.mul_term(m, c);
    quotient.push_back(Term{std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// VarMap

VarMap::VarMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size())
    throw VariableClash("map must give an image for every variable of " + source_->describe());
  std::vector<std::size_t> renaming;
  bool pure = true;
  for (auto& img : images_) {
    if (!img.ring()->same_variables(*target_))
      throw VariableClash("map image is not in the target ring " + target_->describe());
    img = img.in_ring(target_);
    if (pure && img.size() == 1 && img.leading_coeff() == 1 && img.leading_monomial().degree() == 1) {
      renaming.push_back(img.support().front());
    } else {
      pure = false;
    }
  }
  if (pure) renaming_ = std::move(renaming);
}

VarMap VarMap::by_name(RingPtr source, RingPtr target,
                       const std::map<std::string, Polynomial, std::less<>>& overrides) {
  std::vector<Polynomial> images;
  images.reserve(source->size());
  for (const auto& name : source->variables()) {
    auto it = overrides.find(name);
    if (it != overrides.end()) {
      images.push_back(it->second);
    } else {
      auto idx = target->index_of(name);
      if (!idx) throw VariableClash("variable '" + name + "' has no image in " + target->describe());
      images.push_back(Polynomial::variable(target, *idx));
    }
  }
  return VarMap(std::move(source), std::move(target), std::move(images));
}

VarMap VarMap::identity(RingPtr ring) { return by_name(ring, ring); }

Polynomial VarMap::operator()(const Polynomial& f) const {
  if (!f.ring()->same_variables(*source_))
    throw VariableClash("polynomial is not in the map's source ring " + source_->describe());
  if (renaming_) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      std::vector<Exponent> e(target_->size(), 0);
      for (std::size_t v = 0; v < source_->size(); ++v) {
        if (t.monomial[v] == 0) continue;
        const std::size_t dst = (*renaming_)[v];
        const std::uint64_t s = std::uint64_t{e[dst]} + t.monomial[v];
        if (s > kMaxExponent) throw GuardExceeded("exponent_overflow", "monomial exponent too large");
        e[dst] = static_cast<Exponent>(s);
      }
      out.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(target_, std::move(out));
  }
  // Powers of each image, filled lazily.
  std::vector<std::vector<Polynomial>> powers(source_->size());
  auto power_of = [&](std::size_t v, Exponent e) -> const Polynomial& {
    auto& p = powers[v];
    if (p.empty()) p.push_back(Polynomial::constant(target_, 1));
    while (p.size() <= e) p.push_back(p.back() * images_[v]);
    return p[e];
  };
  Polynomial result(target_);
  for (const auto& t : f.terms()) {
    Polynomial acc = Polynomial::constant(target_, t.coeff);
    for (std::size_t v = 0; v < source_->size() && !acc.is_zero(); ++v) {
      if (t.monomial[v] != 0) acc *= power_of(v, t.monomial[v]);
    }
    result += acc;
  }
  return result;
}

VarMap VarMap::then(const VarMap& other) const {
  if (!target_->same_variables(*other.source_))
    throw VariableClash("cannot compose maps: target and source rings differ");
  std::vector<Polynomial> composed;
  composed.reserve(images_.size());
  for (const auto& img : images_) composed.push_back(other(img));
  return VarMap(source_, other.target_, std::move(composed));
}

Polynomial apply_map(const Polynomial& f, const VarMap& map) { return map(f); }

}  // namespace flatcheck
