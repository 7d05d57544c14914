#include "flatcheck/flatness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "flatcheck/errors.hpp"

namespace flatcheck {

namespace {

constexpr std::size_t kMaxMinors = 20000;

void require_variables(const RingPtr& ring, const BaseRing& base, const char* what) {
  for (const auto& name : base.ambient->variables())
    if (!ring->index_of(name))
      throw VariableClash(std::string(what) + " ring " + ring->describe() +
                          " lacks base variable '" + name + "'");
}

std::vector<std::string> extra_variables(const RingPtr& ring, const BaseRing& base) {
  std::vector<std::string> out;
  for (const auto& name : ring->variables())
    if (!base.ambient->index_of(name)) out.push_back(name);
  return out;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial det(m[0][0].ring());
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(std::move(minor));
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMaxMinors * kMaxMinors) return r;
  }
  return r;
}

bool base_is_regular(const BaseRing& base) {
  return base.q.is_zero() || jacobian_smooth(base.q).smooth;
}

HypothesisCheck check_base_prime(const BaseRing& base, const DecompositionOptions& options) {
  HypothesisCheck check{"base_prime", HypothesisStatus::passed, ""};
  if (base.q.is_zero()) {
    check.detail = "q = (0)";
    return check;
  }
  auto components = decompose(base.q, options);
  if (components.size() != 1) {
    check.status = HypothesisStatus::failed;
    check.detail = "q has " + std::to_string(components.size()) + " associated primes";
  } else if (!(components.front().prime == base.q)) {
    check.status = HypothesisStatus::failed;
    check.detail = "q is primary but not prime; radical " + components.front().prime.to_string();
  } else {
    check.detail = "single prime component";
  }
  return check;
}

HypothesisCheck check_base_dimension(const BaseRing& base, const FlatnessProblem& problem) {
  HypothesisCheck check{"base_dimension", HypothesisStatus::passed,
                        "dim R = " + std::to_string(base.n)};
  if (problem.power && *problem.power != base.n)
    check.detail += "; power overridden to " + std::to_string(*problem.power);
  return check;
}

HypothesisCheck check_irreducibility(const FlatnessProblem& problem, bool base_regular) {
  HypothesisCheck check{"analytically_irreducible", HypothesisStatus::not_asserted,
                        "not asserted; not machine-checkable"};
  if (problem.assertions.count("analytically_irreducible")) {
    check.status = HypothesisStatus::user_asserted;
    check.detail = "asserted by the user";
  } else if (base_regular) {
    check.status = HypothesisStatus::implied;
    check.detail = "R is regular, hence normal";
  }
  return check;
}

void apply_waivers(HypothesisReport& report, const std::set<std::string>& waivers) {
  for (auto& check : report.checks) {
    if (check.status == HypothesisStatus::failed && waivers.count(check.name)) {
      check.status = HypothesisStatus::waived;
      check.detail += " (waived)";
    }
  }
}

void throw_violations(const HypothesisReport& report) {
  auto violations = report.violations();
  if (violations.empty()) return;
  std::string message = "hypothesis violated:";
  for (const auto* check : violations) message += " " + check->name + " (" + check->detail + ")";
  throw HypothesisViolation(message);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Verdict run_pipeline(const FlatnessProblem& problem, HypothesisReport report, int power,
                     bool overridden, const RegularCover* cover,
                     std::map<std::string, double> timings) {
  auto start = std::chrono::steady_clock::now();
  auto fibred = build_fibred_power(problem.base, problem.module, power, cover);
  timings["fibred_power"] = seconds_since(start);
  Verdict verdict{VerdictKind::flat, {}, std::move(report), power, overridden, std::move(fibred),
                  {}, {}, {}, {}, {}};
  verdict.timings = std::move(timings);

  start = std::chrono::steady_clock::now();
  auto analysis = torsion_analysis(verdict.fibred.J, problem.base, problem.decomposition);
  verdict.timings["torsion_test"] = seconds_since(start);

  verdict.associated_primes = std::move(analysis.associated_primes);
  verdict.contractions = std::move(analysis.contractions);
  verdict.witnesses = std::move(analysis.witnesses);
  verdict.stats = analysis.stats;

  if (!verdict.witnesses.empty())
    verdict.result = VerdictKind::non_flat;
  else if (verdict.hypotheses.conclusive() && !overridden)
    verdict.result = VerdictKind::flat;
  else
    verdict.result = VerdictKind::torsion_free_inconclusive;

  verdict.notes.push_back("cyclic module presentation F = Q[y,x]/I");
  if (problem.module.added_base_relations)
    verdict.notes.push_back("generators of q were added to the module ideal");
  if (overridden)
    verdict.notes.push_back("power overridden: dim R = " + std::to_string(problem.base.n) +
                            ", used " + std::to_string(power));
  if (verdict.hypotheses.cover_mode == "none")
    verdict.notes.push_back("no regular cover over a singular base: torsion-freeness does not "
                            "conclude flatness");
  if (const auto* irr = verdict.hypotheses.find("analytically_irreducible");
      irr && irr->status == HypothesisStatus::not_asserted)
    verdict.notes.push_back("analytic irreducibility of R not asserted");
  if (const auto* reg = verdict.hypotheses.find("source_regular");
      reg && reg->status == HypothesisStatus::not_asserted)
    verdict.notes.push_back("regularity of the source not asserted");
  return verdict;
}

}  // namespace

BaseRing BaseRing::make(Ideal q) {
  if (q.is_unit()) throw InvalidInput("base ideal is the unit ideal");
  BaseRing base{q.ring(), q, 0};
  base.n = dimension(q);
  return base;
}

ModuleSpec ModuleSpec::make(const BaseRing& base, Ideal I) {
  require_variables(I.ring(), base, "module");
  ModuleSpec spec{I.ring(), I, false};
  std::vector<Polynomial> gens = I.generators();
  for (const auto& g : base.q.generators()) {
    auto lifted = transfer(g, I.ring());
    if (!I.contains(lifted)) {
      gens.push_back(lifted);
      spec.added_base_relations = true;
    }
  }
  if (spec.added_base_relations) spec.I = Ideal(I.ring(), std::move(gens));
  return spec;
}

std::vector<std::string> ModuleSpec::fibre_variables(const BaseRing& base) const {
  return extra_variables(ambient, base);
}

RegularCover RegularCover::make(const BaseRing& base, Ideal L) {
  require_variables(L.ring(), base, "cover");
  return RegularCover{L.ring(), std::move(L)};
}

std::vector<std::string> RegularCover::cover_variables(const BaseRing& base) const {
  return extra_variables(ambient, base);
}

std::string to_string(HypothesisStatus status) {
  switch (status) {
    case HypothesisStatus::passed: return "passed";
    case HypothesisStatus::failed: return "failed";
    case HypothesisStatus::waived: return "waived";
    case HypothesisStatus::user_asserted: return "user_asserted";
    case HypothesisStatus::implied: return "implied";
    case HypothesisStatus::not_asserted: return "not_asserted";
    case HypothesisStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::flat: return "FLAT";
    case VerdictKind::non_flat: return "NON_FLAT";
    case VerdictKind::torsion_free_inconclusive: return "TORSION-FREE (flatness not concluded)";
  }
  return "unknown";
}

const HypothesisCheck* HypothesisReport::find(const std::string& name) const {
  for (const auto& check : checks)
    if (check.name == name) return &check;
  return nullptr;
}

std::vector<const HypothesisCheck*> HypothesisReport::violations() const {
  std::vector<const HypothesisCheck*> out;
  for (const auto& check : checks)
    if (check.status == HypothesisStatus::failed) out.push_back(&check);
  return out;
}

bool HypothesisReport::conclusive() const {
  if (cover_mode == "none") return false;
  for (const auto& check : checks) {
    switch (check.status) {
      case HypothesisStatus::failed:
      case HypothesisStatus::not_asserted:
        return false;
      default:
        break;
    }
  }
  return true;
}

SmoothnessResult jacobian_smooth(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_unit()) return {false, "empty variety"};
  const int dim = dimension(ideal);
  const std::size_t codim = ring->size() - static_cast<std::size_t>(dim);
  if (codim == 0) return {true, "codimension 0"};

  std::vector<Polynomial> gens = ideal.generators();
  if (gens.size() < codim)
    return {false, "fewer generators than the codimension " + std::to_string(codim)};
  if (binomial(gens.size(), codim) * binomial(ring->size(), codim) > kMaxMinors)
    return {false, "too many Jacobian minors to enumerate"};

  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < ring->size(); ++v) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }

  std::vector<Polynomial> with_minors = gens;
  std::size_t minors = 0;
  bool unit_minor = false;
  for_each_combination(gens.size(), codim, [&](const std::vector<std::size_t>& rows) {
    if (unit_minor) return;
    for_each_combination(ring->size(), codim, [&](const std::vector<std::size_t>& cols) {
      if (unit_minor) return;
      std::vector<std::vector<Polynomial>> m;
      for (auto r : rows) {
        std::vector<Polynomial> row;
        for (auto c : cols) row.push_back(jac[r][c]);
        m.push_back(std::move(row));
      }
      auto det = determinant(std::move(m));
      if (det.is_zero()) return;
      ++minors;
      if (det.is_constant()) unit_minor = true;
      with_minors.push_back(std::move(det));
    });
  });
  std::string detail = std::to_string(minors) + " nonzero minors of size " +
                       std::to_string(codim);
  if (!unit_minor && !Ideal(ring, with_minors).is_unit())
    return {false, "singular: ideal + " + detail + " is proper"};

  // Rank >= codim everywhere only certifies regularity when no component
  // of smaller dimension (or embedded component) is present.
  for (const auto& prime : associated_primes(ideal)) {
    if (dimension(prime) != dim)
      return {false, "not equidimensional: associated prime " + prime.to_string()};
  }
  return {true, "ideal + " + detail + " = (1); equidimensional of dimension " +
                    std::to_string(dim)};
}

FibredPower build_fibred_power(const BaseRing& base, const ModuleSpec& module, int n,
                               const RegularCover* cover) {
  if (n < 1) throw InvalidInput("fibred power needs n >= 1, got " + std::to_string(n));
  require_variables(module.ambient, base, "module");
  if (cover) require_variables(cover->ambient, base, "cover");

  FibredPower out{Ideal(base.ambient), {}, {}};
  std::set<std::string> used(base.ambient->variables().begin(), base.ambient->variables().end());
  auto claim = [&](const std::string& original, std::string name) {
    const std::string wanted = name;
    while (used.count(name)) name += "_";
    if (name != wanted) out.collisions.push_back(original + " -> " + name);
    used.insert(name);
    out.renaming.emplace_back(original, name);
    return name;
  };

  const auto fibre = module.fibre_variables(base);
  std::vector<std::vector<std::string>> copies(static_cast<std::size_t>(n));
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k)
    for (const auto& x : fibre) {
      copies[k - 1].push_back(claim(x, x + "__" + std::to_string(k)));
      names.push_back(copies[k - 1].back());
    }
  std::vector<std::string> cover_vars, cover_names;
  if (cover) {
    cover_vars = cover->cover_variables(base);
    for (const auto& u : cover_vars) {
      cover_names.push_back(claim(u, "u_" + u));
      names.push_back(cover_names.back());
    }
  }
  for (const auto& y : base.ambient->variables()) names.push_back(y);

  std::set<std::string> distinct(names.begin(), names.end());
  if (distinct.size() != names.size())
    throw VariableClash("variable names collide after renaming");
  RingPtr ring = PolyRing::make(names);

  std::vector<Polynomial> gens;
  for (const auto& g : base.q.generators()) gens.push_back(transfer(g, ring));
  for (int k = 0; k < n; ++k) {
    std::map<std::string, Polynomial, std::less<>> overrides;
    for (std::size_t j = 0; j < fibre.size(); ++j)
      overrides.emplace(fibre[j], Polynomial::variable(ring, copies[k][j]));
    auto map = VarMap::by_name(module.ambient, ring, overrides);
    for (const auto& g : module.I.generators()) gens.push_back(map(g));
  }
  if (cover) {
    std::map<std::string, Polynomial, std::less<>> overrides;
    for (std::size_t j = 0; j < cover_vars.size(); ++j)
      overrides.emplace(cover_vars[j], Polynomial::variable(ring, cover_names[j]));
    auto map = VarMap::by_name(cover->ambient, ring, overrides);
    for (const auto& g : cover->L.generators()) gens.push_back(map(g));
  }
  out.J = Ideal(ring, std::move(gens));
  return out;
}

TorsionAnalysis torsion_analysis(const Ideal& J, const BaseRing& base,
                                 const DecompositionOptions& options) {
  auto q_in_J = transfer(base.q, J.ring());
  if (!J.contains(q_in_J)) throw InvalidInput("base ideal q is not contained in J");

  TorsionAnalysis out;
  out.associated_primes = associated_primes(J, options, &out.stats);
  auto J_basis = J.groebner();
  for (const auto& prime : out.associated_primes) {
    auto contraction = contract_to_base(prime, base.ambient).canonical();
    out.contractions.push_back(contraction);
    if (contraction == base.q) continue;

    std::optional<Polynomial> separator;
    for (const auto& g : contraction.generators()) {
      if (!base.q.contains(g)) {
        separator = g;
        break;
      }
    }
    auto lifted = transfer(*separator, J.ring());
    std::optional<Polynomial> element;
    const Ideal colon = quotient(J, lifted);
    for (const auto& m : colon.generators()) {
      auto reduced = normal_form(m, J_basis->generators, J_basis->order);
      if (reduced.is_zero()) continue;
      reduced = reduced.monic();
      if (!element || reduced.total_degree() < element->total_degree() ||
          (reduced.total_degree() == element->total_degree() && reduced.size() < element->size()))
        element = reduced;
    }
    if (!element)
      throw InvalidInput("no torsion element found for separator " + separator->to_string());
    out.witnesses.push_back(Witness{prime, contraction, *separator, *element});
  }
  return out;
}

std::vector<Witness> torsion_witnesses(const Ideal& J, const BaseRing& base,
                                       const DecompositionOptions& options) {
  return torsion_analysis(J, base, options).witnesses;
}

bool witness_is_sound(const Witness& w, const Ideal& J, const BaseRing& base) {
  if (!w.prime.contains(J)) return false;
  if (!w.contraction.contains(base.q)) return false;
  if (!w.prime.contains(transfer(w.contraction, w.prime.ring()))) return false;
  if (!w.contraction.contains(w.separator) || base.q.contains(w.separator)) return false;
  if (J.contains(w.torsion_element)) return false;
  return J.contains(transfer(w.separator, J.ring()) * w.torsion_element);
}

HypothesisReport verify_hypotheses(const FlatnessProblem& problem) {
  const auto& base = problem.base;
  HypothesisReport report;
  report.checks.push_back(check_base_prime(base, problem.decomposition));
  report.checks.push_back(check_base_dimension(base, problem));

  bool base_regular = false;
  if (problem.cover) {
    report.cover_mode = "supplied";
    const auto& L = problem.cover->L;
    const int dim_L = dimension(L);
    report.checks.push_back({"cover_dimension",
                             dim_L == base.n ? HypothesisStatus::passed : HypothesisStatus::failed,
                             "dim S = " + std::to_string(dim_L)});
    auto image = contract_to_base(L, base.ambient);
    report.checks.push_back({"cover_dominant",
                             image == base.q ? HypothesisStatus::passed : HypothesisStatus::failed,
                             "L contracts to " + image.to_string()});
    auto smooth = jacobian_smooth(L);
    report.checks.push_back({"cover_regular",
                             smooth.smooth ? HypothesisStatus::passed : HypothesisStatus::failed,
                             smooth.detail});
    base_regular = base_is_regular(base);
  } else {
    base_regular = base_is_regular(base);
    const auto status = base_regular ? HypothesisStatus::passed : HypothesisStatus::not_applicable;
    report.cover_mode = base_regular ? "identity" : "none";
    const std::string detail =
        base_regular ? "identity cover, R is regular" : "no cover supplied and R is singular";
    for (const char* name : {"cover_dimension", "cover_dominant", "cover_regular"})
      report.checks.push_back({name, status, detail});
  }
  report.checks.push_back(check_irreducibility(problem, base_regular));
  apply_waivers(report, problem.waivers);
  return report;
}

HypothesisReport verify_source_hypotheses(const FlatnessProblem& problem) {
  const auto& base = problem.base;
  const auto& I = problem.module.I;
  HypothesisReport report;
  report.cover_mode = "source";
  report.checks.push_back(check_base_prime(base, problem.decomposition));
  report.checks.push_back(check_base_dimension(base, problem));

  const int dim_A = dimension(I);
  report.checks.push_back({"source_dimension",
                           dim_A == base.n ? HypothesisStatus::passed : HypothesisStatus::failed,
                           "dim A = " + std::to_string(dim_A)});
  auto image = contract_to_base(I, base.ambient);
  report.checks.push_back({"source_dominant",
                           image == base.q ? HypothesisStatus::passed : HypothesisStatus::failed,
                           "I contracts to " + image.to_string()});
  if (problem.verify_source_regularity) {
    auto smooth = jacobian_smooth(I);
    report.checks.push_back({"source_regular",
                             smooth.smooth ? HypothesisStatus::passed : HypothesisStatus::failed,
                             smooth.detail});
  } else if (problem.assertions.count("source_regular")) {
    report.checks.push_back(
        {"source_regular", HypothesisStatus::user_asserted, "asserted by the user"});
  } else {
    report.checks.push_back(
        {"source_regular", HypothesisStatus::not_asserted, "not asserted and not verified"});
  }
  report.checks.push_back(check_irreducibility(problem, base_is_regular(base)));
  apply_waivers(report, problem.waivers);
  return report;
}

Verdict check_flatness(const FlatnessProblem& problem) {
  auto start = std::chrono::steady_clock::now();
  auto report = verify_hypotheses(problem);
  std::map<std::string, double> timings{{"hypotheses", seconds_since(start)}};
  throw_violations(report);

  const int power = problem.power.value_or(problem.base.n);
  const bool overridden = problem.power && *problem.power != problem.base.n;
  const RegularCover* cover = report.cover_mode == "supplied" ? &*problem.cover : nullptr;
  return run_pipeline(problem, std::move(report), power, overridden, cover, std::move(timings));
}

Verdict check_flatness_regular_source(const FlatnessProblem& problem) {
  auto start = std::chrono::steady_clock::now();
  auto report = verify_source_hypotheses(problem);
  std::map<std::string, double> timings{{"hypotheses", seconds_since(start)}};
  throw_violations(report);

  const int power = problem.power.value_or(problem.base.n + 1);
  const bool overridden = problem.power && *problem.power != problem.base.n + 1;
  return run_pipeline(problem, std::move(report), power, overridden, nullptr, std::move(timings));
}

}  // namespace flatcheck
