#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "flatcheck/dsl.hpp"
#include "flatcheck/groebner.hpp"
#include "flatcheck/polytext.hpp"
#include "oracles.hpp"

using namespace flatcheck;

namespace {

bool verbose = false;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string read_problem(const std::string& name) {
  std::ifstream in(std::string(FLATCHECK_PROBLEMS_DIR) + "/" + name);
  if (!in) throw InvalidInput("cannot read " + name);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

FlatnessProblem load(const std::string& name) { return parse_problem(read_problem(name)).problem(); }

Polynomial P(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

std::vector<std::string> canonical_strings(const std::vector<Ideal>& ideals) {
  std::vector<std::string> out;
  for (const auto& i : ideals) out.push_back(i.canonical().to_string());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> witness_contractions(const Verdict& v) {
  std::vector<Ideal> c;
  for (const auto& w : v.witnesses) c.push_back(w.contraction);
  return canonical_strings(c);
}

// Douady's module with the normalization cover.
Outcome douady_reproduction() {
  Outcome out;
  auto problem = load("douady.flat");
  auto verdict = check_flatness(problem);
  out.require(verdict.result == VerdictKind::non_flat, "verdict is " + to_string(verdict.result));
  const Ideal expected(problem.base.ambient,
                       {Polynomial::variable(problem.base.ambient, "y1"),
                        Polynomial::variable(problem.base.ambient, "y2")});
  bool exact = false;
  for (const auto& w : verdict.witnesses) {
    const auto basis = w.contraction.canonical().generators();
    exact = exact || (basis.size() == 2 && basis[0] == expected.generators()[0] &&
                      basis[1] == expected.generators()[1]);
    out.require(witness_is_sound(w, verdict.fibred.J, problem.base), "unsound witness");
  }
  out.require(exact, "no witness contracting to (y1, y2)");
  if (out.pass) out.detail = "NON_FLAT, witness contraction (y1, y2)";
  return out;
}

// The same module without a cover has no torsion.
Outcome sharpness_half() {
  Outcome out;
  auto problem = load("douady-no-cover.flat");
  auto fibred = build_fibred_power(problem.base, problem.module, 1, nullptr);
  auto analysis = torsion_analysis(fibred.J, problem.base, problem.decomposition);
  out.require(analysis.witnesses.empty(), "torsion reported");
  out.require(analysis.associated_primes.size() == 2,
              std::to_string(analysis.associated_primes.size()) + " associated primes");
  for (const auto& c : analysis.contractions) out.require(c == problem.base.q, "contraction differs from q");
  auto verdict = check_flatness(problem);
  out.require(verdict.witnesses.empty(), "verdict carries witnesses");
  if (out.pass) out.detail = "torsion-free, 2 associated primes contracting to q";
  return out;
}

// Smooth bases with the identity cover.
Outcome smooth_base_classics() {
  Outcome out;
  auto xy = load("xy-collapse.flat");
  auto v1 = check_flatness(xy);
  out.require(v1.result == VerdictKind::non_flat, "xy-collapse is " + to_string(v1.result));
  out.require(v1.power == 1, "xy-collapse power");
  const auto& J1 = v1.fibred.J;
  out.require(J1.contains(P(J1.ring(), "y*x__1")) && !J1.contains(P(J1.ring(), "x__1")),
              "x is not a y-torsion element");

  auto blow = load("blowup.flat");
  auto v2 = check_flatness(blow);
  out.require(v2.result == VerdictKind::non_flat, "blow-up is " + to_string(v2.result));
  out.require(v2.power == 2, "blow-up power");
  const auto& J2 = v2.fibred.J;
  out.require(J2.contains(P(J2.ring(), "y2*(x__1 - x__2)")) && !J2.contains(P(J2.ring(), "x__1 - x__2")),
              "x1 - x2 is not a y2-torsion element");
  for (const auto* v : {&v1, &v2})
    for (const auto& w : v->witnesses)
      out.require(witness_is_sound(w, v->fibred.J, v == &v1 ? xy.base : blow.base), "unsound witness");
  if (out.pass) out.detail = "xy-collapse and blow-up chart NON_FLAT";
  return out;
}

// Modules that must come out flat.
Outcome flat_controls() {
  Outcome out;
  for (const char* name : {"cusp-base.flat", "cusp-polynomial.flat", "free-module.flat"}) {
    auto v = check_flatness(load(name));
    out.require(v.result == VerdictKind::flat, std::string(name) + " is " + to_string(v.result));
  }
  // Further free cyclic presentations: monic in x over each bundled base.
  const std::vector<std::string> free_presentations{
      "ring R = Q[y];\nmodule F over R = Q[y,x] / (x^2 - y);\n",
      "ring R = Q[y1,y2];\nmodule F over R = Q[y1,y2,x] / (x^3 + y1*x + y2);\n",
      "ring R = Q[y1,y2] / (4*y1^3 + 27*y2^2);\n"
      "module F over R = Q[y1,y2,x] / (4*y1^3 + 27*y2^2, x^2 - y1);\n"
      "cover S over R = Q[y1,y2,u] / (y1 + 3*u^2, y2 - 2*u^3);\n"
      "assert analytically_irreducible;\n"};
  for (const auto& text : free_presentations) {
    auto v = check_flatness(parse_problem(text).problem());
    out.require(v.result == VerdictKind::flat, "free presentation is " + to_string(v.result));
  }
  if (out.pass) out.detail = "6 flat controls";
  return out;
}

// Two normalizations of the cusp.
Outcome cover_independence() {
  Outcome out;
  auto first = check_flatness(load("douady.flat"));
  auto second = check_flatness(load("cusp-second-cover.flat"));
  out.require(first.result == second.result, "verdicts differ");
  out.require(witness_contractions(first) == witness_contractions(second), "witness contractions differ");
  if (out.pass) out.detail = "both " + to_string(first.result);
  return out;
}

struct DecompositionCase {
  Ideal ideal;
  std::string origin;
};

std::vector<DecompositionCase> decomposition_corpus() {
  std::vector<DecompositionCase> corpus;
  const std::vector<std::vector<std::string>> variable_sets{{"x"}, {"x", "y"}, {"x", "y", "z"}};
  auto xy = PolyRing::make({"x", "y"}, MonomialOrder::degrevlex());
  auto xyz = PolyRing::make({"x", "y", "z"}, MonomialOrder::degrevlex());
  auto hand = [&](const RingPtr& ring, std::vector<std::string> gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(P(ring, g));
    corpus.push_back({Ideal(ring, ps), "hand"});
  };
  hand(xy, {"x*y", "y^2"});
  hand(xy, {"x^2", "y"});
  hand(xy, {"x^2 - 1", "y"});
  hand(xy, {"x^2", "x*y"});
  hand(xy, {"x^3 - y^2"});
  hand(xyz, {"x*y", "x*z", "y*z"});
  hand(xyz, {"x^2 - y*z", "x*z - x"});
  hand(xyz, {"y*z - x", "x*z"});

  oracle::RandomPolys gen(20240601);
  int generated = 0;
  while (generated < 150) {
    const auto& vars = variable_sets[gen.uniform(0, 2)];
    auto ring = PolyRing::make(vars, MonomialOrder::degrevlex());
    std::vector<Polynomial> gens;
    const int count = gen.uniform(1, static_cast<int>(vars.size()));
    for (int k = 0; k < count; ++k) {
      if (gen.uniform(0, 2) == 0) {
        // Products of low-degree pieces give reducible generators.
        auto a = gen.sparse(ring, 2, 1, 3), b = gen.sparse(ring, 2, 2, 3);
        gens.push_back(a * b);
      } else {
        gens.push_back(gen.sparse(ring, static_cast<unsigned>(gen.uniform(1, 3)), 3, 3));
      }
    }
    bool fits = true;
    for (const auto& g : gens) fits = fits && !g.is_zero() && g.total_degree() <= 3;
    Ideal ideal(ring, gens);
    if (!fits || ideal.is_unit() || ideal.canonical().is_zero()) continue;
    corpus.push_back({ideal, "generated"});
    ++generated;
  }
  return corpus;
}

std::vector<std::string> associated_in(const Ideal& ideal, const RingPtr& ring, std::uint64_t seed) {
  DecompositionOptions options;
  options.seed = seed;
  std::vector<Ideal> back;
  for (const auto& p : associated_primes(transfer(ideal, ring), options)) back.push_back(transfer(p, ideal.ring()));
  return canonical_strings(back);
}

Outcome decomposition_soundness() {
  Outcome out;
  const auto corpus = decomposition_corpus();
  std::size_t components = 0;
  for (const auto& [ideal, origin] : corpus) {
    const std::string label = origin + " " + ideal.to_string() + " over " + ideal.ring()->describe();
    if (verbose) std::cerr << "decompose " << label << std::endl;
    auto comps = decompose(ideal);
    components += comps.size();
    std::vector<Ideal> primaries;
    for (const auto& c : comps) {
      primaries.push_back(c.primary);
      out.require(c.primary.contains(ideal), "primary does not contain the input: " + label);
      out.require(c.prime.contains(c.primary), "prime does not contain its primary: " + label);
      for (const auto& g : c.prime.generators())
        out.require(oracle::power_in(g, c.primary), "prime is not the radical of its primary: " + label);
    }
    const Ideal meet = intersect_all(primaries);
    out.require(meet.contains(ideal) && ideal.contains(meet), "intersection differs from the input: " + label);

    // Ass under another seed, shuffled and rescaled generators, and a
    // reversed variable order.
    std::vector<Ideal> primes;
    for (const auto& c : comps) primes.push_back(c.prime);
    const auto reference = canonical_strings(primes);
    out.require(associated_in(ideal, ideal.ring(), 7) == reference, "Ass depends on the seed: " + label);
    auto gens = ideal.generators();
    std::reverse(gens.begin(), gens.end());
    for (std::size_t k = 0; k < gens.size(); ++k) gens[k] = gens[k].scaled(Rational(static_cast<long>(k) + 2));
    out.require(canonical_strings(associated_primes(Ideal(ideal.ring(), gens))) == reference,
                "Ass depends on the generator list: " + label);
    auto names = ideal.ring()->variables();
    std::reverse(names.begin(), names.end());
    auto reversed = PolyRing::make(names, MonomialOrder::degrevlex());
    out.require(associated_in(ideal, reversed, 1) == reference,
                "Ass depends on the variable order: " + label);
  }
  if (out.pass)
    out.detail = std::to_string(corpus.size()) + " ideals, " + std::to_string(components) + " components";
  return out;
}

std::vector<std::string> basis_strings(const GroebnerBasis& g) {
  std::vector<std::string> out;
  for (const auto& p : g.generators) out.push_back(p.to_string());
  return out;
}

Outcome groebner_properties() {
  Outcome out;
  oracle::RandomPolys gen(777);
  int instances = 0;
  while (instances < 220) {
    const bool lex = gen.uniform(0, 1) == 1;
    const auto order = lex ? MonomialOrder::lex() : MonomialOrder::degrevlex();
    const int nvars = gen.uniform(2, 3);
    std::vector<std::string> vars{"x", "y", "z"};
    vars.resize(nvars);
    auto ring = PolyRing::make(vars, order);
    std::vector<Polynomial> gens;
    const int count = gen.uniform(2, 3);
    for (int k = 0; k < count; ++k) gens.push_back(gen.sparse(ring, static_cast<unsigned>(gen.uniform(2, 3)), 3, 4));
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    if (gens.empty()) continue;
    ++instances;
    const std::string label = "instance " + std::to_string(instances);

    auto basis = buchberger(ring, gens, order);

    // NF soundness with explicit cofactors.
    for (int t = 0; t < 3; ++t) {
      auto f = gen.sparse(ring, 4, 4, 5);
      auto d = divide(f, basis.generators, order);
      Polynomial sum = d.remainder;
      for (std::size_t i = 0; i < basis.generators.size(); ++i) sum += d.quotients[i] * basis.generators[i];
      out.require(sum == f, "cofactor identity fails: " + label);
      for (const auto& term : d.remainder.terms())
        for (const auto& g : basis.generators)
          out.require(!g.leading_monomial().divides(term.monomial), "remainder is reducible: " + label);
      out.require(normal_form(f, basis.generators, order) == d.remainder, "normal form differs: " + label);
    }
    for (const auto& g : gens) out.require(normal_form(g, basis.generators, order).is_zero(), "input not reduced to zero: " + label);

    // Uniqueness under shuffles and rescaling.
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());
    for (auto& g : shuffled) {
      Rational c(gen.uniform(1, 9), gen.uniform(1, 9));
      c.canonicalize();
      if (gen.uniform(0, 1)) c = -c;
      g = g.scaled(c);
    }
    // A redundant combination must not change the reduced basis either.
    shuffled.push_back(shuffled.front() * gen.sparse(ring, 1, 1, 2) + shuffled.back());
    out.require(basis_strings(buchberger(ring, shuffled, order)) == basis_strings(basis),
                "reduced basis depends on the generator list: " + label);

    // Criteria toggles.
    for (int mask = 0; mask < 3; ++mask) {
      BuchbergerOptions options;
      options.coprime_criterion = mask & 1;
      options.chain_criterion = mask & 2;
      out.require(basis_strings(buchberger(ring, gens, order, current_guards(), options)) == basis_strings(basis),
                  "criteria change the basis: " + label);
    }
    BuchbergerOptions unreduced;
    unreduced.reduce = false;
    out.require(basis_strings(reduce_basis(buchberger(ring, gens, order, current_guards(), unreduced))) ==
                    basis_strings(basis),
                "reduce_basis differs from the reduced run: " + label);
  }
  if (out.pass) out.detail = std::to_string(instances) + " instances";
  return out;
}

std::vector<Integer> cleared_coefficients(const Polynomial& f) {
  Integer lcm = 1;
  for (const auto& t : f.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  return oracle::integer_coefficients(f.scaled(Rational(lcm)));
}

Outcome univariate_factorization() {
  Outcome out;
  auto ring = PolyRing::make({"x"}, MonomialOrder::degrevlex());
  oracle::RandomPolys gen(4242);
  int instances = 0;
  while (instances < 200) {
    std::map<std::string, unsigned> expected;
    Polynomial product = Polynomial::constant(ring, 1);
    const int count = gen.uniform(1, 4);
    for (int k = 0; k < count;) {
      auto f = gen.univariate(ring, static_cast<unsigned>(gen.uniform(1, 4)), 7);
      if (!oracle::irreducible_small(oracle::integer_coefficients(f))) continue;
      product *= f;
      ++expected[f.monic().to_string()];
      ++k;
    }
    const Rational unit(gen.uniform(1, 5) * (gen.uniform(0, 1) ? 1 : -1));
    product = product.scaled(unit);
    ++instances;
    const std::string label = product.to_string();

    auto fz = factor_univariate(product);
    out.require(fz.expand(ring) == product, "reassembly fails: " + label);
    std::map<std::string, unsigned> got;
    for (const auto& piece : fz.factors) {
      got[piece.factor.to_string()] += piece.multiplicity;
      out.require(piece.factor.leading_coeff() == 1, "factor not monic: " + label);
      if (piece.factor.total_degree() <= 4)
        out.require(oracle::irreducible_small(cleared_coefficients(piece.factor)),
                    "factor is reducible: " + label);
    }
    out.require(got == expected, "factors differ from the construction: " + label);
  }
  if (out.pass) out.detail = std::to_string(instances) + " products";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  verbose = argc > 1 && std::string(argv[1]) == "--verbose";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", douady_reproduction},   {"AC2", sharpness_half},
      {"AC3", smooth_base_classics},  {"AC4", flat_controls},
      {"AC5", cover_independence},    {"AC6", decomposition_soundness},
      {"AC7", groebner_properties},   {"AC8", univariate_factorization}};
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << name << (outcome.pass ? " PASS " : " FAIL ") << outcome.detail << " (" << seconds << " s)";
    std::cout << line.str() << std::endl;
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
