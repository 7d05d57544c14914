#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "flatcheck/dsl.hpp"
#include "flatcheck/groebner.hpp"
#include "flatcheck/polytext.hpp"

using namespace flatcheck;

namespace {

std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

FlatnessProblem load(const std::string& name) {
  std::ifstream in(std::string(FLATCHECK_PROBLEMS_DIR) + "/" + name);
  std::stringstream text;
  text << in.rdbuf();
  return parse_problem(text.str()).problem();
}

void BM_BuchbergerCyclic4(benchmark::State& state) {
  const auto order = state.range(0) ? MonomialOrder::lex() : MonomialOrder::degrevlex();
  auto ring = PolyRing::make({"a", "b", "c", "d"}, order);
  const auto gens = polys(ring, {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b",
                                 "a*b*c*d - 1"});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ring, gens, order));
}
BENCHMARK(BM_BuchbergerCyclic4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BuchbergerKatsura3(benchmark::State& state) {
  auto ring = PolyRing::make({"x", "y", "z", "t"}, MonomialOrder::degrevlex());
  const auto gens = polys(ring, {"x + 2*y + 2*z + 2*t - 1", "x^2 + 2*y^2 + 2*z^2 + 2*t^2 - x",
                                 "2*x*y + 2*y*z + 2*z*t - y", "y^2 + 2*x*z + 2*y*t - z"});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ring, gens, MonomialOrder::degrevlex()));
}
BENCHMARK(BM_BuchbergerKatsura3)->Unit(benchmark::kMillisecond);

void BM_FactorSwinnertonDyer(benchmark::State& state) {
  auto ring = PolyRing::make({"x"}, MonomialOrder::degrevlex());
  // Minimal polynomial of sqrt(2) + sqrt(3) + sqrt(5): irreducible, but
  // splits into linear or quadratic factors modulo every prime.
  const auto f = parse_polynomial("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576", ring);
  for (auto _ : state) benchmark::DoNotOptimize(factor_univariate(f));
}
BENCHMARK(BM_FactorSwinnertonDyer)->Unit(benchmark::kMillisecond);

void BM_DecomposeEmbedded(benchmark::State& state) {
  auto ring = PolyRing::make({"x", "y", "z"}, MonomialOrder::degrevlex());
  const Ideal ideal(ring, polys(ring, {"x^2*z^2 + 3*x*z^3 + 3*z^2", "x*y^2 + 1/3*x^2*z + y", "y*z - z^2"}));
  for (auto _ : state) {
    const Ideal fresh(ring, ideal.generators());
    benchmark::DoNotOptimize(decompose(fresh));
  }
}
BENCHMARK(BM_DecomposeEmbedded)->Unit(benchmark::kMillisecond);

void BM_CheckFlatness(benchmark::State& state, const char* file) {
  for (auto _ : state) benchmark::DoNotOptimize(check_flatness(load(file)));
}
BENCHMARK_CAPTURE(BM_CheckFlatness, douady, "douady.flat")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckFlatness, blowup, "blowup.flat")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckFlatness, free_module, "free-module.flat")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
