#include <benchmark/benchmark.h>

#include <random>

#include "ncfactor/factorizer.hpp"
#include "ncfactor/hankel.hpp"
#include "ncfactor/minimizer.hpp"
#include "ncfactor/parser.hpp"

using namespace ncfactor;

namespace {

const Alphabet& xy() {
  static const Alphabet a({"x", "y"});
  return a;
}

NcPolynomial random_poly(std::mt19937& rng, std::size_t deg, std::size_t terms) {
  std::uniform_int_distribution<std::size_t> len(0, deg);
  std::uniform_int_distribution<int> letter(0, 1), coef(-5, 5);
  NcPolynomial p(xy());
  while (p.terms().size() < terms) {
    std::vector<LetterIndex> w(len(rng));
    for (auto& l : w) l = static_cast<LetterIndex>(letter(rng));
    const int c = coef(rng);
    if (c != 0) p.add_term(Word(w), c);
  }
  return p;
}

// Product of `factors` affine atoms, rank factors + 1.
NcPolynomial affine_product(std::size_t factors) {
  std::vector<NcPolynomial> ps;
  for (std::size_t i = 0; i < factors; ++i)
    ps.push_back(parse_poly(std::to_string(i + 1) + " + x - " + std::to_string(i % 3) + "*y", xy()));
  return poly_product(ps);
}

void BM_HankelRank(benchmark::State& state) {
  const NcPolynomial p = affine_product(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hankel_rank(p));
}
BENCHMARK(BM_HankelRank)->DenseRange(2, 8, 2);

void BM_Minimize(benchmark::State& state) {
  std::mt19937 rng(7);
  const NcPolynomial p = random_poly(rng, static_cast<std::size_t>(state.range(0)), 6);
  const Als naive = als_from_poly(p).als();
  for (auto _ : state) benchmark::DoNotOptimize(minimize(naive));
}
BENCHMARK(BM_Minimize)->DenseRange(2, 6, 2);

void BM_BuchbergerFactorIdeal(benchmark::State& state) {
  const auto s = als_from_poly(parse_poly("x*y*x*y*x - 4*x*y*x + 3*x", xy()));
  const auto gens = build_ideal(s, 3);
  const std::size_t n = FactorAnsatz(s.dim()).nvars();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, n));
}
BENCHMARK(BM_BuchbergerFactorIdeal);

void BM_Factor(benchmark::State& state) {
  const NcPolynomial p = affine_product(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_Factor)->DenseRange(2, 4, 1);

void BM_FactorParallel(benchmark::State& state) {
  const NcPolynomial p = parse_poly("x*y*x*y*x - 4*x*y*x + 3*x", xy());
  FactorOptions o;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor(p, o));
}
BENCHMARK(BM_FactorParallel)->Arg(1)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
