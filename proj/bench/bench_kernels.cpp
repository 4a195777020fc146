// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "psa/bracket.hpp"
#include "psa/ideals.hpp"
#include "psa/strata.hpp"

namespace {

using namespace psa;

RationalMatrix staircase_pi(std::size_t n) {
  RationalMatrix pi(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pi[i][j] = Rational(static_cast<long>((i + 2 * j) % 5) - 2, 1 + static_cast<long>(j % 3));
      pi[j][i] = -pi[i][j];
    }
  return pi;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_Axioms(benchmark::State& state) {
  auto ctx = make_context({"x1", "x2", "x3", "x4", "x5"}, RingKind::Laurent);
  auto spec = BracketSpec::log_canonical(ctx, staircase_pi(5));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_poisson_axioms(spec, 200, 0, exec_of(state)));
}

void BM_Strata(benchmark::State& state) {
  const std::size_t n = 10;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i + 1));
  auto ctx = make_context(names, RingKind::Polynomial);
  ProblemSpec problem{ctx, BracketSpec::log_canonical(ctx, staircase_pi(n)), TorusAction::identity(n), std::nullopt};
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_strata(problem, exec_of(state)));
}

void BM_CoreTest(benchmark::State& state) {
  auto ctx = make_context({"x1", "x2", "x3"}, RingKind::Polynomial);
  auto spec = BracketSpec::log_canonical(ctx, staircase_pi(3));
  DerivationSet derivs = DerivationSet::hamiltonians(spec);
  derivs.add({parse("1", ctx), parse("0", ctx), parse("0", ctx)}, "d/dx1");
  IdealSpec ideal(ctx, {}, {parse("x1*x3 - 2*x2", ctx)});
  LaurentPoly f = parse("(x1*x3 - 2*x2)*(x1^2 + x2*x3)", ctx);
  for (auto _ : state)
    benchmark::DoNotOptimize(delta_core_test(derivs, ideal, f, 4, exec_of(state)));
}

} // namespace

BENCHMARK(BM_Axioms)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Strata)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoreTest)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
