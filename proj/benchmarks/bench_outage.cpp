#include <benchmark/benchmark.h>

#include "noma/analytic.hpp"
#include "noma/cli/presets.hpp"
#include "noma/compositions.hpp"
#include "noma/montecarlo.hpp"
#include "noma/oracle.hpp"

namespace {

noma::OutageQuery u2_query(int interferers) {
  noma::cli::PresetParams p;
  p.interferers = interferers;
  const noma::Scenario s = noma::cli::make_fig2_ideal(p);
  return noma::make_user_query(s, 2, noma::db_to_linear(3.0), noma::Scheme::noma);
}

void BM_ClosedForm(benchmark::State& state) {
  const noma::OutageQuery q = u2_query(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(noma::outage_closed_form(q));
}
BENCHMARK(BM_ClosedForm)->Arg(0)->Arg(1)->Arg(8)->Arg(24)->Arg(48);

void BM_MonteCarlo(benchmark::State& state) {
  const noma::OutageQuery q = u2_query(24);
  noma::McConfig cfg;
  cfg.trials = static_cast<std::uint64_t>(state.range(0));
  cfg.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(noma::estimate_outage(q.coeffs, q.threshold, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const noma::OutageQuery q = u2_query(24);
  noma::OracleConfig cfg;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  cfg.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(noma::outage_semi_analytic(q.coeffs, q.threshold, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Oracle)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_QuadratureK1(benchmark::State& state) {
  const noma::OutageQuery q = u2_query(1);
  for (auto _ : state) benchmark::DoNotOptimize(noma::outage_quadrature_k1(q.coeffs, q.threshold));
}
BENCHMARK(BM_QuadratureK1);

void BM_Compositions(benchmark::State& state) {
  const int parts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    noma::CompositionCursor cursor(3, parts);
    std::uint64_t n = 0;
    do {
      ++n;
    } while (cursor.advance());
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Compositions)->Arg(8)->Arg(24);

}  // namespace
BENCHMARK_MAIN();
