#include <polgeom/fisher.hpp>
#include <polgeom/flow.hpp>
#include <polgeom/indices.hpp>
#include <polgeom/natgrad.hpp>
#include <polgeom/replicator.hpp>

#include <benchmark/benchmark.h>

using namespace polgeom;

namespace {

Eta interior_eta(Eigen::Index n) {
  Vector v = Vector::LinSpaced(n, 1.0, static_cast<double>(n));
  v /= 2.0 * v.sum();
  return Eta(v);
}

void BM_FisherEta(benchmark::State& state) {
  const Eta eta = interior_eta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fisher_eta(eta));
}
BENCHMARK(BM_FisherEta)->RangeMultiplier(2)->Range(2, 64);

void BM_NaturalGradientPol(benchmark::State& state) {
  const Eta eta = interior_eta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(natural_gradient(grad_pol_eta(eta), eta));
}
BENCHMARK(BM_NaturalGradientPol)->RangeMultiplier(2)->Range(2, 64);

void BM_NatgradPolynomialN2(benchmark::State& state) {
  const Eta eta{0.2, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(natgrad_pol_n2(eta));
}
BENCHMARK(BM_NatgradPolynomialN2);

void BM_FlowToAttractor(benchmark::State& state) {
  const VectorField field = pol_natural_field(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(field, Eta{0.4, 0.45}, 0.05, 500.0, 1e-10));
  }
}
BENCHMARK(BM_FlowToAttractor)->Unit(benchmark::kMicrosecond);

void BM_FixedPointSearch(benchmark::State& state) {
  const VectorField field = pol_natural_field(2);
  const auto seeds = seed_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_fixed_points(field, seeds));
}
BENCHMARK(BM_FixedPointSearch)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_ReplicatorLV(benchmark::State& state) {
  const Fitness fitness = lv_fitness(LVParams{});
  const SimplexPoint start = lv_uplift(Vec2(2.0, 1.0));
  const auto chart = static_cast<Chart>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_replicator(fitness, chart, start, 1e-3, 10.0));
  }
}
BENCHMARK(BM_ReplicatorLV)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
