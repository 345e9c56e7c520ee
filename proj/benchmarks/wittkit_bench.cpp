#include <benchmark/benchmark.h>

#include <random>

#include "wittkit/corpus.hpp"
#include "wittkit/etale.hpp"
#include "wittkit/presentation.hpp"
#include "wittkit/smith.hpp"
#include "wittkit/witt.hpp"

using namespace wittkit;

static void BM_GaussSum(benchmark::State& state) {
  const auto c = direct_power(PreMetricGroup::cyclic(4, 1, 8), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_sum(c));
  state.SetComplexityN(static_cast<std::int64_t>(c.order()));
}
BENCHMARK(BM_GaussSum)->DenseRange(1, 6)->Complexity();

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

static void BM_Sl2Presentation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analyze(sl2_witt_presentation(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_Sl2Presentation)->Arg(28)->Arg(200);

static void BM_IsotropicSubgroups(benchmark::State& state) {
  const auto c = direct_power(PreMetricGroup::cyclic(2, 1, 4), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(isotropic_subgroups(c));
}
BENCHMARK(BM_IsotropicSubgroups)->DenseRange(2, 8, 2);

// The kernel memo has no reset, so each iteration takes a form not seen
// before: n copies of (Z/2, 1/4) plus a distinct form of order <= 8.
static void BM_AnisotropicKernel(benchmark::State& state) {
  static const auto small = forms_up_to_order(8, true);
  const auto base = direct_power(PreMetricGroup::cyclic(2, 1, 4), static_cast<int>(state.range(0)));
  std::vector<PreMetricGroup> inputs;
  for (const auto& f : small) inputs.push_back(direct_sum(base, f));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(anisotropic_kernel(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_AnisotropicKernel)->Arg(2)->Arg(5)->Arg(8)->Iterations(280);

static void BM_EnumerateEtale(benchmark::State& state) {
  const auto forms = forms_up_to_order(8, true);
  const auto& a = forms.back();
  const auto& b = forms[forms.size() / 2];
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_etale(a, b));
}
BENCHMARK(BM_EnumerateEtale);

BENCHMARK_MAIN();
