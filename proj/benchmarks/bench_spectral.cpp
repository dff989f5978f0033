#include <benchmark/benchmark.h>

#include "bohrlab/setlab.hpp"
#include "bohrlab/spectral.hpp"

namespace {

using namespace bohrlab;

DensityFn random_table(const GroupSpec& g) {
  std::vector<double> v(g.order());
  for (std::size_t z = 0; z < v.size(); ++z) v[z] = unit_uniform(derive_seed(1, {z}));
  return DensityFn(g, std::move(v));
}

void BM_DftFast(benchmark::State& state) {
  const DensityFn f = random_table(GroupSpec::cyclic(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DftFast)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

// Prime lengths go through Bluestein.
void BM_DftFastPrime(benchmark::State& state) {
  const DensityFn f = random_table(GroupSpec::cyclic(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
}
BENCHMARK(BM_DftFastPrime)->Arg(61)->Arg(1021)->Arg(65521);

void BM_DftDefinitional(benchmark::State& state) {
  const DensityFn f = random_table(GroupSpec::cyclic(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f, TransformPath::definitional));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DftDefinitional)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_DftProduct(benchmark::State& state) {
  const DensityFn f = random_table(GroupSpec::parse("64x48x12"));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
}
BENCHMARK(BM_DftProduct);

void BM_TripleConvolve(benchmark::State& state) {
  const GroupSpec g = GroupSpec::cyclic(static_cast<std::uint64_t>(state.range(0)));
  const DensityFn f = random_table(g);
  const DensityFn h = random_table(g).scaled(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(triple_convolve(f, h));
}
BENCHMARK(BM_TripleConvolve)->Arg(1024)->Arg(65536);

}  // namespace
