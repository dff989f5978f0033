#include <benchmark/benchmark.h>

#include "bohrlab/extractor.hpp"
#include "bohrlab/setlab.hpp"
#include "bohrlab/verify.hpp"

namespace {

using namespace bohrlab;

void BM_Extract(benchmark::State& state) {
  const GroupSpec g = GroupSpec::cyclic(static_cast<std::uint64_t>(state.range(0)));
  const DensityFn a = random_subset(g, 0.3, 1).indicator();
  const DensityFn b = random_subset(g, 0.3, 2).indicator();
  for (auto _ : state) benchmark::DoNotOptimize(extract(a, b));
}
BENCHMARK(BM_Extract)->Arg(1024)->Arg(16384)->Arg(65536)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const GroupSpec g = GroupSpec::cyclic(static_cast<std::uint64_t>(state.range(0)));
  const GroupSubset a = random_subset(g, 0.3, 1);
  const GroupSubset b = random_subset(g, 0.3, 2);
  const Certificate cert = extract(a.indicator(), b.indicator());
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert, a, b));
}
BENCHMARK(BM_Verify)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace
