#include <benchmark/benchmark.h>

#include "rotn/circle.hpp"
#include "rotn/renorm.hpp"

using namespace rotn;

namespace {

const CFNumber& alpha56() {
  static const CFNumber a = CFNumber::parse("[0;5,(6)]");
  return a;
}

void BM_ScanOrbit(benchmark::State& state) {
  const auto precision = state.range(1) ? Precision::exact_only : Precision::certified_fast;
  for (auto _ : state) {
    std::int64_t acc = 0;
    scan_orbit(CirclePoint::half(), alpha56(), state.range(0), false, precision, nullptr,
               [&](std::int64_t, std::int64_t s, const OrbitCursor&) { acc += s; });
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanOrbit)->Args({100'000, 0})->Args({10'000, 1});

void BM_FastBirkhoff(benchmark::State& state) {
  FastBirkhoff fb(alpha56());
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fb(n));
    n = (n * 6364136223846793005ULL + 1442695040888963407ULL) % 1'000'000'000'000ULL;
  }
}
BENCHMARK(BM_FastBirkhoff);

void BM_Tower(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tower(alpha56(), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Tower)->Arg(10)->Arg(40);

}  // namespace
BENCHMARK_MAIN();
