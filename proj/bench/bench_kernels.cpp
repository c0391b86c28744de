// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <map>

#include "weyl27/combinatorics.hpp"
#include "weyl27/enumerate.hpp"
#include "weyl27/lines.hpp"

using namespace weyl27;

namespace {

const std::vector<std::uint32_t>& level_candidates(int n) {
  static std::map<int, std::vector<std::uint32_t>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Arrangement> reps;
    for (const auto& r : enumerate_up_to(weyl_e6(), n)) reps.push_back(r.min_rep);
    it = cache.emplace(n, extension_candidates(reps)).first;
  }
  return it->second;
}

const std::vector<OrbitRecord>& all_records() {
  static const auto records = enumerate_all(weyl_e6(), 1);
  return records;
}

void BM_ScanSerial(benchmark::State& state) {
  const auto& c = level_candidates(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_serial(c, weyl_e6().table()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto& c = level_candidates(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_parallel(c, weyl_e6().table(), workers));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()));
}

void BM_Certificates(benchmark::State& state) {
  const auto& records = all_records();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certificates(records, workers));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->ArgsProduct({{6, 10}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Certificates)->Arg(0)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
