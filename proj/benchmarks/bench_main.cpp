#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "trioscan/group.hpp"
#include "trioscan/setops.hpp"
#include "trioscan/subset.hpp"
#include "trioscan/transform.hpp"
#include "trioscan/verify.hpp"

namespace {

trioscan::Subset random_subset(const trioscan::Group& g, std::mt19937_64& rng) {
  trioscan::Subset s = trioscan::Subset::empty_set(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (rng() & 1u) s.insert(x);
  }
  if (s.empty()) s.insert(0);
  return s;
}

void bm_sumset(benchmark::State& state) {
  auto g = trioscan::make_group({static_cast<int>(state.range(0))});
  std::mt19937_64 rng(7);
  auto a = random_subset(g, rng);
  auto b = random_subset(g, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trioscan::sumset(g, a, b));
  }
}
BENCHMARK(bm_sumset)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void bm_period(benchmark::State& state) {
  auto g = trioscan::make_group({static_cast<int>(state.range(0))});
  std::mt19937_64 rng(11);
  auto s = random_subset(g, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trioscan::period(g, s));
  }
}
BENCHMARK(bm_period)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void bm_tau_three_sets(benchmark::State& state) {
  auto g = trioscan::make_group({static_cast<int>(state.range(0))});
  std::mt19937_64 rng(13);
  std::vector<trioscan::Subset> sets;
  for (int i = 0; i < 3; ++i) sets.push_back(random_subset(g, rng));
  trioscan::SetSystem sys(g, sets);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trioscan::tau(sys));
  }
}
BENCHMARK(bm_tau_three_sets)->Arg(16)->Arg(64)->Arg(256);

void bm_exhaustive_kneser(benchmark::State& state) {
  auto g = trioscan::make_group({static_cast<int>(state.range(0))});
  trioscan::ScanOptions opt;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        trioscan::exhaustive_scan(g, trioscan::Property::kneser, opt));
  }
}
BENCHMARK(bm_exhaustive_kneser)->Arg(4)->Arg(5)->Arg(6);

void bm_random_trio_bound(benchmark::State& state) {
  auto g = trioscan::make_group({24});
  trioscan::ScanOptions opt;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trioscan::random_scan(
        g, trioscan::Property::trio_bound, 1000, 42, opt));
  }
}
BENCHMARK(bm_random_trio_bound);

}  // namespace

BENCHMARK_MAIN();
