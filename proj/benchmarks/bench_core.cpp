#include <benchmark/benchmark.h>

#include <random>

#include "zsum/automorphisms.hpp"
#include "zsum/search.hpp"
#include "zsum/verify.hpp"

using namespace zsum;

namespace {

Sequence random_sequence(const AbelianGroup& g, int length, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, static_cast<int>(g.order()) - 1);
  std::vector<int> items(static_cast<size_t>(length));
  for (auto& x : items) x = dist(rng);
  return Sequence::from_indices(g, items);
}

void BM_LengthSetDp(benchmark::State& state) {
  auto g = make_group({2, 4});
  Sequence s = random_sequence(g, static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(length_set(s, s.length()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LengthSetDp)->Arg(16)->Arg(32)->Arg(64);

void BM_DpExtend(benchmark::State& state) {
  auto g = make_group({32});
  SubsetSumDp src(g, 64), dst(g, 64);
  int e = 1;
  for (auto _ : state) {
    SubsetSumDp::extend(src, dst, e);
    benchmark::DoNotOptimize(dst);
    e = (e + 1) % 32;
  }
}
BENCHMARK(BM_DpExtend);

void BM_DavenportSearch(benchmark::State& state) {
  std::vector<int> factors;
  switch (state.range(0)) {
    case 16: factors = {16}; break;
    case 27: factors = {27}; break;
    default: factors = {32}; break;
  }
  auto g = make_group(factors);
  SearchOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto res = s_l(g, LengthSpec::all(), opts);
    benchmark::DoNotOptimize(res);
    state.counters["nodes"] = static_cast<double>(res.stats.nodes);
  }
}
BENCHMARK(BM_DavenportSearch)
    ->Args({16, 1})
    ->Args({27, 1})
    ->Args({32, 1})
    ->Args({32, 4})
    ->Unit(benchmark::kMillisecond);

void BM_EtaSearch(benchmark::State& state) {
  auto g = make_group({3, 9});
  SearchOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = s_l(g, LengthSpec::range(1, g.exponent()), opts);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_EtaSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ZeroSumEnumeration(benchmark::State& state) {
  auto g = make_group({2, 4});
  EnumerationOptions opts;
  opts.zero_sum_only = true;
  opts.up_to_aut = state.range(0) != 0;
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_sequence(g, 8, opts, [&](const Sequence&, const LengthSet&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
    state.counters["sequences"] = static_cast<double>(count);
  }
}
BENCHMARK(BM_ZeroSumEnumeration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AutomorphismClosure(benchmark::State& state) {
  auto g = make_group({2, 2, 2, 2});
  for (auto _ : state) {
    auto closure = automorphism_closure(g);
    benchmark::DoNotOptimize(closure);
  }
}
BENCHMARK(BM_AutomorphismClosure)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
