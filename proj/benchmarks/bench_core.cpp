#include <benchmark/benchmark.h>

#include "cospec/bkq.hpp"
#include "cospec/catalog.hpp"
#include "cospec/fixtures.hpp"
#include "cospec/groebner.hpp"
#include "cospec/regularity.hpp"
#include "cospec/switching.hpp"

#include <random>

using namespace cospec;

namespace {

RatMatrix random_01(int n, unsigned seed) {
  std::mt19937 rng(seed);
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng() % 2) m.at(i, j) = Rational(1);
  return m;
}

Hypergraph complete3(int n) {
  return Hypergraph::on_range(3, n, k_subsets(n, 3));
}

void BM_Permanent(benchmark::State& state) {
  RatMatrix m = random_01(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_Permanent)->Arg(6)->Arg(8)->Arg(10);

void BM_Conjugate_Fano(benchmark::State& state) {
  // Full rank-3 conjugation of a 10-vertex adjacency tensor by the
  // embedded Fano matrix.
  Fixture f = fixture("fano");
  RatMatrix q = place_on(build(f.family), f.c, f.g.n());
  SymTensor t = adjacency_tensor(f.g);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate(q.transpose(), t));
}
BENCHMARK(BM_Conjugate_Fano)->Unit(benchmark::kMillisecond);

void BM_CertifyFixture(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_fixture("cube"));
}
BENCHMARK(BM_CertifyFixture)->Unit(benchmark::kMillisecond);

void BM_Vq(benchmark::State& state) {
  RatMatrix r = build(SwitchFamily::parse("gm:" +
                                          std::to_string(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(vq(r));
}
BENCHMARK(BM_Vq)->Arg(8)->Arg(12);

void BM_EnumerateBkq_Sun2(benchmark::State& state) {
  RatMatrix r = build(SwitchFamily::parse("sg:6"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bkq(r, 2));
}
BENCHMARK(BM_EnumerateBkq_Sun2)->Unit(benchmark::kMillisecond);

void BM_EnumerateBkq_Fano3(benchmark::State& state) {
  // The pruned 2^35 search.
  RatMatrix r = build(SwitchFamily::parse("fano"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bkq(r, 3));
}
BENCHMARK(BM_EnumerateBkq_Fano3)->Unit(benchmark::kMillisecond);

void BM_Regularity_Sweep5(benchmark::State& state) {
  // All 1024 rank-3 hypergraphs on 5 vertices.
  auto subs = k_subsets(5, 3);
  for (auto _ : state) {
    int regular = 0;
    for (unsigned long mask = 0; mask < 1024; ++mask) {
      std::vector<std::vector<int>> es;
      for (size_t i = 0; i < subs.size(); ++i)
        if (mask >> i & 1) es.push_back(subs[i]);
      Hypergraph g = Hypergraph::on_range(3, 5, std::move(es));
      if (decide_regularity(g).regular) ++regular;
    }
    benchmark::DoNotOptimize(regular);
  }
}
BENCHMARK(BM_Regularity_Sweep5)->Unit(benchmark::kMillisecond);

void BM_Eliminate_Complete4(benchmark::State& state) {
  SymTensor t = adjacency_tensor(complete3(4));
  for (auto _ : state)
    benchmark::DoNotOptimize(echar_eliminate(t, true));
}
BENCHMARK(BM_Eliminate_Complete4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
