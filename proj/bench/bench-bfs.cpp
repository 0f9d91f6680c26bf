// Breadth-first product enumeration: OpenMP layer expansion against the
// serial reference.

#include <vector>  // for vector

#include <benchmark/benchmark.h>

#include "nilid/matrix_ut.hpp"
#include "nilid/oracle.hpp"

namespace {

  using nilid::Integer;
  using nilid::MatrixUT;

  // Five generators of UT(4) with small entries, as in the desk-scale
  // oracle checks; depth 8 reaches a few hundred thousand elements.
  std::vector<MatrixUT> generators() {
    auto e = [](std::size_t i, std::size_t j, long k) {
      return nilid::elementary(4, i, j, Integer(k));
    };
    return {mul(e(1, 2, 1), e(3, 4, -2)), mul(e(2, 3, 1), e(1, 3, 3)),
            mul(e(1, 2, -1), e(2, 4, 1)), e(3, 4, 1),
            mul(e(1, 4, 2), e(2, 3, -1))};
  }

  void BM_BfsSerial(benchmark::State& state) {
    auto gens = generators();
    for (auto _ : state) {
      auto r = nilid::oracle::bfs_products_serial(
          gens, static_cast<std::size_t>(state.range(0)));
      benchmark::DoNotOptimize(r.size());
      state.counters["elements"] = static_cast<double>(r.size());
    }
  }

  void BM_BfsParallel(benchmark::State& state) {
    auto gens = generators();
    for (auto _ : state) {
      auto r = nilid::oracle::bfs_products(
          gens, static_cast<std::size_t>(state.range(0)));
      benchmark::DoNotOptimize(r.size());
      state.counters["elements"] = static_cast<double>(r.size());
    }
  }

}  // namespace

BENCHMARK(BM_BfsSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BfsParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
