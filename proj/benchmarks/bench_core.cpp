#include <benchmark/benchmark.h>

#include "coinv/artinian.hpp"
#include "coinv/inverse_system.hpp"
#include "coinv/matrix.hpp"
#include "coinv/random_lm.hpp"
#include "coinv/simplicial_complex.hpp"

using namespace coinv;

namespace {

SimplicialComplex ten_vertex_sphere() {
  return SimplicialComplex::from_facets(
      {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5}, {2, 3, 9}, {2, 8, 9},
       {2, 5, 7}, {2, 7, 8}, {4, 5, 7}, {6, 7, 4}, {3, 4, 6}, {3, 6, 9},
       {7, 8, 0}, {6, 7, 0}, {6, 9, 0}, {8, 9, 0}});
}

ExactMatrix random_sparse(int rows, int cols, std::uint64_t seed) {
  ExactMatrix m(rows, cols);
  std::uint64_t s = seed;
  auto next = [&]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (next() % 100 < 20) m.set(i, j, Rat(static_cast<long>(next() % 7) - 3));
    }
  }
  return m;
}

void BM_RankRationals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ExactMatrix m = random_sparse(n, n, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m, Field::rationals()));
  }
}
BENCHMARK(BM_RankRationals)->Arg(40)->Arg(80);

void BM_RankPrime(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ExactMatrix m = random_sparse(n, n, 42);
  const Field f = Field::prime(2147483647);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m, f));
  }
}
BENCHMARK(BM_RankPrime)->Arg(80)->Arg(160)->Arg(320);

void BM_LefschetzVerdict(benchmark::State& state) {
  const SimplicialComplex gamma = ten_vertex_sphere();
  for (auto _ : state) {
    const ArtinianSpec spec = ArtinianSpec::uniform(gamma, 4, Field::rationals());
    benchmark::DoNotOptimize(lefschetz_verdict(spec).wlp_holds);
  }
}
BENCHMARK(BM_LefschetzVerdict);

void BM_DualGenerators(benchmark::State& state) {
  const SimplicialComplex gamma = ten_vertex_sphere();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dual_module_generators(gamma, universal_parameters(gamma), -1, Field::rationals())
            .generator_counts.back());
  }
}
BENCHMARK(BM_DualGenerators);

void BM_SampleComplex(benchmark::State& state) {
  LMConfig cfg;
  cfg.n = 12;
  cfg.d = 2;
  cfg.p = 0.4;
  cfg.trials = 1;
  cfg.seed = 7;
  long long t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_complex(cfg, t++).face_count(2));
  }
}
BENCHMARK(BM_SampleComplex);

}  // namespace

BENCHMARK_MAIN();
