#include <benchmark/benchmark.h>

#include <random>

#include "meyersig/linalg.hpp"

using namespace meyersig;

namespace {

RatMatrix random_symmetric(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-9, 9);
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int e = entry(rng);
      m(i, j) = e;
      m(j, i) = e;
    }
  return m;
}

}  // namespace

static void BM_SignatureOfSymmetric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(99);
  const RatMatrix m = random_symmetric(n, rng);
  for (auto _ : state) {
    auto t = linalg::signature_of_symmetric(m);
    benchmark::DoNotOptimize(t.pos);
  }
}
BENCHMARK(BM_SignatureOfSymmetric)->Arg(4)->Arg(8)->Arg(12);

static void BM_KernelBasis(benchmark::State& state) {
  // Shape of the Meyer-form system at genus range(0).
  const int h = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  RatMatrix m(2 * h, 4 * h);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  for (auto _ : state) {
    auto basis = linalg::kernel_basis(m);
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(BM_KernelBasis)->Arg(1)->Arg(2)->Arg(3)->Arg(5);
