#include <benchmark/benchmark.h>

#include <random>

#include "meyersig/meyersig.hpp"

using namespace meyersig;

namespace {

std::vector<Int> random_primitive(int genus, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    std::vector<Int> v(static_cast<std::size_t>(2 * genus));
    bool nonzero = false;
    for (Int& x : v) {
      int e = entry(rng);
      x = e;
      nonzero = nonzero || e != 0;
    }
    if (!nonzero) continue;
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (Int& x : v) x /= g;
    return v;
  }
}

symplectic::SymplecticMatrix random_word(int genus, int length, std::mt19937_64& rng) {
  const symplectic::SymplecticForm form(genus);
  auto m = symplectic::SymplecticMatrix::identity(genus);
  for (int i = 0; i < length; ++i)
    m = m * transvection(form, symplectic::CurveClass::nonseparating(
                                   random_primitive(genus, rng)));
  return m;
}

}  // namespace

static void BM_MeyerCocycle(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1234);
  const auto a = random_word(h, 10, rng);
  const auto b = random_word(h, 10, rng);
  for (auto _ : state) {
    auto v = meyer::meyer_cocycle(a, b);
    benchmark::DoNotOptimize(v.value);
  }
}
BENCHMARK(BM_MeyerCocycle)->Arg(1)->Arg(2)->Arg(3)->Arg(5);

static void BM_SignatureOverDisk_Torus(benchmark::State& state) {
  const auto word = wordlang::parse_word("(c1 c2)^6", 1);
  for (auto _ : state) {
    Int s = fibration::signature_over_disk(word);
    benchmark::DoNotOptimize(s.get_mpz_t());
  }
}
BENCHMARK(BM_SignatureOverDisk_Torus);

static void BM_SignatureOverDisk_Genus2Chain(benchmark::State& state) {
  const auto word = wordlang::parse_word("(c1 c2 c3 c4 c5)^6", 2);
  for (auto _ : state) {
    Int s = fibration::signature_over_disk(word);
    benchmark::DoNotOptimize(s.get_mpz_t());
  }
}
BENCHMARK(BM_SignatureOverDisk_Genus2Chain);

static void BM_MonodromyImage(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  std::string text = "(";
  for (int i = 1; i <= 2 * h + 1; ++i) text += "c" + std::to_string(i) + " ";
  text += ")^4";
  const auto word = wordlang::parse_word(text, h);
  for (auto _ : state) {
    auto m = fibration::monodromy_image(word);
    benchmark::DoNotOptimize(m.matrix());
  }
}
BENCHMARK(BM_MonodromyImage)->Arg(2)->Arg(4);
