#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "gex/checker.hpp"
#include "gex/families.hpp"
#include "gex/rewrite.hpp"
#include "gex/tideal.hpp"

namespace {

using namespace gex;

std::vector<BasisWord> random_words(std::uint32_t rank, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> bit(0, 1);
  std::vector<BasisWord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BasisWord w;
    for (std::uint32_t g = 1; g <= rank; ++g)
      if (bit(rng)) w = w.unite(BasisWord::single(g));
    out.push_back(w);
  }
  return out;
}

void BM_word_mul(benchmark::State& state) {
  const auto words = random_words(64, 256, 17);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = words[i % words.size()];
    const auto& b = words[(i * 7 + 3) % words.size()];
    benchmark::DoNotOptimize(BasisWord::mul(a, b));
    ++i;
  }
}
BENCHMARK(BM_word_mul);

void BM_element_mul(benchmark::State& state) {
  const Field f = Field::rationals();
  const std::uint32_t rank = 24;
  Element a(f, rank), b(f, rank);
  const auto wa = random_words(rank, 48, 5);
  const auto wb = random_words(rank, 48, 9);
  for (std::size_t i = 0; i < wa.size(); ++i) {
    a.add_term(wa[i], Scalar(f, static_cast<long long>(i) + 1));
    b.add_term(wb[i], Scalar(f, 2 * static_cast<long long>(i) - 7));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_element_mul);

void BM_reduce_mod_I(benchmark::State& state) {
  const Field f = Field::rationals();
  const FreePoly g = g_poly(f, {1, 1, 1, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(reduce_mod_I(g));
}
BENCHMARK(BM_reduce_mod_I);

void BM_identity_space(benchmark::State& state) {
  const Field f = Field::rationals();
  const Algebra A{f, 16, grading_preset("infinity")};
  std::vector<GVar> vars;
  for (std::uint32_t i = 1; i <= 4; ++i)
    vars.push_back(GVar{'x', i, static_cast<std::int64_t>(i % 3)});
  const SignatureSpace S(f, vars);
  for (auto _ : state) benchmark::DoNotOptimize(identity_space(A, S));
}
BENCHMARK(BM_identity_space);

}  // namespace

BENCHMARK_MAIN();
