#include <cstdint>
#include <random>

#include <benchmark/benchmark.h>

#include "gofk/braid.hpp"
#include "gofk/classify.hpp"
#include "gofk/cover.hpp"
#include "gofk/twobridge.hpp"
#include "gofk/verify.hpp"

using namespace gofk;

namespace {

void BM_NormalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const braid::BraidWord w = verify::random_word(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(braid::normal_form(w));
}
BENCHMARK(BM_NormalForm)->Arg(16)->Arg(64)->Arg(256);

void BM_IsConjugate(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const braid::BraidWord w = verify::random_word(rng, static_cast<std::size_t>(state.range(0)));
  const braid::BraidWord v = braid::conjugate_by(w, verify::random_word(rng, 8));
  for (auto _ : state) benchmark::DoNotOptimize(braid::is_conjugate(w, v));
}
BENCHMARK(BM_IsConjugate)->Arg(8)->Arg(32);

void BM_ClosureDeterminant(benchmark::State& state) {
  const braid::BraidWord w = classify::torus_witness(state.range(0), true);
  for (auto _ : state) benchmark::DoNotOptimize(cover::closure_determinant(w));
}
BENCHMARK(BM_ClosureDeterminant)->Arg(10)->Arg(1000);

void BM_GofCountRow(benchmark::State& state) {
  const std::int64_t alpha = state.range(0);
  const auto fractions = twobridge::canonical_fractions(alpha);
  for (auto _ : state) {
    for (const auto& f : fractions) {
      benchmark::DoNotOptimize(classify::gof_count(alpha, f.beta()).count());
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(fractions.size()));
}
BENCHMARK(BM_GofCountRow)->Arg(97)->Arg(4999);

void BM_IdentifyClosure(benchmark::State& state) {
  const braid::BraidWord w =
      classify::family_witness({classify::Family::kOne, state.range(0), state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(classify::identify_closure(w));
}
BENCHMARK(BM_IdentifyClosure)->Arg(2)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
