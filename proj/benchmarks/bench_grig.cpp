#include <benchmark/benchmark.h>

#include <random>

#include "grig/full_group.hpp"
#include "grig/omega.hpp"
#include "grig/schreier.hpp"
#include "grig/subshift.hpp"
#include "grig/verify.hpp"

namespace {

void BM_IsTrivial(benchmark::State& state) {
  const auto omega = grig::OmegaSequence::parse("012");
  std::mt19937_64 rng(1);
  std::vector<grig::GeneratorWord> words;
  for (int k = 0; k < 256; ++k) {
    grig::GeneratorWord w;
    for (std::int64_t i = 0; i < state.range(0); ++i) w.push_back(static_cast<grig::Generator>(rng() % 4));
    words.push_back(w);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(grig::is_trivial(words[i++ % words.size()], omega));
}
BENCHMARK(BM_IsTrivial)->RangeMultiplier(4)->Range(16, 4096);

void BM_Language(benchmark::State& state) {
  const auto omega = grig::OmegaSequence::parse("10:012");
  for (auto _ : state) {
    grig::Subshift x(omega);  // fresh cache every time
    benchmark::DoNotOptimize(x.complexity(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Language)->RangeMultiplier(4)->Range(16, 1024);

void BM_BuildGamma(benchmark::State& state) {
  const auto omega = grig::OmegaSequence::parse("012");
  for (auto _ : state) {
    benchmark::DoNotOptimize(grig::build_gamma_recursive(omega, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_BuildGamma)->DenseRange(4, 16, 4);

void BM_BuildGammaOrbit(benchmark::State& state) {
  const auto omega = grig::OmegaSequence::parse("012");
  const std::size_t count = std::size_t{2} << state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(grig::build_gamma_orbit(omega, count, false));
}
BENCHMARK(BM_BuildGammaOrbit)->DenseRange(4, 16, 4);

void BM_EmbedWord(benchmark::State& state) {
  const auto x = std::make_shared<const grig::Subshift>(grig::OmegaSequence::parse("012"));
  std::mt19937_64 rng(2);
  grig::GeneratorWord w;
  for (std::int64_t i = 0; i < state.range(0); ++i) w.push_back(static_cast<grig::Generator>(rng() % 4));
  for (auto _ : state) benchmark::DoNotOptimize(grig::embed_word(w, x));
}
BENCHMARK(BM_EmbedWord)->RangeMultiplier(2)->Range(2, 32);

void BM_VerifyQuick(benchmark::State& state) {
  grig::VerifyOptions options;
  options.omegas = {grig::OmegaSequence::parse("012")};
  options.quick = true;
  for (auto _ : state) benchmark::DoNotOptimize(grig::run_verification(options).passed());
}
BENCHMARK(BM_VerifyQuick)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
