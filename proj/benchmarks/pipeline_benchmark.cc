#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "urisense/colorspace.hpp"
#include "urisense/fuzzy.hpp"
#include "urisense/imaging.hpp"
#include "urisense/pipeline.hpp"

namespace urisense {
namespace {

RgbImage random_image(std::size_t size) {
  std::mt19937_64 rng(size);
  std::uniform_int_distribution<int> channel(0, 255);
  std::vector<Rgb> px(size * size);
  for (Rgb& p : px) {
    p = {double(channel(rng)), double(channel(rng)), double(channel(rng))};
  }
  return RgbImage(size, size, std::move(px));
}

void BM_Denoise(benchmark::State& state) {
  const RgbImage img = random_image(static_cast<std::size_t>(state.range(0)));
  const KernelSize kernel{static_cast<int>(state.range(1)), static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(denoise(img, kernel));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_ExtractHue(benchmark::State& state) {
  const RgbImage img = random_image(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_hue(img));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_Classify(benchmark::State& state) {
  const Classifier classifier = Classifier::with_defaults();
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classifier.classify(x));
    x = x < 0.999 ? x + 0.001 : 0.0;
  }
}

void BM_Analyze(benchmark::State& state) {
  const RgbImage img = random_image(static_cast<std::size_t>(state.range(0)));
  const Classifier classifier = Classifier::with_defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(img, {1, 1}, classifier));
  }
}

BENCHMARK(BM_Denoise)->Args({64, 1})->Args({256, 1})->Args({256, 3})->Args({1024, 1});
BENCHMARK(BM_ExtractHue)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_Classify);
BENCHMARK(BM_Analyze)->Arg(256)->Arg(640);

}  // namespace
}  // namespace urisense

BENCHMARK_MAIN();
