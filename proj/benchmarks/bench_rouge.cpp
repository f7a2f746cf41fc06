#include <random>

#include <benchmark/benchmark.h>

#include "maniquery/rouge.hpp"

namespace {

maniquery::TokenSeq random_tokens(std::size_t n, int vocab, unsigned seed) {
  std::mt19937 rng(seed);
  maniquery::TokenSeq out(n);
  for (auto& t : out) t = "w" + std::to_string(rng() % vocab);
  return out;
}

void run(benchmark::State& state, maniquery::RougeMetric metric) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto cand = random_tokens(n, 300, 1);
  const std::vector<maniquery::TokenSeq> refs = {random_tokens(n, 300, 2), random_tokens(n, 300, 3),
                                                 random_tokens(n, 300, 4), random_tokens(n, 300, 5)};
  for (auto _ : state) benchmark::DoNotOptimize(maniquery::rouge_metric(metric, cand, refs));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}

void BM_Rouge1(benchmark::State& s) { run(s, maniquery::RougeMetric::R1); }
void BM_Rouge2(benchmark::State& s) { run(s, maniquery::RougeMetric::R2); }
void BM_RougeW(benchmark::State& s) { run(s, maniquery::RougeMetric::RW); }
void BM_RougeSU4(benchmark::State& s) { run(s, maniquery::RougeMetric::RSU4); }

BENCHMARK(BM_Rouge1)->Arg(250)->Arg(1000);
BENCHMARK(BM_Rouge2)->Arg(250)->Arg(1000);
BENCHMARK(BM_RougeW)->Arg(250)->Arg(1000);
BENCHMARK(BM_RougeSU4)->Arg(250)->Arg(1000);

void BM_Tokenize(benchmark::State& state) {
  const std::string text =
      "Honey bee colonies across the region collapsed during the winter, and keepers blamed "
      "varroa mites, pesticide exposure and poor forage for the losses.";
  for (auto _ : state) benchmark::DoNotOptimize(maniquery::rouge_tokenize(text));
}
BENCHMARK(BM_Tokenize);

}  // namespace
