#include <benchmark/benchmark.h>

#include "maniquery/pipeline.hpp"

namespace {

const std::filesystem::path kData = MANIQUERY_TEST_DATA;

const maniquery::SynsetGraph& stub() {
  static const maniquery::SynsetGraph g = maniquery::SynsetGraph::load(kData / "wordnet_stub");
  return g;
}

void BM_SummarizeToyTopic(benchmark::State& state) {
  const auto text = maniquery::read_topic_text(kData / "toy_corpus" / "t01_honeybees");
  maniquery::PipelineConfig config;
  if (state.range(0) == 0) config.expansions = maniquery::ExpansionSet::none();
  for (auto _ : state) benchmark::DoNotOptimize(maniquery::summarize_topic(text, config, &stub()));
}
BENCHMARK(BM_SummarizeToyTopic)->Arg(0)->Arg(1)->ArgName("expansions");

void BM_ToyCorpusRun(benchmark::State& state) {
  maniquery::PipelineConfig config;
  config.corpus_dir = kData / "toy_corpus";
  config.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maniquery::run_pipeline(config, &stub(), {.write_outputs = false}));
  }
}
BENCHMARK(BM_ToyCorpusRun)->Arg(1)->Arg(2)->ArgName("workers")->UseRealTime();

}  // namespace
