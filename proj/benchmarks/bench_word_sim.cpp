#include <set>

#include <benchmark/benchmark.h>

#include "maniquery/corpus.hpp"
#include "maniquery/wordnet.hpp"

namespace {

const std::filesystem::path kData = MANIQUERY_TEST_DATA;

const maniquery::SynsetGraph& stub() {
  static const maniquery::SynsetGraph g = maniquery::SynsetGraph::load(kData / "wordnet_stub");
  return g;
}

// Every lemma of the stub as a vocabulary word.
std::vector<maniquery::Term> lemma_vocabulary() {
  const auto& g = stub();
  std::vector<maniquery::Term> out;
  std::set<std::string> seen;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    for (const std::string& lemma : g.synset(maniquery::SynsetId{i}).lemmas) {
      if (!seen.insert(lemma).second) continue;
      maniquery::Term t;
      t.lemma = t.stem = lemma;
      for (maniquery::Pos pos : maniquery::kAllPos) {
        if (g.in_index(lemma, pos)) t.pos_tags.insert(pos);
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

void BM_LoadStub(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(maniquery::SynsetGraph::load(kData / "wordnet_stub"));
}
BENCHMARK(BM_LoadStub);

void BM_BuildWordSim(benchmark::State& state) {
  const auto vocab = lemma_vocabulary();
  const maniquery::WordSimParams params{1.0, static_cast<int>(state.range(0)),
                                        maniquery::WordSimParams{}.max_neighbors};
  for (auto _ : state) benchmark::DoNotOptimize(maniquery::build_word_sim_matrix(stub(), vocab, params));
  state.counters["words"] = static_cast<double>(vocab.size());
}
BENCHMARK(BM_BuildWordSim)->DenseRange(0, 6, 2);

void BM_ToyTopicMatrix(benchmark::State& state) {
  const auto text = maniquery::read_topic_text(kData / "toy_corpus" / "t01_honeybees");
  for (auto _ : state) {
    const auto topic = maniquery::make_topic(text, maniquery::default_stopwords(), &stub());
    benchmark::DoNotOptimize(maniquery::build_matrix(topic));
  }
}
BENCHMARK(BM_ToyTopicMatrix);

}  // namespace
