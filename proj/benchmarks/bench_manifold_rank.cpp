#include <random>

#include <benchmark/benchmark.h>

#include "maniquery/graphrank.hpp"

namespace {

Eigen::MatrixXd random_graph(int n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < density) w(i, j) = w(j, i) = unit(rng);
    }
  }
  return w;
}

std::vector<double> query_indicator(int n) {
  std::vector<double> y(n, 0.0);
  y[0] = 1.0;
  return y;
}

void BM_ManifoldIterative(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd w = random_graph(n, 0.3, 1);
  const auto y = query_indicator(n);
  for (auto _ : state) benchmark::DoNotOptimize(maniquery::manifold_rank(w, y, 0.6));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ManifoldIterative)->RangeMultiplier(2)->Range(32, 1024)->Complexity();

void BM_ManifoldClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd w = random_graph(n, 0.3, 1);
  const auto y = query_indicator(n);
  for (auto _ : state) benchmark::DoNotOptimize(maniquery::manifold_rank_closed_form(w, y, 0.6));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ManifoldClosedForm)->RangeMultiplier(2)->Range(32, 1024)->Complexity();

void BM_TextRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd w = random_graph(n, 0.3, 2);
  std::vector<double> rel(n, 0.0);
  for (int i = 0; i < n; i += 3) rel[i] = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(maniquery::textrank_scores(w, rel, 0.6, 0.4));
}
BENCHMARK(BM_TextRank)->RangeMultiplier(4)->Range(32, 1024);

}  // namespace
