#include <doctest.h>

#include <random>

#include "maniquery/error.hpp"
#include "maniquery/expansion.hpp"
#include "oracles.hpp"

using namespace maniquery;
using Vec = std::vector<double>;

namespace {

SentenceWordMatrix dense(std::size_t cols, const std::vector<Vec>& rows) {
  std::vector<std::vector<SentenceWordMatrix::Entry>> out;
  for (const Vec& r : rows) {
    std::vector<SentenceWordMatrix::Entry> row;
    for (std::size_t j = 0; j < r.size(); ++j) row.push_back({static_cast<std::uint32_t>(j), r[j]});
    out.push_back(std::move(row));
  }
  return SentenceWordMatrix(cols, std::move(out));
}

WordSimMatrix sim_from(std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, double>>& pairs) {
  std::vector<std::vector<WordSimMatrix::Entry>> rows(dim);
  for (const auto& [i, j, s] : pairs) {
    rows[i].push_back({static_cast<std::uint32_t>(j), 1, s});
    rows[j].push_back({static_cast<std::uint32_t>(i), 1, s});
  }
  return WordSimMatrix(std::move(rows), {});
}

void check_vec(const Vec& got, const Vec& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CAPTURE(i);
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("expansion set parsing") {
  CHECK(ExpansionSet::parse("") == ExpansionSet::none());
  CHECK(ExpansionSet::parse("none") == ExpansionSet::none());
  CHECK(ExpansionSet::parse("all") == ExpansionSet::all());
  CHECK(ExpansionSet::parse("sim_word,mean,var,textrank") == ExpansionSet::all());
  const ExpansionSet s = ExpansionSet::parse(" mean , variance ");
  CHECK(s.contains(Expansion::Mean));
  CHECK(s.contains(Expansion::Variance));
  CHECK_FALSE(s.contains(Expansion::TextRank));
  CHECK(s.to_string() == "mean,var");
  CHECK(ExpansionSet::parse(ExpansionSet::all().to_string()) == ExpansionSet::all());
  CHECK_THROWS_AS(ExpansionSet::parse("mean,bogus"), ConfigError);
}

TEST_CASE("expand_simword") {
  check_vec(expand_simword(Vec{1, 0}, sim_from(2, {{0, 1, 0.5}})), {1, 0.5});
  check_vec(expand_simword(Vec{1, 2, 0}, WordSimMatrix::identity(3)), {1, 2, 0});
  check_vec(expand_simword(Vec{2, 3, 0}, sim_from(3, {{0, 2, 0.5}, {1, 2, 0.25}})), {2, 3, 1.0});
  CHECK_THROWS_AS(expand_simword(Vec{1, 2}, WordSimMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("expand_simword is monotone in T0") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const WordSimMatrix sim = sim_from(5, {{0, 1, 0.5}, {1, 2, 0.25}, {3, 4, 1.0 / 3}, {0, 4, 0.2}});
  for (int trial = 0; trial < 200; ++trial) {
    Vec t(5);
    for (double& v : t) v = u(rng) < 0.3 ? 0.0 : u(rng);
    Vec bumped = t;
    bumped[static_cast<std::size_t>(trial % 5)] += u(rng);
    const Vec a = expand_simword(t, sim);
    const Vec b = expand_simword(bumped, sim);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(b[i] >= a[i]);
      CHECK(a[i] >= t[i]);
    }
  }
}

TEST_CASE("expand_mean") {
  check_vec(expand_mean(dense(2, {{9, 9}, {1, 2}, {3, 4}})), {2, 3});
  check_vec(expand_mean(dense(2, {{9, 9}, {5, 0}})), {5, 0});
  check_vec(expand_mean(dense(2, {{9, 9}, {0, 1}, {0, 2}})), {0, 1.5});
  CHECK_THROWS_AS(expand_mean(dense(2, {{1, 1}})), EmptyTopic);
}

TEST_CASE("expand_variance") {
  check_vec(expand_variance(dense(1, {{7}, {1}, {3}})), {2});
  check_vec(expand_variance(dense(1, {{7}, {4}, {4}, {4}})), {0});
  check_vec(expand_variance(dense(1, {{7}, {1}, {2}, {3}})), {1.0});
  // Missing entries are zeros: column [0, 0, 6] has mean 2, variance 12.
  check_vec(expand_variance(dense(1, {{7}, {0}, {0}, {6}})), {12});
  CHECK_THROWS_AS(expand_variance(dense(1, {{7}, {1}})), TooFewRows);
}

TEST_CASE("expand_textrank") {
  // Query row plus three sentences over four words. Rows normalise to
  // [.5 .5 0 0], [0 .5 .5 0], [0 0 .25 .75]; y = S^T p = [.25, .40, .20, .15].
  const SentenceWordMatrix a = dense(4, {{1, 1, 1, 1}, {1, 1, 0, 0}, {0, 2, 2, 0}, {0, 0, 1, 3}});
  const Vec p = {0.5, 0.3, 0.2};
  check_vec(expand_textrank(a, p, 2), {1, 1, 0, 0});
  check_vec(expand_textrank(a, p, 0), {0, 0, 0, 0});
  check_vec(expand_textrank(a, p, 10), {1, 1, 1, 1});
  // Words nobody scores are never selected, whatever c is.
  const SentenceWordMatrix b = dense(3, {{1, 1, 1}, {1, 0, 0}, {0, 2, 0}});
  check_vec(expand_textrank(b, Vec{0.5, 0.5}, 10), {1, 1, 0});
  // Ties go to the earlier column.
  check_vec(expand_textrank(b, Vec{0.5, 0.5}, 1), {1, 0, 0});
  CHECK_THROWS_AS(expand_textrank(a, Vec{1.0}, 2), DimensionMismatch);
}

TEST_CASE("expand_textrank picks the brute-force top c") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t docs = 2 + rng() % 5;
    const std::size_t words = 2 + rng() % 7;
    std::vector<Vec> rows(docs + 1, Vec(words, 0.0));
    for (auto& r : rows) {
      for (double& v : r) v = rng() % 3 == 0 ? 0.0 : static_cast<double>(1 + rng() % 97) / 7.0;
    }
    Vec p(docs);
    for (double& v : p) v = static_cast<double>(1 + rng() % 1000) / 1000.0;
    const std::size_t c = rng() % (words + 2);
    const SentenceWordMatrix a = dense(words, rows);

    const Vec want = mqtest::brute_top_c(rows, p, c);
    CAPTURE(trial);
    const Vec got = expand_textrank(a, p, c);
    check_vec(got, want);
    std::size_t ones = 0;
    for (double v : got) {
      CHECK((v == 0.0 || v == 1.0));
      ones += v == 1.0;
    }
    CHECK(ones <= c);
  }
}

TEST_CASE("combine_expansions") {
  const Vec t0 = {1, 0};
  ExpansionComponents comp;
  comp.sim_word = Vec{1, 0.5};
  comp.mean = Vec{2, 3};
  comp.variance = Vec{0, 1};
  comp.textrank = Vec{1, 0};

  ExpansionConfig all;
  check_vec(combine_expansions(t0, comp, all).values, {4, 4.5});

  ExpansionConfig none;
  none.enabled = ExpansionSet::none();
  check_vec(combine_expansions(t0, comp, none).values, t0);

  ExpansionConfig sim_only;
  sim_only.theta_mean = sim_only.theta_var = sim_only.theta_rank = 0.0;
  check_vec(combine_expansions(t0, comp, sim_only).values, *comp.sim_word);

  ExpansionConfig no_sim;
  no_sim.enabled.erase(Expansion::SimWord);
  check_vec(combine_expansions(t0, comp, no_sim).values, {1 + 2 + 0 + 1, 0 + 3 + 1 + 0});

  ExpansionComponents bad = comp;
  bad.mean = Vec{1, 2, 3};
  CHECK_THROWS_AS(combine_expansions(t0, bad, all), DimensionMismatch);
}

TEST_CASE("combine_expansions is linear in each theta") {
  const Vec t0 = {0.3, 0, 1.2};
  ExpansionComponents comp;
  comp.sim_word = Vec{0.3, 0.6, 1.2};
  comp.mean = Vec{0.1, 0.7, 0.2};
  comp.variance = Vec{0.05, 0.4, 0.9};
  comp.textrank = Vec{1, 0, 1};
  ExpansionConfig base;
  base.theta_mean = 0.7;
  base.theta_var = 1.3;
  base.theta_rank = 0.4;
  const Vec b = combine_expansions(t0, comp, base).values;

  auto check_double = [&](double ExpansionConfig::*theta, const Vec& component) {
    ExpansionConfig twice = base;
    twice.*theta *= 2.0;
    const Vec d = combine_expansions(t0, comp, twice).values;
    for (std::size_t j = 0; j < t0.size(); ++j) {
      CHECK(d[j] - b[j] == doctest::Approx(base.*theta * component[j]).epsilon(1e-12));
    }
  };
  check_double(&ExpansionConfig::theta_mean, *comp.mean);
  check_double(&ExpansionConfig::theta_var, *comp.variance);
  check_double(&ExpansionConfig::theta_rank, *comp.textrank);
}
