#pragma once

// Slow, obviously-correct reference computations shared by the unit tests
// and the acceptance driver. Nothing here calls the routine it checks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maniquery/corpus.hpp"
#include "maniquery/text.hpp"
#include "maniquery/wordnet.hpp"
#include "test_support.hpp"

namespace mqtest {

/// Full BFS over hypernym links, no cap.
inline std::optional<int> plain_bfs(const maniquery::SynsetGraph& g, maniquery::SynsetId from,
                                    maniquery::SynsetId to) {
  std::vector<int> dist(g.size(), -1);
  std::deque<maniquery::SynsetId> queue{from};
  dist[from.value] = 0;
  while (!queue.empty()) {
    const maniquery::SynsetId cur = queue.front();
    queue.pop_front();
    for (maniquery::SynsetId next : g.neighbors(cur)) {
      if (dist[next.value] < 0) {
        dist[next.value] = dist[cur.value] + 1;
        queue.push_back(next);
      }
    }
  }
  if (dist[to.value] < 0) return std::nullopt;
  return dist[to.value];
}

/// First 50 distinct stems of the toy corpus, in topic then vocabulary order.
inline std::vector<maniquery::Term> stub_vocabulary(const maniquery::SynsetGraph& g) {
  std::vector<maniquery::Term> vocab;
  std::set<std::string> stems;
  for (const char* topic : {"t01_honeybees", "t02_coral_reefs"}) {
    const maniquery::Topic t =
        maniquery::load_topic(toy_corpus_dir() / topic, maniquery::default_stopwords(), &g);
    for (const maniquery::Term& term : t.vocabulary) {
      if (vocab.size() < 50 && stems.insert(term.stem).second) vocab.push_back(term);
    }
  }
  return vocab;
}

/// Minimum distance over every sense pair, -1 when no pair connects.
/// Similar-to links count as distance 1.
inline std::vector<std::vector<int>> brute_word_distances(const maniquery::SynsetGraph& g,
                                                          const std::vector<maniquery::Term>& vocab) {
  const std::size_t n = vocab.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || vocab[i].stem == vocab[j].stem) {
        dist[i][j] = 0;
        continue;
      }
      for (maniquery::SynsetId a : maniquery::term_senses(g, vocab[i])) {
        for (maniquery::SynsetId b : maniquery::term_senses(g, vocab[j])) {
          std::optional<int> d = a == b ? std::optional<int>(0) : plain_bfs(g, a, b);
          const auto sim = g.similar_to(a);
          if (std::find(sim.begin(), sim.end(), b) != sim.end()) d = d ? std::min(*d, 1) : 1;
          if (d && (dist[i][j] < 0 || *d < dist[i][j])) dist[i][j] = *d;
        }
      }
    }
  }
  return dist;
}

/// Dense filtered similarity: keep d <= L, then drop every entry of a word
/// with more than C neighbours. Diagonal left at 0.
inline std::vector<std::vector<double>> brute_word_sim(const std::vector<std::vector<int>>& dist,
                                                       double a, int L, std::size_t C) {
  const std::size_t n = dist.size();
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && dist[i][j] >= 0 && dist[i][j] <= L) ++degree[i];
    }
  }
  std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || dist[i][j] < 0 || dist[i][j] > L) continue;
      if (degree[i] > C || degree[j] > C) continue;
      out[i][j] = a / (a + dist[i][j]);
    }
  }
  return out;
}

/// Scores every alignment (increasing index pairs with equal tokens) by the
/// sum of k^w over its maximal consecutive runs; returns the best.
inline double exhaustive_wlcs(const std::vector<std::string>& x, const std::vector<std::string>& y,
                              double w) {
  double best = 0.0;
  std::function<void(std::size_t, std::size_t, double, int)> walk =
      [&](std::size_t i0, std::size_t j0, double closed, int run) {
        best = std::max(best, closed + std::pow(run, w));
        for (std::size_t i = i0; i < x.size(); ++i) {
          for (std::size_t j = j0; j < y.size(); ++j) {
            if (x[i] != y[j]) continue;
            if (run > 0 && i == i0 && j == j0) {
              walk(i + 1, j + 1, closed, run + 1);
            } else {
              walk(i + 1, j + 1, closed + (run > 0 ? std::pow(run, w) : 0.0), 1);
            }
          }
        }
      };
  walk(0, 0, 0.0, 0);
  return best;
}

/// Indicator of the c largest y_j > 0 of y = S^T p, with S the
/// row-normalised document rows (rows[1..]) of a dense matrix.
inline std::vector<double> brute_top_c(const std::vector<std::vector<double>>& rows,
                                       const std::vector<double>& p, std::size_t c) {
  const std::size_t words = rows.empty() ? 0 : rows[0].size();
  std::vector<double> y(words, 0.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double total = 0.0;
    for (double v : rows[i]) total += v;
    if (total <= 0.0) continue;
    for (std::size_t j = 0; j < words; ++j) y[j] += rows[i][j] / total * p[i - 1];
  }
  std::vector<double> want(words, 0.0);
  for (std::size_t k = 0; k < c; ++k) {
    std::size_t best = words;
    for (std::size_t j = 0; j < words; ++j) {
      if (want[j] == 0.0 && y[j] > 0.0 && (best == words || y[j] > y[best] + 1e-12)) best = j;
    }
    if (best == words) break;
    want[best] = 1.0;
  }
  return want;
}

inline maniquery::SentenceWordMatrix dense_matrix(std::size_t cols,
                                                  const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<maniquery::SentenceWordMatrix::Entry>> out;
  for (const auto& r : rows) {
    std::vector<maniquery::SentenceWordMatrix::Entry> row;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] > 0.0) row.push_back({static_cast<std::uint32_t>(j), r[j]});
    }
    out.push_back(std::move(row));
  }
  return maniquery::SentenceWordMatrix(cols, std::move(out));
}

}  // namespace mqtest
