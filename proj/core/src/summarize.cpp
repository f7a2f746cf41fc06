#include "maniquery/summarize.hpp"

#include <cctype>

#include "maniquery/error.hpp"

namespace maniquery {

std::string first_words(std::string_view text, std::size_t count) {
  std::string out;
  std::size_t taken = 0;
  std::size_t i = 0;
  while (i < text.size() && taken < count) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) break;
    if (!out.empty()) out += ' ';
    out.append(text.substr(start, i - start));
    ++taken;
  }
  return out;
}

Summary extract_summary(const RankVector& scores, const SimilarityGraph& graph,
                        std::span<const Sentence> rows, const SummaryOptions& options) {
  const std::size_t n = rows.size();
  if (n < 2) throw EmptyRanking("no document sentences to rank");
  if (scores.scores.size() != n || graph.size() != n) {
    throw DimensionMismatch("scores, graph and sentence rows disagree in size");
  }
  if (options.budget == 0) throw Error("summary budget must be positive");
  if (!(options.omega >= 0.0)) throw Error("de-redundancy omega must be non-negative");

  // Row-normalised document block of W.
  std::vector<double> row_sum(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = 1; k < n; ++k) {
      row_sum[j] += graph.w(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
    }
  }
  auto transition = [&](std::size_t j, std::size_t k) {
    return row_sum[j] > 0.0
               ? graph.w(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) / row_sum[j]
               : 0.0;
  };

  std::vector<double> f = scores.scores;
  std::vector<bool> taken(n, false);
  taken[0] = true;
  Summary out;
  for (std::size_t round = 1; round < n; ++round) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (!taken[j] && (best == 0 || f[j] > f[best])) best = j;
    }
    const Sentence& pick = rows[best];
    const std::size_t remaining = options.budget - out.word_count;
    std::string text = pick.raw_text;
    std::size_t words = pick.word_count;
    if (words > remaining) {
      text = first_words(pick.raw_text, remaining);
      words = remaining;
      out.truncated = true;
    }
    taken[best] = true;
    out.selected.push_back(best);
    out.sentences.push_back(std::move(text));
    out.word_count += words;

    PickRecord record{best, f[best], {}};
    if (!out.truncated && out.word_count < options.budget) {
      const double picked = f[best];
      for (std::size_t j = 1; j < n; ++j) {
        if (taken[j]) continue;
        const double amount = options.omega * transition(j, best) * picked;
        if (amount != 0.0) {
          f[j] -= amount;
          record.penalties.push_back({j, amount});
        }
      }
    }
    out.trace.push_back(std::move(record));
    if (out.truncated || out.word_count >= options.budget) break;
  }

  for (std::size_t k = 0; k < out.sentences.size(); ++k) {
    if (k) out.text += '\n';
    out.text += out.sentences[k];
  }
  return out;
}

}  // namespace maniquery
