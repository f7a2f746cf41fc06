#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "maniquery/corpus.hpp"
#include "maniquery/graphrank.hpp"

namespace maniquery {

struct SummaryOptions {
  double omega = 8.0;       // de-redundancy strength
  std::size_t budget = 250;  // whitespace words
};

struct Penalty {
  std::size_t sentence = 0;
  double amount = 0.0;
};

struct PickRecord {
  std::size_t sentence = 0;  // topic row
  double score = 0.0;        // penalised score at pick time
  std::vector<Penalty> penalties;  // applied to unselected sentences after the pick
};

struct Summary {
  std::vector<std::size_t> selected;  // topic rows, in pick order
  std::vector<std::string> sentences;  // text as emitted (last one may be cut)
  std::string text;                    // sentences joined by newlines
  std::size_t word_count = 0;
  bool truncated = false;
  std::vector<PickRecord> trace;
};

/// Greedy extraction. Picks the highest-scoring unselected document
/// sentence (ties to the lower row), then penalises every unselected j by
/// omega * S_jk * f_k, with S the document block of W row-normalised. When
/// the next pick would overflow the budget it is cut to the remaining words
/// and extraction stops. Throws EmptyRanking without document sentences.
Summary extract_summary(const RankVector& scores, const SimilarityGraph& graph,
                        std::span<const Sentence> rows, const SummaryOptions& options);

/// First `count` whitespace-delimited words of `text`, single-space joined.
std::string first_words(std::string_view text, std::size_t count);

}  // namespace maniquery
