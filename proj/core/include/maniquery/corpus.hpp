#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maniquery/term.hpp"
#include "maniquery/text.hpp"

namespace maniquery {

class SynsetGraph;

struct Sentence {
  std::size_t topic_local_index = 0;  // row in the sentence-word matrix
  std::string doc_id;                 // empty for the query row
  std::size_t position_in_doc = 0;
  std::string raw_text;
  std::vector<Term> tokens;
  std::size_t word_count = 0;  // whitespace tokens of raw_text
  bool is_query = false;
};

struct DocumentSpan {
  std::string doc_id;
  std::size_t first_row = 0;
  std::size_t sentence_count = 0;
};

/// One summarization topic. `rows[0]` is the merged query (title plus
/// narrative); `rows[1..]` are document sentences in file then reading order.
struct Topic {
  std::string name;
  std::vector<Sentence> query_sentences;
  std::vector<Sentence> rows;
  std::vector<DocumentSpan> documents;
  std::vector<Term> vocabulary;  // distinct stems, first-occurrence order

  std::size_t document_sentence_count() const { return rows.empty() ? 0 : rows.size() - 1; }
};

struct TopicText {
  std::string name;
  std::string query;  // title on the first line, narrative after
  std::vector<std::pair<std::string, std::string>> documents;  // (doc_id, text)
};

/// Builds a topic from in-memory text; documents are taken in the given order.
Topic make_topic(const TopicText& text, const StopwordSet& stopwords, const SynsetGraph* lexicon);

/// Reads `<dir>/query.txt` and `<dir>/docs/*.txt` (lexicographic by filename).
TopicText read_topic_text(const std::filesystem::path& dir);

inline Topic load_topic(const std::filesystem::path& dir, const StopwordSet& stopwords,
                        const SynsetGraph* lexicon) {
  return make_topic(read_topic_text(dir), stopwords, lexicon);
}

/// Sparse sentence-word matrix, one row per topic row. Only strictly
/// positive weights are stored; entries in a row are sorted by column.
class SentenceWordMatrix {
 public:
  struct Entry {
    std::uint32_t col = 0;
    double weight = 0.0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SentenceWordMatrix() = default;
  SentenceWordMatrix(std::size_t cols, std::vector<std::vector<Entry>> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  std::span<const Entry> row(std::size_t i) const { return rows_.at(i); }
  double at(std::size_t i, std::size_t j) const;
  std::vector<double> dense_row(std::size_t i) const;
  double row_norm(std::size_t i) const;

  /// Copy with row 0 replaced by `query` (zeros are not stored).
  SentenceWordMatrix with_query_row(std::span<const double> query) const;

  friend bool operator==(const SentenceWordMatrix&, const SentenceWordMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

/// TF-ISF weights: tf(t, s) * ln(N / sf(t)), with sf counted over all N rows
/// including the query. Throws EmptyTopic when there are no document
/// sentences or the query is missing.
SentenceWordMatrix build_matrix(const Topic& topic);

/// Cosine similarity of two sparse rows (0 if either is all zero).
double cosine(std::span<const SentenceWordMatrix::Entry> lhs,
              std::span<const SentenceWordMatrix::Entry> rhs);

}  // namespace maniquery
