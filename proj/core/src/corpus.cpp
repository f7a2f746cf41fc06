#include "maniquery/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "maniquery/error.hpp"

namespace maniquery {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

Sentence make_sentence(std::string text, const StopwordSet& stopwords, const SynsetGraph* lexicon) {
  Sentence s;
  s.tokens = tokenize_and_filter(text, stopwords, lexicon);
  s.word_count = count_words(text);
  s.raw_text = std::move(text);
  return s;
}

}  // namespace

TopicText read_topic_text(const fs::path& dir) {
  TopicText out;
  out.name = dir.filename().string();
  if (out.name.empty()) out.name = dir.parent_path().filename().string();
  out.query = slurp(dir / "query.txt");

  std::vector<fs::path> files;
  const fs::path docs = dir / "docs";
  if (fs::is_directory(docs)) {
    for (const auto& entry : fs::directory_iterator(docs)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });
  for (const auto& file : files) out.documents.emplace_back(file.stem().string(), slurp(file));
  return out;
}

Topic make_topic(const TopicText& text, const StopwordSet& stopwords, const SynsetGraph* lexicon) {
  Topic topic;
  topic.name = text.name;

  std::string_view query = text.query;
  const auto newline = query.find('\n');
  const std::string_view title = query.substr(0, newline);
  const std::string_view narrative =
      newline == std::string_view::npos ? std::string_view{} : query.substr(newline + 1);
  std::vector<std::string> query_texts;
  for (auto& s : split_sentences(title)) query_texts.push_back(std::move(s));
  for (auto& s : split_sentences(narrative)) query_texts.push_back(std::move(s));

  Sentence merged;
  merged.is_query = true;
  for (std::size_t k = 0; k < query_texts.size(); ++k) {
    Sentence q = make_sentence(query_texts[k], stopwords, lexicon);
    q.is_query = true;
    q.position_in_doc = k;
    if (!merged.raw_text.empty()) merged.raw_text += ' ';
    merged.raw_text += q.raw_text;
    merged.tokens.insert(merged.tokens.end(), q.tokens.begin(), q.tokens.end());
    merged.word_count += q.word_count;
    topic.query_sentences.push_back(std::move(q));
  }
  topic.rows.push_back(std::move(merged));

  for (const auto& [doc_id, body] : text.documents) {
    DocumentSpan span{doc_id, topic.rows.size(), 0};
    for (auto& sentence_text : split_sentences(body)) {
      Sentence s = make_sentence(std::move(sentence_text), stopwords, lexicon);
      s.doc_id = doc_id;
      s.position_in_doc = span.sentence_count++;
      s.topic_local_index = topic.rows.size();
      topic.rows.push_back(std::move(s));
    }
    topic.documents.push_back(std::move(span));
  }

  std::unordered_map<std::string, std::size_t> seen;
  for (const Sentence& row : topic.rows) {
    for (const Term& term : row.tokens) {
      if (seen.emplace(term.stem, topic.vocabulary.size()).second) topic.vocabulary.push_back(term);
    }
  }
  return topic;
}

SentenceWordMatrix::SentenceWordMatrix(std::size_t cols, std::vector<std::vector<Entry>> rows)
    : cols_(cols), rows_(std::move(rows)) {
  for (auto& row : rows_) {
    std::erase_if(row, [](const Entry& e) { return !(e.weight > 0.0); });
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    for (const Entry& e : row) {
      if (e.col >= cols_) throw DimensionMismatch("matrix entry column out of range");
    }
  }
}

std::size_t SentenceWordMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

double SentenceWordMatrix::at(std::size_t i, std::size_t j) const {
  const auto& row = rows_.at(i);
  const auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const Entry& e, std::size_t col) { return e.col < col; });
  return it != row.end() && it->col == j ? it->weight : 0.0;
}

std::vector<double> SentenceWordMatrix::dense_row(std::size_t i) const {
  std::vector<double> out(cols_, 0.0);
  for (const Entry& e : rows_.at(i)) out[e.col] = e.weight;
  return out;
}

double SentenceWordMatrix::row_norm(std::size_t i) const {
  double sum = 0.0;
  for (const Entry& e : rows_.at(i)) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

SentenceWordMatrix SentenceWordMatrix::with_query_row(std::span<const double> query) const {
  if (query.size() != cols_) throw DimensionMismatch("query vector length differs from matrix width");
  if (rows_.empty()) throw DimensionMismatch("matrix has no query row");
  SentenceWordMatrix out = *this;
  auto& row = out.rows_[0];
  row.clear();
  for (std::size_t j = 0; j < query.size(); ++j) {
    if (query[j] > 0.0) row.push_back({static_cast<std::uint32_t>(j), query[j]});
  }
  return out;
}

SentenceWordMatrix build_matrix(const Topic& topic) {
  if (topic.rows.empty() || topic.rows.front().tokens.empty()) {
    throw EmptyTopic("topic '" + topic.name + "' has an empty query");
  }
  if (topic.document_sentence_count() == 0) {
    throw EmptyTopic("topic '" + topic.name + "' has no document sentences");
  }
  std::unordered_map<std::string, std::uint32_t> column;
  for (std::size_t j = 0; j < topic.vocabulary.size(); ++j) {
    column.emplace(topic.vocabulary[j].stem, static_cast<std::uint32_t>(j));
  }

  const std::size_t n = topic.rows.size();
  const std::size_t m = topic.vocabulary.size();
  std::vector<std::vector<std::pair<std::uint32_t, int>>> tf(n);
  std::vector<std::size_t> sf(m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::unordered_map<std::uint32_t, int> counts;
    for (const Term& term : topic.rows[i].tokens) {
      const auto it = column.find(term.stem);
      if (it == column.end()) throw DimensionMismatch("stem missing from topic vocabulary");
      ++counts[it->second];
    }
    for (const auto& [col, count] : counts) {
      tf[i].emplace_back(col, count);
      ++sf[col];
    }
  }

  std::vector<std::vector<SentenceWordMatrix::Entry>> rows(n);
  const double total = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [col, count] : tf[i]) {
      if (sf[col] == n) continue;
      const double isf = std::log(total / static_cast<double>(sf[col]));
      rows[i].push_back({col, static_cast<double>(count) * isf});
    }
  }
  return SentenceWordMatrix(m, std::move(rows));
}

double cosine(std::span<const SentenceWordMatrix::Entry> lhs,
              std::span<const SentenceWordMatrix::Entry> rhs) {
  double dot = 0.0;
  double nl = 0.0;
  double nr = 0.0;
  for (const auto& e : lhs) nl += e.weight * e.weight;
  for (const auto& e : rhs) nr += e.weight * e.weight;
  if (nl == 0.0 || nr == 0.0) return 0.0;
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < lhs.size() && b < rhs.size()) {
    if (lhs[a].col < rhs[b].col) {
      ++a;
    } else if (rhs[b].col < lhs[a].col) {
      ++b;
    } else {
      dot += lhs[a].weight * rhs[b].weight;
      ++a;
      ++b;
    }
  }
  return dot / (std::sqrt(nl) * std::sqrt(nr));
}

}  // namespace maniquery
