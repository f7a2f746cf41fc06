#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "maniquery/corpus.hpp"
#include "maniquery/error.hpp"
#include "maniquery/wordnet.hpp"
#include "test_support.hpp"

using namespace maniquery;

namespace {

TopicText small_topic() {
  TopicText t;
  t.name = "small";
  t.query = "Hive decline\nWhy do bees leave the hive?";
  t.documents = {{"d1", "Mites attack mites in the hive. Bees abandon the hive."}};
  return t;
}

std::size_t column_of(const Topic& topic, std::string_view stem) {
  for (std::size_t j = 0; j < topic.vocabulary.size(); ++j) {
    if (topic.vocabulary[j].stem == stem) return j;
  }
  FAIL("stem not in vocabulary: " << stem);
  return 0;
}

}  // namespace

TEST_CASE("query sentences merge into row 0") {
  const Topic topic = make_topic(small_topic(), default_stopwords(), nullptr);
  REQUIRE(topic.rows.size() == 3);
  CHECK(topic.rows[0].is_query);
  CHECK(topic.query_sentences.size() == 2);
  CHECK(topic.rows[0].raw_text == "Hive decline Why do bees leave the hive?");
  CHECK(topic.rows[1].doc_id == "d1");
  CHECK(topic.rows[1].position_in_doc == 0);
  CHECK(topic.rows[2].position_in_doc == 1);
  CHECK(topic.rows[2].topic_local_index == 2);
  REQUIRE(topic.documents.size() == 1);
  CHECK(topic.documents[0].first_row == 1);
  CHECK(topic.documents[0].sentence_count == 2);
}

TEST_CASE("vocabulary is first-occurrence ordered and covers every row") {
  const Topic topic = make_topic(small_topic(), default_stopwords(), nullptr);
  std::set<std::string> seen;
  for (const Sentence& s : topic.rows) {
    CHECK(s.word_count >= s.tokens.size());
    for (const Term& t : s.tokens) seen.insert(t.stem);
  }
  CHECK(seen.size() == topic.vocabulary.size());
  CHECK(topic.vocabulary.front().stem == "hive");
}

TEST_CASE("TF-ISF weights") {
  const Topic topic = make_topic(small_topic(), default_stopwords(), nullptr);
  const SentenceWordMatrix a = build_matrix(topic);
  CHECK(a.rows() == 3);
  CHECK(a.cols() == topic.vocabulary.size());

  // "mite" occurs twice, in one of three rows.
  CHECK(a.at(1, column_of(topic, "mite")) == doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-12));
  CHECK(a.at(1, column_of(topic, "mite")) == doctest::Approx(2.1972).epsilon(1e-4));
  // "hive" is in every row, so it is never stored.
  const std::size_t hive = column_of(topic, "hive");
  for (std::size_t i = 0; i < a.rows(); ++i) CHECK(a.at(i, hive) == 0.0);
  // "bee" is in the query and row 2; absent from row 1.
  const std::size_t bee = column_of(topic, "bee");
  CHECK(a.at(0, bee) == doctest::Approx(std::log(1.5)));
  CHECK(a.at(2, bee) == doctest::Approx(std::log(1.5)));
  CHECK(a.at(1, bee) == 0.0);
}

TEST_CASE("stored weights are strictly positive and agree with a rescan") {
  const Topic topic =
      load_topic(mqtest::toy_corpus_dir() / "t01_honeybees", default_stopwords(), nullptr);
  const SentenceWordMatrix a = build_matrix(topic);
  std::map<std::string, std::size_t> sf;
  for (const Sentence& s : topic.rows) {
    std::set<std::string> distinct;
    for (const Term& t : s.tokens) distinct.insert(t.stem);
    for (const auto& stem : distinct) ++sf[stem];
  }
  const double n = static_cast<double>(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::map<std::string, int> tf;
    for (const Term& t : topic.rows[i].tokens) ++tf[t.stem];
    for (const auto& e : a.row(i)) CHECK(e.weight > 0.0);
    for (const auto& [stem, count] : tf) {
      const double expected = count * std::log(n / static_cast<double>(sf[stem]));
      CHECK(a.at(i, column_of(topic, stem)) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("topics without documents or query are rejected") {
  TopicText t = small_topic();
  t.documents.clear();
  CHECK_THROWS_AS(build_matrix(make_topic(t, default_stopwords(), nullptr)), EmptyTopic);
  TopicText q = small_topic();
  q.query = "the of and";
  CHECK_THROWS_AS(build_matrix(make_topic(q, default_stopwords(), nullptr)), EmptyTopic);
}

TEST_CASE("documents are read in filename order") {
  mqtest::TempDir dir;
  mqtest::write_text(dir / "query.txt", "Bees\nWhat harms bees?\n");
  mqtest::write_text(dir / "docs/b.txt", "Second file sentence.");
  mqtest::write_text(dir / "docs/a.txt", "First file sentence.");
  mqtest::write_text(dir / "docs/notes.md", "Ignored.");
  const TopicText text = read_topic_text(dir.path());
  REQUIRE(text.documents.size() == 2);
  CHECK(text.documents[0].first == "a");
  CHECK(text.documents[1].first == "b");
}

TEST_CASE("with_query_row replaces row 0 only") {
  const Topic topic = make_topic(small_topic(), default_stopwords(), nullptr);
  const SentenceWordMatrix a = build_matrix(topic);
  std::vector<double> q(a.cols(), 0.0);
  q[0] = 3.0;
  const SentenceWordMatrix b = a.with_query_row(q);
  CHECK(b.at(0, 0) == 3.0);
  CHECK(b.row(0).size() == 1);
  for (std::size_t i = 1; i < a.rows(); ++i) {
    CHECK(std::equal(a.row(i).begin(), a.row(i).end(), b.row(i).begin(), b.row(i).end()));
  }
  CHECK_THROWS_AS(a.with_query_row(std::vector<double>(a.cols() + 1, 0.0)), DimensionMismatch);
}

TEST_CASE("cosine of sparse rows") {
  using E = SentenceWordMatrix::Entry;
  const std::vector<E> x = {{0, 1.0}, {2, 1.0}};
  const std::vector<E> y = {{0, 1.0}, {1, 1.0}};
  CHECK(cosine(x, x) == doctest::Approx(1.0));
  CHECK(cosine(x, y) == doctest::Approx(0.5));
  CHECK(cosine(x, {}) == 0.0);
}
