#include "maniquery/text.hpp"

#include <algorithm>
#include <cctype>

#include "maniquery/porter.hpp"
#include "maniquery/wordnet.hpp"

namespace maniquery {
namespace detail {
std::string_view stopword_list_text();
std::string_view abbreviation_list_text();
}  // namespace detail

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }
bool is_opener(char c) { return c == '"' || c == '\'' || c == '(' || c == '['; }

std::unordered_set<std::string> word_set(std::string_view text) {
  std::unordered_set<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) out.emplace(text.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view stopword_list_text() { return detail::stopword_list_text(); }

const StopwordSet& default_stopwords() {
  static const StopwordSet words = word_set(detail::stopword_list_text());
  return words;
}

const std::unordered_set<std::string>& default_abbreviations() {
  static const std::unordered_set<std::string> words = word_set(detail::abbreviation_list_text());
  return words;
}

std::vector<std::string> split_sentences(std::string_view text) {
  const auto& abbreviations = default_abbreviations();
  std::vector<std::string> out;
  std::size_t start = 0;
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t end = i + 1;
    while (end < n && (text[end] == '.' || text[end] == '!' || text[end] == '?')) ++end;
    while (end < n && is_closer(text[end])) ++end;
    std::size_t next = end;
    while (next < n && is_space(text[next])) ++next;
    if (next == end || next >= n) continue;
    std::size_t first = next;
    while (first < n && is_opener(text[first])) ++first;
    if (first >= n || !is_upper(text[first])) continue;
    if (c == '.') {
      std::size_t word_start = i;
      while (word_start > start && !is_space(text[word_start - 1])) --word_start;
      std::string_view word = text.substr(word_start, i + 1 - word_start);
      while (!word.empty() && is_opener(word.front())) word.remove_prefix(1);
      if (abbreviations.contains(std::string(word))) continue;
    }
    const auto sentence = trim(text.substr(start, end - start));
    if (!sentence.empty()) out.emplace_back(sentence);
    start = next;
    i = next - 1;
  }
  const auto tail = trim(text.substr(std::min(start, n)));
  if (!tail.empty()) out.emplace_back(tail);
  return out;
}

std::size_t count_words(std::string_view text) {
  std::size_t count = 0;
  bool in_word = false;
  for (char c : text) {
    if (is_space(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++count;
    }
  }
  return count;
}

std::vector<std::string> word_candidates(std::string_view sentence) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && is_space(sentence[i])) ++i;
    const std::size_t start = i;
    while (i < sentence.size() && !is_space(sentence[i])) ++i;
    std::string_view token = sentence.substr(start, i - start);
    if (token.empty()) continue;
    if (token.find('@') != std::string_view::npos) continue;
    if (std::any_of(token.begin(), token.end(), is_digit)) continue;
    // Possessive clitic.
    for (std::string_view clitic : {"'s", "'S", "\xE2\x80\x99s"}) {
      if (token.ends_with(clitic)) {
        token.remove_suffix(clitic.size());
        break;
      }
    }
    std::size_t k = 0;
    while (k < token.size()) {
      while (k < token.size() && !is_alpha(token[k])) ++k;
      const std::size_t run_start = k;
      while (k < token.size() && is_alpha(token[k])) ++k;
      if (k - run_start < 2) continue;
      std::string word(token.substr(run_start, k - run_start));
      std::transform(word.begin(), word.end(), word.begin(),
                     [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
      out.push_back(std::move(word));
    }
  }
  return out;
}

std::vector<Term> tokenize_and_filter(std::string_view sentence, const StopwordSet& stopwords,
                                      const SynsetGraph* lexicon) {
  std::vector<Term> out;
  for (std::string& word : word_candidates(sentence)) {
    if (stopwords.contains(word)) continue;
    Term term;
    if (lexicon == nullptr) {
      term.lemma = word;
    } else {
      for (Pos pos : kAllPos) {
        const auto bases = lexicon->morphy(word, pos);
        if (bases.empty()) continue;
        if (term.lemma.empty()) term.lemma = bases.front();
        if (std::find(bases.begin(), bases.end(), term.lemma) != bases.end()) term.pos_tags.insert(pos);
      }
      if (term.lemma.empty()) continue;
    }
    term.stem = porter_stem(term.lemma);
    if (term.stem.empty()) continue;
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace maniquery
