#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "maniquery/term.hpp"

namespace maniquery {

class SynsetGraph;

using StopwordSet = std::unordered_set<std::string>;

/// The bundled English stopword list (core/data/stopwords.txt).
const StopwordSet& default_stopwords();
/// Raw text of the bundled stopword list, one word per line.
std::string_view stopword_list_text();
/// Abbreviations that never end a sentence ("Dr.", "U.S.", ...).
const std::unordered_set<std::string>& default_abbreviations();

/// Splits running text into sentences. A boundary follows `.`, `!` or `?`
/// (plus any closing quotes or brackets) when the next non-space character
/// is uppercase, unless the token ending in `.` is a known abbreviation.
/// Sentences are returned trimmed; whitespace inside them is preserved.
std::vector<std::string> split_sentences(std::string_view text);

/// Number of whitespace-delimited tokens.
std::size_t count_words(std::string_view text);

/// Lowercased alphabetic runs of a sentence with emails, tokens containing
/// digits and single characters removed. No stopword or lexicon filtering.
std::vector<std::string> word_candidates(std::string_view sentence);

/// Content-word terms of a sentence, in order. A candidate survives when it
/// is not a stopword and, if `lexicon` is given, morphy finds a lemma for it
/// in at least one part of speech (tried noun, verb, adj, adv). Without a
/// lexicon the surface form is its own lemma. The stem is the Porter stem of
/// the lemma.
std::vector<Term> tokenize_and_filter(std::string_view sentence, const StopwordSet& stopwords,
                                      const SynsetGraph* lexicon);

}  // namespace maniquery
