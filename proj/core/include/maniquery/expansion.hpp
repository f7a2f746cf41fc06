#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maniquery/corpus.hpp"
#include "maniquery/wordnet.hpp"

namespace maniquery {

enum class Expansion : std::uint8_t { SimWord = 0, Mean = 1, Variance = 2, TextRank = 3 };

std::string_view expansion_name(Expansion e);

/// Set of enabled expansion mechanisms.
class ExpansionSet {
 public:
  constexpr ExpansionSet() = default;
  static constexpr ExpansionSet all() {
    ExpansionSet s;
    s.bits_ = 0b1111;
    return s;
  }
  static constexpr ExpansionSet none() { return {}; }

  /// Parses a comma list such as "sim_word,mean,var,textrank". The empty
  /// string (or "none") disables everything. Throws ConfigError.
  static ExpansionSet parse(std::string_view list);
  std::string to_string() const;

  constexpr void insert(Expansion e) { bits_ |= mask(e); }
  constexpr void erase(Expansion e) { bits_ &= static_cast<std::uint8_t>(~mask(e)); }
  constexpr bool contains(Expansion e) const { return (bits_ & mask(e)) != 0; }

  friend constexpr bool operator==(ExpansionSet, ExpansionSet) = default;

 private:
  static constexpr std::uint8_t mask(Expansion e) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(e));
  }
  std::uint8_t bits_ = 0;
};

struct ExpansionConfig {
  double theta_mean = 1.0;
  double theta_var = 1.0;
  double theta_rank = 1.0;
  std::size_t c_words = 100;
  ExpansionSet enabled = ExpansionSet::all();

  friend bool operator==(const ExpansionConfig&, const ExpansionConfig&) = default;
};

/// Per-mechanism vectors, unscaled. Missing components contribute zero.
struct ExpansionComponents {
  std::optional<std::vector<double>> sim_word;
  std::optional<std::vector<double>> mean;
  std::optional<std::vector<double>> variance;
  std::optional<std::vector<double>> textrank;
};

struct QueryVector {
  std::vector<double> values;
  ExpansionComponents provenance;
};

/// out_i = max_j t0_j * sim(w_j, w_i), with sim(w_i, w_i) = 1.
std::vector<double> expand_simword(std::span<const double> t0, const WordSimMatrix& sim);

/// Column means over the document rows (rows 1..N-1).
std::vector<double> expand_mean(const SentenceWordMatrix& a0);

/// Column sample variance over the document rows, denominator N_d - 1.
/// Throws TooFewRows with fewer than two document rows.
std::vector<double> expand_variance(const SentenceWordMatrix& a0);

/// Word scores y = S^T p*, where S is the row-normalised document block of
/// `a0` and `p_star` holds one score per document sentence. Returns the
/// 0/1 indicator of the top `c_words` words with y > 0 (ties by column).
std::vector<double> expand_textrank(const SentenceWordMatrix& a0, std::span<const double> p_star,
                                    std::size_t c_words);

/// T1 = sim_word(T0) + theta_m mean + theta_v variance + theta_r textrank.
/// Disabled terms contribute zero; with SimWord disabled the first term is T0.
QueryVector combine_expansions(std::span<const double> t0, const ExpansionComponents& components,
                               const ExpansionConfig& config);

}  // namespace maniquery
