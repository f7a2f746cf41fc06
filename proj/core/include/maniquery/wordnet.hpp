#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "maniquery/term.hpp"

namespace maniquery {

struct SynsetId {
  std::uint32_t value = 0;
  friend auto operator<=>(SynsetId, SynsetId) = default;
};

struct Synset {
  Pos pos = Pos::Noun;
  std::uint32_t offset = 0;  // byte offset in data.<pos>
  std::vector<std::string> lemmas;
};

/// In-memory WordNet: synsets, hypernym links and the lemma index.
///
/// Hypernym (`@`, `@i`) pointers form an undirected graph used for path
/// distances. Adjective `&` (similar-to) pointers are kept separately and
/// only ever contribute a distance of 1. All other pointer types are
/// ignored. Immutable after `load`.
class SynsetGraph {
 public:
  /// Parses `data.*` and `index.*` for all four parts of speech, plus the
  /// optional `*.exc` morphology exception lists.
  /// Throws MissingFile or ParseError.
  static SynsetGraph load(const std::filesystem::path& dir);

  std::size_t size() const { return synsets_.size(); }
  std::size_t count(Pos pos) const { return counts_[pos_index(pos)]; }

  /// Throws UnknownSynset for ids outside the graph.
  const Synset& synset(SynsetId id) const;
  std::optional<SynsetId> find(Pos pos, std::uint32_t offset) const;

  std::span<const SynsetId> hypernyms(SynsetId id) const;
  /// Hypernym and hyponym neighbours (the undirected hypernym graph).
  std::span<const SynsetId> neighbors(SynsetId id) const;
  std::span<const SynsetId> similar_to(SynsetId id) const;
  std::size_t hypernym_edge_count() const;

  /// Synsets listed for `lemma` in index.<pos>; empty if absent.
  std::span<const SynsetId> senses(std::string_view lemma, Pos pos) const;
  bool in_index(std::string_view lemma, Pos pos) const { return !senses(lemma, pos).empty(); }

  /// WordNet morphy: base forms of `word` present in index.<pos>, the word
  /// itself first, then exception-list or suffix-rule candidates.
  std::vector<std::string> morphy(std::string_view word, Pos pos) const;

 private:
  struct LemmaSenses {
    std::array<std::vector<SynsetId>, 4> by_pos;
  };

  void check(SynsetId id) const;

  std::vector<Synset> synsets_;
  std::vector<std::vector<SynsetId>> hypernyms_;
  std::vector<std::vector<SynsetId>> neighbors_;
  std::vector<std::vector<SynsetId>> similar_;
  std::array<std::unordered_map<std::uint32_t, SynsetId>, 4> by_offset_;
  std::array<std::size_t, 4> counts_{};
  std::unordered_map<std::string, LemmaSenses> lemma_index_;
  std::array<std::unordered_map<std::string, std::vector<std::string>>, 4> exceptions_;
};

/// Alias kept for symmetry with the other module entry points.
inline SynsetGraph parse_wordnet(const std::filesystem::path& dir) {
  return SynsetGraph::load(dir);
}

/// Shortest path length between two synsets in the undirected hypernym
/// graph, or nullopt when disconnected or longer than `cap`. A similar-to
/// link counts as a path of length 1. Throws UnknownSynset.
std::optional<int> synset_distance(const SynsetGraph& graph, SynsetId from, SynsetId to,
                                   std::optional<int> cap = std::nullopt);

/// a / (a + d).
double path_similarity(int distance, double a);

/// path_similarity of the synset distance. Throws Disconnected when no path
/// exists (callers treat that as similarity 0).
double synset_similarity(const SynsetGraph& graph, SynsetId from, SynsetId to, double a);

/// Union of the term lemma's senses over its part-of-speech tags, sorted.
std::vector<SynsetId> term_senses(const SynsetGraph& graph, const Term& term);

/// Minimum synset distance over all sense pairs of two terms. Terms with
/// the same stem are at distance 0.
std::optional<int> word_distance(const SynsetGraph& graph, const Term& lhs, const Term& rhs,
                                 std::optional<int> cap = std::nullopt);

/// Max over sense pairs of path_similarity; 1 for equal stems, 0 when either
/// term has no senses or every pair is disconnected.
double word_similarity(const SynsetGraph& graph, const Term& lhs, const Term& rhs, double a);

struct WordSimParams {
  double a = 1.0;                                                    // path parameter
  int max_path = 4;                                                  // vertical filter L
  std::size_t max_neighbors = std::numeric_limits<std::size_t>::max();  // horizontal filter C
};

/// Sparse symmetric M x M word similarity matrix after vertical and
/// horizontal filtering. The diagonal is implicitly 1 and never stored.
class WordSimMatrix {
 public:
  struct Entry {
    std::uint32_t col = 0;
    int distance = 0;
    double similarity = 0.0;
  };

  WordSimMatrix() = default;
  WordSimMatrix(std::vector<std::vector<Entry>> rows, WordSimParams params);

  /// Identity matrix: no off-diagonal entries.
  static WordSimMatrix identity(std::size_t dim);

  std::size_t dim() const { return rows_.size(); }
  std::span<const Entry> row(std::size_t i) const { return rows_.at(i); }
  double operator()(std::size_t i, std::size_t j) const;
  /// Stored off-diagonal entries.
  std::size_t nnz() const;
  const WordSimParams& params() const { return params_; }

 private:
  std::vector<std::vector<Entry>> rows_;
  WordSimParams params_;
};

/// Builds the filtered word similarity matrix over `vocabulary`.
/// Entry (i, j) is kept when the shortest sense-pair distance is <= L;
/// afterwards every word with more than C neighbours loses all of its
/// entries (rows and columns).
WordSimMatrix build_word_sim_matrix(const SynsetGraph& graph, std::span<const Term> vocabulary,
                                    const WordSimParams& params);

}  // namespace maniquery
