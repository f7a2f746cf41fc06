#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace maniquery {

enum class Pos : std::uint8_t { Noun = 0, Verb = 1, Adj = 2, Adv = 3 };

inline constexpr std::array<Pos, 4> kAllPos = {Pos::Noun, Pos::Verb, Pos::Adj, Pos::Adv};

constexpr std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adj: return "adj";
    case Pos::Adv: return "adv";
  }
  return "?";
}

constexpr std::size_t pos_index(Pos pos) { return static_cast<std::size_t>(pos); }

/// Small bit set over the four content-word classes.
class PosSet {
 public:
  constexpr PosSet() = default;

  constexpr void insert(Pos pos) { bits_ |= mask(pos); }
  constexpr bool contains(Pos pos) const { return (bits_ & mask(pos)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  friend constexpr bool operator==(PosSet, PosSet) = default;

 private:
  static constexpr std::uint8_t mask(Pos pos) {
    return static_cast<std::uint8_t>(1u << pos_index(pos));
  }
  std::uint8_t bits_ = 0;
};

/// A content word after filtering. `stem` keys TF-ISF and overlap,
/// `lemma` is the WordNet headword used for sense lookup.
struct Term {
  std::string stem;
  std::string lemma;
  PosSet pos_tags;

  friend bool operator==(const Term&, const Term&) = default;
};

}  // namespace maniquery
