#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ttwalk {

// Letters of the free group basis: +i encodes a_i, -i encodes a_i^{-1}, 0 is invalid.
using Letter = int;

// Raised by the text-format parsers (word, nielsen, rose map, fixture).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Letter inverse(Letter l) noexcept { return -l; }
inline int letter_index(Letter l) noexcept { return l < 0 ? -l : l; }

bool valid_letter(Letter l, int rank) noexcept;

// Total order on directions: a1 < A1 < a2 < A2 < ...; slot is the 0-based position.
inline int direction_slot(Letter l) noexcept {
  return 2 * (letter_index(l) - 1) + (l < 0 ? 1 : 0);
}
inline Letter letter_at_slot(int slot) noexcept {
  Letter l = slot / 2 + 1;
  return (slot % 2) ? -l : l;
}

std::string letter_name(Letter l);
Letter parse_letter(std::string_view text);

// Freely reduced word over a fixed-rank basis. Invariant: letters_ is reduced,
// every letter valid for rank_.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> reduced, int rank);

  static Word reduce(const std::vector<Letter>& raw, int rank);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  Letter at(std::size_t i) const { return letters_.at(i); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverted() const;
  // Free product with reduction at the junction only (both sides already reduced).
  Word concat(const Word& rhs) const;

  bool operator==(const Word& o) const noexcept {
    return rank_ == o.rank_ && letters_ == o.letters_;
  }
  bool operator!=(const Word& o) const noexcept { return !(*this == o); }

 private:
  std::vector<Letter> letters_;
  int rank_ = 0;
};

bool is_reduced(const std::vector<Letter>& raw, int rank);
bool is_cyclically_reduced(const Word& w);
Word cyclic_reduce(const Word& w);

// Text format: letters "a3"/"A3" (uppercase = inverse); whitespace between letters
// is optional, so both "a1 A2" and "a1A2" parse.
std::string format_word(const Word& w, bool spaced = true);
Word parse_word(std::string_view text, int rank);

}  // namespace ttwalk
