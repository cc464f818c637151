#include "ttwalk/word.hpp"

#include <cctype>

namespace ttwalk {

bool valid_letter(Letter l, int rank) noexcept {
  return l != 0 && letter_index(l) <= rank;
}

std::string letter_name(Letter l) {
  if (l == 0) throw std::invalid_argument("zero letter");
  char c = l > 0 ? 'a' : 'A';
  return c + std::to_string(letter_index(l));
}

Letter parse_letter(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'a' && text[0] != 'A'))
    throw ParseError("bad letter: '" + std::string(text) + "'");
  int idx = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("bad letter: '" + std::string(text) + "'");
    idx = idx * 10 + (text[i] - '0');
    if (idx > 1'000'000) throw ParseError("letter index out of range");
  }
  if (idx == 0) throw ParseError("letter index must be positive");
  return text[0] == 'a' ? idx : -idx;
}

static void check_letters(const std::vector<Letter>& ls, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  for (Letter l : ls)
    if (!valid_letter(l, rank))
      throw std::invalid_argument("letter out of range for rank " + std::to_string(rank));
}

Word::Word(std::vector<Letter> reduced, int rank) : letters_(std::move(reduced)), rank_(rank) {
  check_letters(letters_, rank_);
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == -letters_[i - 1]) throw std::invalid_argument("word not freely reduced");
}

Word Word::reduce(const std::vector<Letter>& raw, int rank) {
  check_letters(raw, rank);
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter l : raw) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  Word w;
  w.letters_ = std::move(stack);
  w.rank_ = rank;
  return w;
}

Word Word::inverted() const {
  Word w;
  w.rank_ = rank_;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::concat(const Word& rhs) const {
  if (rank_ != rhs.rank_ && !empty() && !rhs.empty())
    throw std::invalid_argument("rank mismatch in concat");
  std::size_t i = 0;
  std::size_t keep = letters_.size();
  while (keep > 0 && i < rhs.letters_.size() && letters_[keep - 1] == -rhs.letters_[i]) {
    --keep;
    ++i;
  }
  Word w;
  w.rank_ = rank_ ? rank_ : rhs.rank_;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(keep));
  w.letters_.insert(w.letters_.end(), rhs.letters_.begin() + static_cast<long>(i),
                    rhs.letters_.end());
  return w;
}

bool is_reduced(const std::vector<Letter>& raw, int rank) {
  check_letters(raw, rank);
  for (std::size_t i = 1; i < raw.size(); ++i)
    if (raw[i] == -raw[i - 1]) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != -w.back();
}

Word cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  const auto& ls = w.letters();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + static_cast<long>(lo),
                                  ls.begin() + static_cast<long>(hi)),
              w.rank());
}

std::string format_word(const Word& w, bool spaced) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (spaced && i) out += ' ';
    out += letter_name(w.at(i));
  }
  return out;
}

Word parse_word(std::string_view text, int rank) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'a' && c != 'A') throw ParseError("unexpected character in word: '" + std::string(1, c) + "'");
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    raw.push_back(parse_letter(text.substr(i, j - i)));
    i = j;
  }
  for (Letter l : raw)
    if (!valid_letter(l, rank)) throw ParseError("letter exceeds rank in word");
  if (!is_reduced(raw, rank)) throw ParseError("word text not freely reduced");
  return Word(std::move(raw), rank);
}

}  // namespace ttwalk
