#pragma once

// Shared between the unit tests and the acceptance runner: naive reference
// implementations used as oracles, and deterministic samplers built directly
// on the project RNG so fixtures never depend on library sampling order.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttwalk/nielsen.hpp"
#include "ttwalk/rng.hpp"
#include "ttwalk/rose_map.hpp"
#include "ttwalk/word.hpp"

#ifndef TTWALK_SOURCE_DIR
#define TTWALK_SOURCE_DIR "."
#endif

namespace ttwalk::testing {

// Quadratic reduction oracle: rescan from the top after every deletion.
inline std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        again = true;
        break;
      }
    }
  }
  return w;
}

inline std::vector<Letter> random_raw(SplitMix64& rng, int rank, int len) {
  std::vector<Letter> w;
  w.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    Letter l = static_cast<Letter>(rng.below(static_cast<std::uint64_t>(rank))) + 1;
    if (rng.below(2)) l = -l;
    w.push_back(l);
  }
  return w;
}

// Uniform start, then a uniform admissible successor each step.
inline NielsenSequence random_admissible(SplitMix64& rng, int rank, int len) {
  std::vector<NielsenAuto> gens = enumerate_generators(rank);
  NielsenSequence seq;
  seq.reserve(static_cast<std::size_t>(len));
  seq.push_back(gens[rng.below(gens.size())]);
  while (static_cast<int>(seq.size()) < len) {
    std::vector<NielsenAuto> next = successors(seq.back());
    seq.push_back(next[rng.below(next.size())]);
  }
  return seq;
}

// Rejection sampling on the wrap-around pair.
inline NielsenSequence random_cyclically_admissible(SplitMix64& rng, int rank, int len) {
  for (;;) {
    NielsenSequence seq = random_admissible(rng, rank, len);
    if (is_cyclically_admissible(seq)) return seq;
  }
}

// Admissible extension of a prefix out to len, rejected until the whole
// sequence closes up cyclically. Used to plant seed / prevention blocks.
inline NielsenSequence extend_cyclically(SplitMix64& rng, NielsenSequence prefix, int len) {
  for (;;) {
    NielsenSequence seq = prefix;
    while (static_cast<int>(seq.size()) < len) {
      std::vector<NielsenAuto> next = successors(seq.back());
      seq.push_back(next[rng.below(next.size())]);
    }
    if (is_cyclically_admissible(seq)) return seq;
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::pair<int, NielsenSequence>> load_seed_fixture() {
  return parse_seed_fixture(read_file(std::string(TTWALK_SOURCE_DIR) + "/data/seed_sequences.txt"));
}

// Nielsen identity with vertex endpoints: f^p maps s1^{-1} s2 to itself up to
// tightening. Complete oracle for witnesses whose endpoints are vertices.
inline bool tightening_identity(const RoseMap& f, int period, const Word& s1, const Word& s2) {
  RoseMap fp = power(f, period);
  Word lhs = fp.apply_to_word(s1).inverted().concat(fp.apply_to_word(s2));
  Word rhs = s1.inverted().concat(s2);
  return lhs == rhs;
}

}  // namespace ttwalk::testing
