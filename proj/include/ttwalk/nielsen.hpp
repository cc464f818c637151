#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ttwalk/word.hpp"

namespace ttwalk {

// Elementary automorphism [x -> y x]: x maps to yx, x^{-1} to x^{-1}y^{-1},
// all other letters fixed. Requires y != x and y != x^{-1}.
struct NielsenAuto {
  Letter x = 0;
  Letter y = 0;
  int rank = 0;

  NielsenAuto() = default;
  NielsenAuto(Letter x_, Letter y_, int rank_);

  // Image of a single letter, appended to out (1 or 2 letters).
  void image_of(Letter d, std::vector<Letter>& out) const;
  Word image_word(Letter d) const;

  // Direction map: x -> y, everything else fixed.
  Letter deriv(Letter d) const noexcept { return d == x ? y : d; }

  NielsenAuto inverted() const { return NielsenAuto(x, -y, rank); }

  bool operator==(const NielsenAuto& o) const noexcept {
    return x == o.x && y == o.y && rank == o.rank;
  }
  bool operator!=(const NielsenAuto& o) const noexcept { return !(*this == o); }
  // Order by (slot(x), slot(y)); used for deterministic enumeration.
  bool operator<(const NielsenAuto& o) const noexcept;
};

using NielsenSequence = std::vector<NielsenAuto>;

Word apply_nielsen(const NielsenAuto& t, const Word& w);
Word apply_sequence(const NielsenSequence& seq, const Word& w);

// All 4r(r-1) elementary automorphisms, sorted.
std::vector<NielsenAuto> enumerate_generators(int rank);

// (a, b) in application order: b may follow a.
bool is_admissible_pair(const NielsenAuto& a, const NielsenAuto& b) noexcept;

std::vector<NielsenAuto> successors(const NielsenAuto& a);
std::vector<NielsenAuto> predecessors(const NielsenAuto& b);

bool is_admissible(const NielsenSequence& seq);          // throws on empty
bool is_cyclically_admissible(const NielsenSequence& seq);

// Text format "[a1->a2a1]".
std::string format_nielsen(const NielsenAuto& t);
NielsenAuto parse_nielsen(std::string_view text, int rank);
std::string format_sequence(const NielsenSequence& seq);
NielsenSequence parse_sequence(std::string_view text, int rank);

// Cancellation-prevention prefixes. Both are admissible; letters must have
// pairwise distinct indices.
NielsenSequence prevention_block_r3(Letter a, Letter b, Letter c, int rank);
NielsenSequence prevention_block_high(Letter x, Letter w, Letter y, Letter z, int rank);
NielsenSequence prevention_block(int rank);  // default letters a1..a3 / a1..a4

struct SeedSearchStats {
  std::uint64_t visited = 0;
  int length = 0;
};

// Deterministic beam-limited extension of the prevention block until the
// composition is cyclically admissible, has an entrywise positive transition
// matrix, and its taken-turn graph equals the one-extra-edge complete graph of
// its last map. Throws std::runtime_error if the budget is exhausted.
NielsenSequence find_seed_sequence(int rank, std::uint64_t budget = 2'000'000,
                                   SeedSearchStats* stats = nullptr);

// Process-wide memo over find_seed_sequence.
const NielsenSequence& seed_sequence(int rank);

// Fixture file: lines "rank <r>: [..][..]...".
std::string format_seed_fixture_line(int rank, const NielsenSequence& seq);
std::vector<std::pair<int, NielsenSequence>> parse_seed_fixture(std::string_view text);

}  // namespace ttwalk
