#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ttwalk/nielsen.hpp"
#include "ttwalk/rose_map.hpp"

namespace ttwalk {

// Incremental analyzer for a composition of elementary automorphisms, newest
// map applied outermost. Tracks the direction map, the set of taken turns,
// regularity, and the letter-occurrence pattern in O(r^2) per push, without
// materializing image words (which grow exponentially in the length).
//
// All reported data is exact while regular() holds. After the first
// irregular step the turn set and pattern are formal closures and no longer
// certified against the reduced images.
class NielsenComposition {
 public:
  explicit NielsenComposition(int rank);

  void push(const NielsenAuto& t);

  int rank() const noexcept { return rank_; }
  int length() const noexcept { return length_; }
  bool regular() const noexcept { return first_irregular_ < 0; }
  int first_irregular_step() const noexcept { return first_irregular_; }

  const std::set<Turn>& turns() const noexcept { return turns_; }
  Letter derivative(Letter d) const;
  const std::vector<Letter>& derivative_map() const noexcept { return deriv_; }

  // entry (i,j) reports whether generator j's image uses letter i (either sign)
  bool pattern_at(int i, int j) const;
  bool pattern_positive() const noexcept;

  std::vector<std::vector<Letter>> gate_partition() const;
  std::vector<Turn> illegal() const;

  // true iff every taken turn is legal for the accumulated gates
  bool turns_legal() const;

 private:
  int rank_;
  int length_ = 0;
  int first_irregular_ = -1;
  std::vector<Letter> deriv_;         // slot-indexed direction map
  std::set<Turn> turns_;              // taken turns of the composition
  std::vector<std::vector<bool>> occurs_;  // occurs_[i][j]: letter i+1 in image of j+1
};

// Periodic-Nielsen-path search for the composition of a cyclically admissible
// sequence, staged one elementary map at a time so image words are never
// materialized. A candidate path crosses the unique illegal turn; applying one
// elementary map cancels exactly one letter on each side of that turn, and the
// middle turn left behind must equal the characteristic pair of the next map
// in the cycle. If it ever differs, the remaining derivative maps keep it
// nondegenerate and never return it to the illegal turn, so the candidate
// straightens to a legal path and no power can close up: that branch is dead.
// Branching happens only when a side is consumed down to one letter and the
// next original edge must be revealed. NoInp is reported when every branch
// dies within the caps; Found only for a vertex-exact recurrence confirmed by
// replaying the stages without extensions.
struct PinpSearchCaps {
  int rounds = 32768;     // stage applications across all branches
  int side_letters = 512; // window kept per side, in letters
  int period_cap = 16;    // full cycles tried by the closure check
};

struct PinpWitness {
  int period = 0;  // in full cycles of the sequence
  Word side1, side2;
};

struct PinpResult {
  InpStatus status = InpStatus::Inconclusive;
  std::optional<PinpWitness> witness;
  int rounds_used = 0;
};

PinpResult search_pinp(const NielsenSequence& seq, const PinpSearchCaps& caps = {});

}  // namespace ttwalk
