#pragma once

#include <vector>

#include "ttwalk/nielsen.hpp"
#include "ttwalk/rose_map.hpp"

namespace ttwalk {

// Automorphism permuting the generators up to inversion.
struct PermAuto {
  int rank = 0;
  std::vector<Letter> target;  // target[i-1] = image of generator i

  PermAuto(int rank, std::vector<Letter> target);
  static PermAuto identity(int rank);

  Letter apply(Letter d) const;  // sign-equivariant
  Word apply(const Word& w) const;
  PermAuto inverse() const;
  PermAuto after(const PermAuto& inner) const;  // this applied after inner
  int order() const;  // lcm of cycle periods; a sign-reversing cycle doubles
  bool is_identity() const;
  RoseMap to_rose_map() const;
  bool operator==(const PermAuto& o) const { return rank == o.rank && target == o.target; }
};

// conj(psi, [x -> yx]) = [psi(x) -> psi(y) psi(x)]
NielsenAuto conjugate(const PermAuto& psi, const NielsenAuto& t);
NielsenSequence conjugate(const PermAuto& psi, const NielsenSequence& seq);

// Direction pairs whose images share their first letter. Peeling is well
// defined only when at most one such pair exists.
std::vector<Turn> foldable_turns(const RoseMap& f);

// f = perm o from_sequence(sequence), innermost fold first.
struct FoldDecomposition {
  NielsenSequence sequence;
  PermAuto perm;
};

// Peels elementary folds off a regular map. Each peel strips the image of one
// direction by the image of another (total image length strictly decreases),
// and the residue of total length = rank must be a signed permutation. Throws
// std::invalid_argument when the map is irregular, admits no fold or an
// ambiguous one, folds an edge onto its own inverse, or is not a homotopy
// equivalence.
FoldDecomposition fold_decomposition(const RoseMap& f);

// A power of the map that a pure elementary sequence realizes:
// power = order of the permutation part, and
// from_sequence(sequence) = power(f, power).
struct PowerRealization {
  int power = 0;
  NielsenSequence sequence;
};

PowerRealization realize_power(const RoseMap& f);

}  // namespace ttwalk
