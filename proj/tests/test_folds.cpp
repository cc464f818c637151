#include "doctest.h"

#include "ttwalk/folds.hpp"
#include "ttwalk/rng.hpp"

#include "helpers.hpp"

using namespace ttwalk;
using namespace ttwalk::testing;

namespace {

// Deterministic signed permutation: a few transpositions and sign flips.
PermAuto random_perm(SplitMix64& rng, int rank) {
  std::vector<Letter> t(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) t[static_cast<std::size_t>(i)] = i + 1;
  for (int swaps = 0; swaps < rank; ++swaps) {
    std::size_t i = rng.below(static_cast<std::uint64_t>(rank));
    std::size_t j = rng.below(static_cast<std::uint64_t>(rank));
    std::swap(t[i], t[j]);
  }
  for (int i = 0; i < rank; ++i)
    if (rng.below(2)) t[static_cast<std::size_t>(i)] = -t[static_cast<std::size_t>(i)];
  return PermAuto(rank, std::move(t));
}

}  // namespace

TEST_CASE("signed permutation algebra") {
  PermAuto id = PermAuto::identity(3);
  CHECK(id.is_identity());
  CHECK(id.order() == 1);

  PermAuto p(2, {2, -1});  // a1 -> a2 -> a1^{-1}: a 4-cycle on directions
  CHECK(p.apply(1) == 2);
  CHECK(p.apply(2) == -1);
  CHECK(p.apply(-1) == -2);
  CHECK(p.order() == 4);
  CHECK(p.after(p.inverse()).is_identity());
  CHECK(p.inverse().after(p).is_identity());

  PermAuto q(3, {2, 1, -3});
  CHECK(q.order() == 2);
  CHECK(q.apply(parse_word("a1 a3 A2", 3)) == parse_word("a2 A3 A1", 3));
  CHECK(q.to_rose_map().image(3) == parse_word("A3", 3));

  CHECK_THROWS(PermAuto(2, {1, 1}));
  CHECK_THROWS(PermAuto(2, {1, -1}));
  CHECK_THROWS(PermAuto(2, {1, 3}));
  CHECK_THROWS(PermAuto(2, {1}));

  SplitMix64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    PermAuto r = random_perm(rng, 2 + static_cast<int>(rng.below(4)));
    CHECK(r.after(r.inverse()).is_identity());
    int ord = r.order();
    PermAuto acc = PermAuto::identity(r.rank);
    for (int k = 0; k < ord; ++k) acc = r.after(acc);
    CHECK(acc.is_identity());
  }
}

TEST_CASE("conjugation twists an elementary map as maps") {
  SplitMix64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    int rank = 2 + static_cast<int>(rng.below(3));
    PermAuto psi = random_perm(rng, rank);
    std::vector<NielsenAuto> gens = enumerate_generators(rank);
    NielsenAuto t = gens[rng.below(gens.size())];
    RoseMap lhs = RoseMap::from_nielsen(conjugate(psi, t));
    RoseMap rhs = compose(psi.to_rose_map(),
                          compose(RoseMap::from_nielsen(t), psi.inverse().to_rose_map()));
    CHECK(lhs == rhs);
  }
  // conjugation preserves admissibility of whole sequences
  NielsenSequence seq = random_admissible(rng, 3, 12);
  PermAuto psi = random_perm(rng, 3);
  CHECK(is_admissible(conjugate(psi, seq)));
}

TEST_CASE("foldable turns") {
  CHECK(foldable_turns(RoseMap::identity(3)).empty());
  std::vector<Turn> ft = foldable_turns(RoseMap::from_nielsen(NielsenAuto(1, 2, 3)));
  REQUIRE(ft.size() == 1);
  CHECK(ft.front() == Turn(1, 2));
}

TEST_CASE("fold decomposition recomposes exactly") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    int rank = 2 + static_cast<int>(rng.below(3));
    int len = 1 + static_cast<int>(rng.below(10));
    NielsenSequence seq = random_admissible(rng, rank, len);
    RoseMap f = RoseMap::from_sequence(seq);
    FoldDecomposition d = fold_decomposition(f);
    CHECK(compose(d.perm.to_rose_map(), RoseMap::from_sequence(d.sequence)) == f);
    // admissible products peel back to themselves: one foldable turn per
    // stage, innermost map first, identity residue
    CHECK(d.sequence == seq);
    CHECK(d.perm.is_identity());

    PermAuto psi = random_perm(rng, rank);
    RoseMap g = compose(psi.to_rose_map(), f);
    FoldDecomposition dg = fold_decomposition(g);
    CHECK(compose(dg.perm.to_rose_map(), RoseMap::from_sequence(dg.sequence)) == g);
    CHECK(dg.sequence == seq);
    CHECK(dg.perm == psi);
  }
}

TEST_CASE("fold decomposition rejections") {
  // no foldable turn and complexity above rank: not surjective
  RoseMap squares(2, {parse_word("a1 a1", 2), parse_word("a2", 2)});
  CHECK_THROWS_AS(fold_decomposition(squares), std::invalid_argument);
  // ambiguous: three pairs share first letters
  RoseMap ambiguous(3, {parse_word("a3 a1", 3), parse_word("a3 a2", 3), parse_word("a3", 3)});
  CHECK_THROWS_AS(fold_decomposition(ambiguous), std::invalid_argument);
  // folding an edge onto its own inverse
  RoseMap self_fold(2, {parse_word("a2 a1 A2", 2), parse_word("a2", 2)});
  CHECK_THROWS_AS(fold_decomposition(self_fold), std::invalid_argument);
  // irregular maps are rejected up front
  CHECK_THROWS_AS(
      fold_decomposition(RoseMap::from_sequence({NielsenAuto(1, 2, 3), NielsenAuto(1, -2, 3)})),
      std::invalid_argument);
}

TEST_CASE("realize_power reproduces powers edge for edge") {
  SplitMix64 rng(54);
  for (int trial = 0; trial < 25; ++trial) {
    int rank = 2 + static_cast<int>(rng.below(3));
    NielsenSequence seq = random_cyclically_admissible(rng, rank, 6);
    RoseMap f = RoseMap::from_sequence(seq);
    PowerRealization pr = realize_power(f);
    CHECK(pr.power == 1);  // pure products leave no permutation residue
    CHECK(RoseMap::from_sequence(pr.sequence) == f);
    CHECK(is_cyclically_admissible(pr.sequence));

    // a permutation twist realizes at the order of the twist
    PermAuto psi = random_perm(rng, rank);
    RoseMap g = compose(psi.to_rose_map(), f);
    PowerRealization pg = realize_power(g);
    CHECK(pg.power == psi.order());
    CHECK(RoseMap::from_sequence(pg.sequence) == power(g, pg.power));
  }
}
