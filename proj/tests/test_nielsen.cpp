#include "doctest.h"

#include <algorithm>
#include <set>

#include "ttwalk/composition.hpp"
#include "ttwalk/nielsen.hpp"
#include "ttwalk/rng.hpp"
#include "ttwalk/rose_map.hpp"

#include "helpers.hpp"

using namespace ttwalk;
using namespace ttwalk::testing;

TEST_CASE("elementary map images") {
  NielsenAuto t(1, 2, 3);  // [a1 -> a2 a1]
  CHECK(t.image_word(1) == parse_word("a2 a1", 3));
  CHECK(t.image_word(-1) == parse_word("A1 A2", 3));
  CHECK(t.image_word(2) == parse_word("a2", 3));
  CHECK(t.image_word(-3) == parse_word("A3", 3));
  CHECK(t.deriv(1) == 2);
  CHECK(t.deriv(-1) == -1);
  CHECK(t.deriv(2) == 2);

  CHECK_THROWS(NielsenAuto(1, 1, 3));
  CHECK_THROWS(NielsenAuto(1, -1, 3));
  CHECK_THROWS(NielsenAuto(1, 4, 3));
  CHECK_THROWS(NielsenAuto(1, 2, 1));
}

TEST_CASE("apply matches letterwise substitution oracle") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    int rank = 2 + static_cast<int>(rng.below(3));
    std::vector<NielsenAuto> gens = enumerate_generators(rank);
    NielsenAuto t = gens[rng.below(gens.size())];
    Word w = Word::reduce(random_raw(rng, rank, 24), rank);
    std::vector<Letter> sub;
    for (Letter l : w.letters()) t.image_of(l, sub);
    CHECK(apply_nielsen(t, w).letters() == naive_reduce(sub));
    // inverse map really inverts
    CHECK(apply_nielsen(t.inverted(), apply_nielsen(t, w)) == w);
    CHECK(apply_nielsen(t, apply_nielsen(t.inverted(), w)) == w);
  }
}

TEST_CASE("apply_sequence agrees with the materialized composition") {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    int rank = 2 + static_cast<int>(rng.below(3));
    NielsenSequence seq = random_admissible(rng, rank, 8);
    RoseMap f = RoseMap::from_sequence(seq);
    for (int g = 1; g <= rank; ++g) {
      Word x({g}, rank);
      CHECK(apply_sequence(seq, x) == f.image(g));
    }
    Word w = Word::reduce(random_raw(rng, rank, 12), rank);
    CHECK(apply_sequence(seq, w) == f.apply_to_word(w));
  }
}

TEST_CASE("generator enumeration counts") {
  for (int r = 2; r <= 6; ++r) {
    std::vector<NielsenAuto> gens = enumerate_generators(r);
    CHECK(static_cast<int>(gens.size()) == 4 * r * (r - 1));
    CHECK(std::is_sorted(gens.begin(), gens.end()));
    for (const NielsenAuto& g : gens) {
      CHECK(valid_letter(g.x, r));
      CHECK(valid_letter(g.y, r));
      CHECK(letter_index(g.x) != letter_index(g.y));
    }
  }
}

TEST_CASE("admissible pairs match the definition written out") {
  for (int r = 2; r <= 4; ++r) {
    std::vector<NielsenAuto> gens = enumerate_generators(r);
    for (const NielsenAuto& a : gens) {
      std::set<std::pair<Letter, Letter>> succ;
      for (const NielsenAuto& b : gens) {
        bool expect = (b.x == a.x && b.y != -a.y) || (b.y == a.x && b.x != -a.y);
        CHECK(is_admissible_pair(a, b) == expect);
        if (expect) succ.insert({b.x, b.y});
      }
      CHECK(static_cast<int>(succ.size()) == 4 * r - 6);
      std::vector<NielsenAuto> s = successors(a);
      CHECK(s.size() == succ.size());
      for (const NielsenAuto& b : s) {
        CHECK(succ.count({b.x, b.y}) == 1);
        std::vector<NielsenAuto> back = predecessors(b);
        CHECK(std::count(back.begin(), back.end(), a) == 1);
      }
    }
  }
}

TEST_CASE("a map may repeat itself") {
  NielsenAuto t(1, 3, 3);
  CHECK(is_admissible_pair(t, t));
  CHECK(is_cyclically_admissible({t, t}));
}

TEST_CASE("admissible composition never cancels") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    NielsenSequence seq = random_admissible(rng, 3, 9);
    CHECK(is_admissible(seq));
    CHECK(RoseMap::from_sequence(seq).regular());
  }
  // inadmissible successor cancels: [a1->a2a1] then [a1->A2a1]
  NielsenSequence bad{NielsenAuto(1, 2, 3), NielsenAuto(1, -2, 3)};
  CHECK_FALSE(is_admissible(bad));
  CHECK_FALSE(RoseMap::from_sequence(bad).regular());
  CHECK_THROWS(is_admissible(NielsenSequence{}));
}

TEST_CASE("format and parse round trip") {
  CHECK(format_nielsen(NielsenAuto(-2, 1, 3)) == "[A2->a1A2]");
  SplitMix64 rng(24);
  for (int r = 2; r <= 4; ++r)
    for (const NielsenAuto& t : enumerate_generators(r))
      CHECK(parse_nielsen(format_nielsen(t), r) == t);
  NielsenSequence seq = random_admissible(rng, 3, 10);
  CHECK(parse_sequence(format_sequence(seq), 3) == seq);
  CHECK_THROWS_AS(parse_nielsen("[a1->a2]", 3), ParseError);
  CHECK_THROWS_AS(parse_nielsen("[a1->a2a3]", 3), ParseError);
  CHECK_THROWS_AS(parse_nielsen("a1->a2a1", 3), ParseError);
  CHECK_THROWS_AS(parse_nielsen("[a1=>a2a1]", 3), ParseError);
}

TEST_CASE("prevention blocks") {
  NielsenSequence r3 = prevention_block(3);
  CHECK(format_sequence(r3) ==
        "[a1->a3a1] [A2->a1A2] [A2->A3A2] [a1->A2a1] [a1->a3a1] [a1->a2a1] [a1->a3a1] [a1->a3a1]");
  CHECK(is_admissible(r3));

  NielsenSequence r4 = prevention_block(4);
  CHECK(format_sequence(r4) ==
        "[a4->a1a4] [a2->a4a2] [A3->a2A3] [A3->a1A3] [A3->a2A3] [A3->a1A3]");
  CHECK(is_admissible(r4));

  // letter-parameterized variants stay admissible for other choices
  CHECK(is_admissible(prevention_block_r3(2, -3, 1, 3)));
  CHECK(is_admissible(prevention_block_high(2, 1, 4, -3, 4)));
  CHECK_THROWS(prevention_block_r3(1, 1, 3, 3));
  CHECK_THROWS(prevention_block_high(1, 2, 2, 4, 4));
}

TEST_CASE("seed fixture regenerates and hits the goal conditions") {
  auto fixture = load_seed_fixture();
  REQUIRE(fixture.size() == 4);
  for (const auto& [rank, seq] : fixture) {
    CAPTURE(rank);
    REQUIRE(rank >= 3);
    REQUIRE(rank <= 6);
    CHECK(is_cyclically_admissible(seq));

    // begins with the rank's prevention block
    NielsenSequence block = prevention_block(rank);
    REQUIRE(seq.size() >= block.size());
    CHECK(std::equal(block.begin(), block.end(), seq.begin()));

    // goal: positive occurrence pattern and one-extra-edge complete turn graph
    NielsenComposition comp(rank);
    for (const NielsenAuto& t : seq) comp.push(t);
    CHECK(comp.regular());
    CHECK(comp.pattern_positive());
    WhGraph turn_graph = WhGraph::on_all_directions(rank);
    turn_graph.edges = comp.turns();
    CHECK(is_upsilon(turn_graph, seq.back().x, seq.back().y));

    // the search is deterministic, so regeneration must reproduce the fixture
    CHECK(find_seed_sequence(rank) == seq);
    CHECK(seed_sequence(rank) == seq);
    CHECK(format_seed_fixture_line(rank, seq) ==
          "rank " + std::to_string(rank) + ": " + format_sequence(seq));
  }
}
