#include "ttwalk/nielsen.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <mutex>
#include <unordered_set>

namespace ttwalk {

NielsenAuto::NielsenAuto(Letter x_, Letter y_, int rank_) : x(x_), y(y_), rank(rank_) {
  if (rank < 2) throw std::invalid_argument("nielsen map needs rank >= 2");
  if (!valid_letter(x, rank) || !valid_letter(y, rank))
    throw std::invalid_argument("nielsen map letter out of range");
  if (letter_index(x) == letter_index(y))
    throw std::invalid_argument("nielsen map needs y distinct from x and x^{-1}");
}

void NielsenAuto::image_of(Letter d, std::vector<Letter>& out) const {
  if (d == x) {
    out.push_back(y);
    out.push_back(x);
  } else if (d == -x) {
    out.push_back(-x);
    out.push_back(-y);
  } else {
    out.push_back(d);
  }
}

Word NielsenAuto::image_word(Letter d) const {
  std::vector<Letter> ls;
  image_of(d, ls);
  return Word(std::move(ls), rank);
}

bool NielsenAuto::operator<(const NielsenAuto& o) const noexcept {
  int a = direction_slot(x), b = direction_slot(o.x);
  if (a != b) return a < b;
  return direction_slot(y) < direction_slot(o.y);
}

Word apply_nielsen(const NielsenAuto& t, const Word& w) {
  if (w.rank() != t.rank && !w.empty())
    throw std::invalid_argument("rank mismatch in apply_nielsen");
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (Letter l : w.letters()) t.image_of(l, out);
  return Word::reduce(out, t.rank);
}

Word apply_sequence(const NielsenSequence& seq, const Word& w) {
  Word cur = w;
  for (const NielsenAuto& t : seq) cur = apply_nielsen(t, cur);
  return cur;
}

std::vector<NielsenAuto> enumerate_generators(int rank) {
  if (rank < 2) throw std::invalid_argument("rank must be >= 2");
  std::vector<NielsenAuto> out;
  out.reserve(static_cast<std::size_t>(4 * rank * (rank - 1)));
  for (int xs = 0; xs < 2 * rank; ++xs)
    for (int ys = 0; ys < 2 * rank; ++ys) {
      Letter x = letter_at_slot(xs), y = letter_at_slot(ys);
      if (letter_index(x) == letter_index(y)) continue;
      out.emplace_back(x, y, rank);
    }
  return out;
}

bool is_admissible_pair(const NielsenAuto& a, const NielsenAuto& b) noexcept {
  if (a.rank != b.rank) return false;
  return (b.x == a.x && b.y != -a.y) || (b.y == a.x && b.x != -a.y);
}

std::vector<NielsenAuto> successors(const NielsenAuto& a) {
  std::vector<NielsenAuto> out;
  for (const NielsenAuto& b : enumerate_generators(a.rank))
    if (is_admissible_pair(a, b)) out.push_back(b);
  return out;
}

std::vector<NielsenAuto> predecessors(const NielsenAuto& b) {
  std::vector<NielsenAuto> out;
  for (const NielsenAuto& a : enumerate_generators(b.rank))
    if (is_admissible_pair(a, b)) out.push_back(a);
  return out;
}

bool is_admissible(const NielsenSequence& seq) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!is_admissible_pair(seq[i], seq[i + 1])) return false;
  return true;
}

bool is_cyclically_admissible(const NielsenSequence& seq) {
  return is_admissible(seq) && is_admissible_pair(seq.back(), seq.front());
}

std::string format_nielsen(const NielsenAuto& t) {
  return "[" + letter_name(t.x) + "->" + letter_name(t.y) + letter_name(t.x) + "]";
}

NielsenAuto parse_nielsen(std::string_view text, int rank) {
  std::size_t l = text.find('['), r = text.rfind(']');
  if (l == std::string_view::npos || r == std::string_view::npos || r <= l)
    throw ParseError("nielsen map must be bracketed: '" + std::string(text) + "'");
  std::string_view body = text.substr(l + 1, r - l - 1);
  std::size_t arrow = body.find("->");
  if (arrow == std::string_view::npos) throw ParseError("nielsen map missing '->'");
  Word lhs = parse_word(body.substr(0, arrow), rank);
  Word rhs = parse_word(body.substr(arrow + 2), rank);
  if (lhs.size() != 1 || rhs.size() != 2 || rhs.at(1) != lhs.at(0))
    throw ParseError("nielsen map must have shape [x->yx]");
  return NielsenAuto(lhs.at(0), rhs.at(0), rank);
}

std::string format_sequence(const NielsenSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += format_nielsen(seq[i]);
  }
  return out;
}

NielsenSequence parse_sequence(std::string_view text, int rank) {
  NielsenSequence seq;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '[') throw ParseError("expected '[' in sequence");
    std::size_t j = text.find(']', i);
    if (j == std::string_view::npos) throw ParseError("unterminated nielsen map");
    seq.push_back(parse_nielsen(text.substr(i, j - i + 1), rank));
    i = j + 1;
  }
  return seq;
}

static void check_block_letters(std::initializer_list<Letter> ls, int rank) {
  std::vector<int> idx;
  for (Letter l : ls) {
    if (!valid_letter(l, rank)) throw std::invalid_argument("block letter out of range");
    idx.push_back(letter_index(l));
  }
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw std::invalid_argument("block letters must have pairwise distinct indices");
}

NielsenSequence prevention_block_r3(Letter a, Letter b, Letter c, int rank) {
  if (rank < 3) throw std::invalid_argument("block needs rank >= 3");
  check_block_letters({a, b, c}, rank);
  return {NielsenAuto(a, c, rank),  NielsenAuto(-b, a, rank), NielsenAuto(-b, -c, rank),
          NielsenAuto(a, -b, rank), NielsenAuto(a, c, rank),  NielsenAuto(a, b, rank),
          NielsenAuto(a, c, rank),  NielsenAuto(a, c, rank)};
}

NielsenSequence prevention_block_high(Letter x, Letter w, Letter y, Letter z, int rank) {
  if (rank < 4) throw std::invalid_argument("block needs rank >= 4");
  check_block_letters({x, w, y, z}, rank);
  return {NielsenAuto(z, x, rank),  NielsenAuto(w, z, rank),  NielsenAuto(-y, w, rank),
          NielsenAuto(-y, x, rank), NielsenAuto(-y, w, rank), NielsenAuto(-y, x, rank)};
}

NielsenSequence prevention_block(int rank) {
  if (rank < 3) throw std::invalid_argument("block needs rank >= 3");
  if (rank == 3) return prevention_block_r3(1, 2, 3, rank);
  return prevention_block_high(1, 2, 3, 4, rank);
}

namespace {

// Compact composition state for the seed BFS: taken-turn bitmask (triangular
// index over direction slots) and boolean positivity pattern of the transition
// matrix (row-major bit per entry).

struct Mask128 {
  std::uint64_t lo = 0, hi = 0;
  void set(int bit) {
    if (bit < 64)
      lo |= (std::uint64_t{1} << bit);
    else
      hi |= (std::uint64_t{1} << (bit - 64));
  }
  bool operator==(const Mask128& o) const noexcept { return lo == o.lo && hi == o.hi; }
};

int tri_index(int i, int j, int dirs) {
  // i < j, both in [0, dirs)
  return i * (dirs - 1) - i * (i - 1) / 2 + (j - i - 1);
}

int turn_bit(Letter d1, Letter d2, int dirs) {
  int i = direction_slot(d1), j = direction_slot(d2);
  if (i > j) std::swap(i, j);
  return tri_index(i, j, dirs);
}

std::uint64_t pattern_identity(int r) {
  std::uint64_t p = 0;
  for (int i = 0; i < r; ++i) p |= std::uint64_t{1} << (i * r + i);
  return p;
}

std::uint64_t pattern_elementary(const NielsenAuto& t) {
  int r = t.rank;
  std::uint64_t p = pattern_identity(r);
  p |= std::uint64_t{1} << ((letter_index(t.y) - 1) * r + (letter_index(t.x) - 1));
  return p;
}

std::uint64_t pattern_mul(std::uint64_t a, std::uint64_t b, int r) {
  std::uint64_t c = 0;
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      if (!(a & (std::uint64_t{1} << (i * r + k)))) continue;
      for (int j = 0; j < r; ++j)
        if (b & (std::uint64_t{1} << (k * r + j))) c |= std::uint64_t{1} << (i * r + j);
    }
  return c;
}

bool pattern_full(std::uint64_t p, int r) {
  for (int i = 0; i < r * r; ++i)
    if (!(p & (std::uint64_t{1} << i))) return false;
  return true;
}

struct BfsState {
  Mask128 turns;
  std::uint64_t pattern = 0;
  int last = -1;  // generator index

  bool operator==(const BfsState& o) const noexcept {
    return turns == o.turns && pattern == o.pattern && last == o.last;
  }
};

struct BfsStateHash {
  std::size_t operator()(const BfsState& s) const noexcept {
    std::uint64_t h = s.turns.lo;
    h ^= s.turns.hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= s.pattern + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(s.last) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// One composition step: turns become {illegal turn of t} union Dt(turns),
// pattern becomes pat(t) * pattern. Valid because admissible extensions never
// hit the new map's illegal turn with the accumulated turn set.
BfsState advance(const BfsState& s, const NielsenAuto& t, int gen_idx, int dirs, int r) {
  BfsState n;
  n.last = gen_idx;
  n.pattern = pattern_mul(pattern_elementary(t), s.pattern, r);
  // Dt maps x -> y and fixes everything else; rebuild the mask bitwise.
  for (int i = 0; i < dirs; ++i)
    for (int j = i + 1; j < dirs; ++j) {
      int bit = tri_index(i, j, dirs);
      bool present = bit < 64 ? (s.turns.lo >> bit) & 1 : (s.turns.hi >> (bit - 64)) & 1;
      if (!present) continue;
      Letter d1 = t.deriv(letter_at_slot(i)), d2 = t.deriv(letter_at_slot(j));
      if (d1 == d2) continue;  // degenerate image cannot occur on admissible paths
      n.turns.set(turn_bit(d1, d2, dirs));
    }
  n.turns.set(turn_bit(-t.y, t.x, dirs));
  return n;
}

Mask128 upsilon_mask(const NielsenAuto& t, int dirs) {
  Mask128 m;
  int xs = direction_slot(t.x);
  for (int i = 0; i < dirs; ++i)
    for (int j = i + 1; j < dirs; ++j)
      if (i != xs && j != xs) m.set(tri_index(i, j, dirs));
  m.set(turn_bit(t.x, -t.y, dirs));
  return m;
}

}  // namespace

NielsenSequence find_seed_sequence(int rank, std::uint64_t budget, SeedSearchStats* stats) {
  if (rank < 3 || rank > 8) throw std::invalid_argument("seed search supports rank 3..8");
  const int dirs = 2 * rank;
  const NielsenSequence block = prevention_block(rank);
  const std::vector<NielsenAuto> gens = enumerate_generators(rank);
  std::vector<Mask128> targets(gens.size());
  std::vector<std::vector<int>> succ(gens.size());
  std::map<NielsenAuto, int> gen_idx;
  for (std::size_t i = 0; i < gens.size(); ++i) gen_idx[gens[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    targets[i] = upsilon_mask(gens[i], dirs);
    for (const NielsenAuto& s : successors(gens[i])) succ[i].push_back(gen_idx.at(s));
  }
  // Distance score: over every candidate excluded direction v, count the
  // complete-graph edges avoiding v that are still missing plus the present
  // edges touching v, then add the number of zero pattern entries. Zero means
  // the turn set is one final push away from the one-extra-edge shape.
  std::vector<Mask128> avoid(static_cast<std::size_t>(dirs));
  std::vector<Mask128> touch(static_cast<std::size_t>(dirs));
  for (int v = 0; v < dirs; ++v)
    for (int i = 0; i < dirs; ++i)
      for (int j = i + 1; j < dirs; ++j) {
        if (i == v || j == v)
          touch[static_cast<std::size_t>(v)].set(tri_index(i, j, dirs));
        else
          avoid[static_cast<std::size_t>(v)].set(tri_index(i, j, dirs));
      }
  auto count = [](std::uint64_t lo, std::uint64_t hi) {
    return std::popcount(lo) + std::popcount(hi);
  };
  auto score = [&](const BfsState& s) {
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < dirs; ++v) {
      const Mask128& a = avoid[static_cast<std::size_t>(v)];
      const Mask128& t = touch[static_cast<std::size_t>(v)];
      int missing = count(a.lo & ~s.turns.lo, a.hi & ~s.turns.hi);
      int extra = count(t.lo & s.turns.lo, t.hi & s.turns.hi);
      best = std::min(best, missing + extra);
    }
    int zeros = rank * rank - std::popcount(s.pattern);
    return best + zeros;
  };

  struct Node {
    BfsState state;
    int parent;
    int via;  // generator index appended to reach this node (-1 for root)
  };
  std::vector<Node> nodes;
  std::unordered_set<BfsState, BfsStateHash, std::equal_to<BfsState>> seen;

  BfsState root;
  root.pattern = pattern_identity(rank);
  for (const NielsenAuto& t : block) root = advance(root, t, gen_idx.at(t), dirs, rank);
  nodes.push_back({root, -1, -1});
  seen.insert(root);

  std::uint64_t visited = 0;
  auto is_goal = [&](const BfsState& s) {
    return pattern_full(s.pattern, rank) && s.turns == targets[static_cast<std::size_t>(s.last)] &&
           is_admissible_pair(gens[static_cast<std::size_t>(s.last)], block.front());
  };

  auto build = [&](int node) {
    std::vector<int> via;
    for (int n = node; nodes[static_cast<std::size_t>(n)].via >= 0;
         n = nodes[static_cast<std::size_t>(n)].parent)
      via.push_back(nodes[static_cast<std::size_t>(n)].via);
    NielsenSequence seq = block;
    for (auto it = via.rbegin(); it != via.rend(); ++it)
      seq.push_back(gens[static_cast<std::size_t>(*it)]);
    if (stats) {
      stats->visited = visited;
      stats->length = static_cast<int>(seq.size());
    }
    return seq;
  };

  if (is_goal(root)) return build(0);

  // Breadth-limited: each generation expands every kept node and retains the
  // kBeamWidth best-scored new states, ties broken by creation order.
  constexpr std::size_t kBeamWidth = 1024;
  std::vector<int> beam{0};
  while (!beam.empty()) {
    std::vector<std::pair<int, int>> scored;  // (score, node id)
    for (int cur : beam) {
      const BfsState state = nodes[static_cast<std::size_t>(cur)].state;
      for (int nxt : succ[static_cast<std::size_t>(state.last)]) {
        if (++visited > budget)
          throw std::runtime_error("seed search budget exhausted for rank " +
                                   std::to_string(rank));
        BfsState ns = advance(state, gens[static_cast<std::size_t>(nxt)], nxt, dirs, rank);
        if (!seen.insert(ns).second) continue;
        nodes.push_back({ns, cur, nxt});
        int id = static_cast<int>(nodes.size()) - 1;
        if (is_goal(ns)) return build(id);
        scored.emplace_back(score(ns), id);
      }
    }
    std::sort(scored.begin(), scored.end());
    if (scored.size() > kBeamWidth) scored.resize(kBeamWidth);
    beam.clear();
    for (const auto& [sc, id] : scored) beam.push_back(id);
  }
  throw std::runtime_error("seed search budget exhausted for rank " + std::to_string(rank));
}

const NielsenSequence& seed_sequence(int rank) {
  static std::mutex mu;
  static std::map<int, NielsenSequence> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rank);
  if (it == cache.end()) it = cache.emplace(rank, find_seed_sequence(rank)).first;
  return it->second;
}

std::string format_seed_fixture_line(int rank, const NielsenSequence& seq) {
  return "rank " + std::to_string(rank) + ": " + format_sequence(seq);
}

std::vector<std::pair<int, NielsenSequence>> parse_seed_fixture(std::string_view text) {
  std::vector<std::pair<int, NielsenSequence>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("rank ", 0) != 0) throw ParseError("fixture line must start with 'rank '");
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("fixture line missing ':'");
    int rank = 0;
    for (char c : line.substr(5, colon - 5)) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad fixture rank");
      rank = rank * 10 + (c - '0');
    }
    if (rank < 2) throw ParseError("bad fixture rank");
    out.emplace_back(rank, parse_sequence(line.substr(colon + 1), rank));
  }
  return out;
}

}  // namespace ttwalk
