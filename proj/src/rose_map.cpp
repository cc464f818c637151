#include "ttwalk/rose_map.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ttwalk/folds.hpp"

namespace ttwalk {

std::string format_turn(const Turn& t) {
  return "{" + letter_name(t.a) + "," + letter_name(t.b) + "}";
}

WhGraph WhGraph::on_all_directions(int rank) {
  WhGraph g;
  g.rank = rank;
  for (int s = 0; s < 2 * rank; ++s) g.vertices.insert(letter_at_slot(s));
  return g;
}

int WhGraph::degree(Letter v) const {
  int d = 0;
  for (const Turn& e : edges)
    if (e.contains(v)) ++d;
  return d;
}

bool WhGraph::connected() const {
  if (vertices.size() <= 1) return true;
  std::set<Letter> seen;
  std::vector<Letter> stack{*vertices.begin()};
  seen.insert(*vertices.begin());
  while (!stack.empty()) {
    Letter v = stack.back();
    stack.pop_back();
    for (const Turn& e : edges) {
      if (!e.contains(v)) continue;
      Letter u = (e.a == v) ? e.b : e.a;
      if (seen.insert(u).second) stack.push_back(u);
    }
  }
  return seen.size() == vertices.size();
}

bool WhGraph::is_complete() const {
  for (auto i = vertices.begin(); i != vertices.end(); ++i)
    for (auto j = std::next(i); j != vertices.end(); ++j)
      if (!edges.count(Turn(*i, *j))) return false;
  return true;
}

bool WhGraph::has_cut_vertex() const {
  if (vertices.size() < 3) return false;
  for (Letter v : vertices) {
    WhGraph sub;
    sub.rank = rank;
    sub.vertices = vertices;
    sub.vertices.erase(v);
    for (const Turn& e : edges)
      if (!e.contains(v)) sub.edges.insert(e);
    if (!sub.connected()) return true;
  }
  return false;
}

WhGraph upsilon_graph(int rank, Letter x, Letter y) {
  if (!valid_letter(x, rank) || !valid_letter(y, rank) || letter_index(x) == letter_index(y))
    throw std::invalid_argument("upsilon graph needs y distinct from x, x^{-1}");
  WhGraph g = WhGraph::on_all_directions(rank);
  for (int i = 0; i < 2 * rank; ++i)
    for (int j = i + 1; j < 2 * rank; ++j) {
      Letter u = letter_at_slot(i), v = letter_at_slot(j);
      if (u != x && v != x) g.edges.insert(Turn(u, v));
    }
  g.edges.insert(Turn(x, -y));
  return g;
}

std::optional<std::pair<Letter, Letter>> upsilon_witness(const WhGraph& g) {
  if (static_cast<int>(g.vertices.size()) != 2 * g.rank) return std::nullopt;
  Letter x = 0;
  int deg1 = 0;
  for (Letter v : g.vertices)
    if (g.degree(v) == 1) {
      x = v;
      ++deg1;
    }
  if (deg1 != 1) return std::nullopt;
  Letter nb = 0;
  for (const Turn& e : g.edges)
    if (e.contains(x)) nb = (e.a == x) ? e.b : e.a;
  if (nb == 0) return std::nullopt;
  Letter y = -nb;
  if (letter_index(y) == letter_index(x)) return std::nullopt;
  if (!(g == upsilon_graph(g.rank, x, y))) return std::nullopt;
  return std::make_pair(x, y);
}

RoseMap::RoseMap(int rank, std::vector<Word> images, bool regular)
    : rank_(rank), images_(std::move(images)), regular_(regular) {
  if (rank_ < 1) throw std::invalid_argument("rose map needs rank >= 1");
  if (static_cast<int>(images_.size()) != rank_)
    throw std::invalid_argument("rose map needs one image per generator");
  for (const Word& w : images_) {
    if (w.empty()) throw std::invalid_argument("rose map images must be nonempty");
    if (w.rank() != rank_) throw std::invalid_argument("rose map image rank mismatch");
  }
}

RoseMap RoseMap::identity(int rank) {
  std::vector<Word> ims;
  for (int i = 1; i <= rank; ++i) ims.emplace_back(std::vector<Letter>{i}, rank);
  return RoseMap(rank, std::move(ims));
}

RoseMap RoseMap::from_nielsen(const NielsenAuto& t) {
  std::vector<Word> ims;
  for (int i = 1; i <= t.rank; ++i) ims.push_back(t.image_word(i));
  return RoseMap(t.rank, std::move(ims));
}

RoseMap RoseMap::from_sequence(const NielsenSequence& seq) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  RoseMap acc = from_nielsen(seq.front());
  for (std::size_t i = 1; i < seq.size(); ++i) acc = compose(from_nielsen(seq[i]), acc);
  return acc;
}

const Word& RoseMap::image(int gen) const {
  if (gen < 1 || gen > rank_) throw std::invalid_argument("generator out of range");
  return images_[static_cast<std::size_t>(gen - 1)];
}

Word RoseMap::image_of_direction(Letter d) const {
  const Word& w = image(letter_index(d));
  return d > 0 ? w : w.inverted();
}

Word RoseMap::apply_to_word(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (Letter l : w.letters()) {
    const Word& im = image(letter_index(l));
    if (l > 0)
      for (Letter m : im.letters()) out.push_back(m);
    else
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
        out.push_back(-*it);
  }
  return Word::reduce(out, rank_);
}

Letter RoseMap::derivative(Letter d) const {
  const Word& w = image(letter_index(d));
  return d > 0 ? w.front() : -w.back();
}

std::size_t RoseMap::complexity() const {
  std::size_t c = 0;
  for (const Word& w : images_) c += w.size();
  return c;
}

RoseMap compose(const RoseMap& outer, const RoseMap& inner) {
  if (outer.rank() != inner.rank()) throw std::invalid_argument("rank mismatch in compose");
  int r = outer.rank();
  std::vector<Word> ims;
  bool regular = outer.regular() && inner.regular();
  for (int i = 1; i <= r; ++i) {
    std::vector<Letter> raw;
    for (Letter l : inner.image(i).letters()) {
      const Word& im = outer.image(letter_index(l));
      if (l > 0)
        for (Letter m : im.letters()) raw.push_back(m);
      else
        for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) raw.push_back(-*it);
    }
    std::size_t raw_len = raw.size();
    Word w = Word::reduce(raw, r);
    if (w.empty()) throw std::invalid_argument("composition collapses an edge");
    if (w.size() != raw_len) regular = false;
    ims.push_back(std::move(w));
  }
  return RoseMap(r, std::move(ims), regular);
}

RoseMap power(const RoseMap& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  RoseMap acc = RoseMap::identity(f.rank());
  for (int i = 0; i < k; ++i) acc = compose(f, acc);
  return acc;
}

std::vector<Letter> derivative_map(const RoseMap& f) {
  std::vector<Letter> d(static_cast<std::size_t>(2 * f.rank()));
  for (int s = 0; s < 2 * f.rank(); ++s)
    d[static_cast<std::size_t>(s)] = f.derivative(letter_at_slot(s));
  return d;
}

std::set<Turn> taken_turns(const Word& path) {
  std::set<Turn> out;
  const auto& ls = path.letters();
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) out.insert(Turn(-ls[i], ls[i + 1]));
  return out;
}

std::set<Turn> taken_turns(const RoseMap& f) {
  if (!f.regular()) throw std::invalid_argument("taken turns need a regular map");
  std::set<Turn> out;
  for (int i = 1; i <= f.rank(); ++i) {
    std::set<Turn> t = taken_turns(f.image(i));
    out.insert(t.begin(), t.end());
  }
  return out;
}

std::vector<std::vector<Letter>> gates_of_derivative(const std::vector<Letter>& deriv, int rank) {
  int dirs = 2 * rank;
  std::vector<Letter> cur(static_cast<std::size_t>(dirs));
  for (int s = 0; s < dirs; ++s) cur[static_cast<std::size_t>(s)] = letter_at_slot(s);
  // Fibers of the direction map stabilize within 2r iterations.
  for (int k = 0; k < dirs; ++k)
    for (int s = 0; s < dirs; ++s)
      cur[static_cast<std::size_t>(s)] =
          deriv[static_cast<std::size_t>(direction_slot(cur[static_cast<std::size_t>(s)]))];
  std::map<Letter, std::vector<Letter>> fibers;
  for (int s = 0; s < dirs; ++s) fibers[cur[static_cast<std::size_t>(s)]].push_back(letter_at_slot(s));
  std::vector<std::vector<Letter>> out;
  for (auto& [k, v] : fibers) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return direction_slot(a.front()) < direction_slot(b.front());
  });
  return out;
}

std::vector<std::vector<Letter>> gates(const RoseMap& f) {
  return gates_of_derivative(derivative_map(f), f.rank());
}

bool is_legal(const std::vector<std::vector<Letter>>& gate_partition, const Turn& t) {
  if (t.degenerate()) return false;
  for (const auto& g : gate_partition) {
    bool ha = std::find(g.begin(), g.end(), t.a) != g.end();
    bool hb = std::find(g.begin(), g.end(), t.b) != g.end();
    if (ha && hb) return false;
    if (ha || hb) return true;  // partition: the other letter is elsewhere
  }
  return true;
}

std::vector<Turn> illegal_turns_of_gates(const std::vector<std::vector<Letter>>& gate_partition) {
  std::vector<Turn> out;
  for (const auto& g : gate_partition)
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) out.emplace_back(g[i], g[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Turn> illegal_turns(const RoseMap& f) { return illegal_turns_of_gates(gates(f)); }

WhGraph limited_whitehead_graph(const RoseMap& f) {
  WhGraph g = WhGraph::on_all_directions(f.rank());
  g.edges = taken_turns(f);
  return g;
}

std::set<Turn> derivative_closure(std::set<Turn> edges, const std::vector<Letter>& deriv,
                                  int rank, int cap) {
  if (static_cast<int>(deriv.size()) != 2 * rank)
    throw std::invalid_argument("derivative_closure: direction map has wrong size");
  for (int round = 0; round < cap; ++round) {
    std::set<Turn> next = edges;
    for (const Turn& t : edges) {
      Letter ia = deriv[static_cast<std::size_t>(direction_slot(t.a))];
      Letter ib = deriv[static_cast<std::size_t>(direction_slot(t.b))];
      if (ia == ib)
        throw std::invalid_argument("whitehead closure degenerates: map is not train track");
      next.insert(Turn(ia, ib));
    }
    if (next == edges) return edges;
    edges = std::move(next);
  }
  throw std::invalid_argument("whitehead closure did not stabilize within cap");
}

bool is_upsilon(const WhGraph& g, Letter x, Letter y) {
  WhGraph model = upsilon_graph(g.rank, x, y);
  return g.vertices == model.vertices && g.edges == model.edges;
}

WhGraph whitehead_graph(const RoseMap& f, int cap) {
  WhGraph g = WhGraph::on_all_directions(f.rank());
  g.edges = derivative_closure(taken_turns(f), derivative_map(f), f.rank(), cap);
  return g;
}

Matrix transition_matrix(const RoseMap& f) {
  Matrix m(f.rank());
  for (int j = 1; j <= f.rank(); ++j)
    for (Letter l : f.image(j).letters()) m.at(letter_index(l) - 1, j - 1) += 1;
  return m;
}

bool is_train_track(const RoseMap& f) {
  if (!f.regular()) return false;
  auto gp = gates(f);
  for (const Turn& t : taken_turns(f))
    if (!is_legal(gp, t)) return false;
  fold_decomposition(f);  // throws unless f is a homotopy equivalence
  return true;
}

// ---------------------------------------------------------------------------
// Periodic Nielsen path search.
//
// Candidate paths are grown from the unique illegal turn. Each state holds the
// known prefixes of the two legal sides; applying the map and tightening at
// the middle either kills the branch (the surviving middle turn differs from
// the illegal turn, which rules out all periods), transitions to the next
// state, or demands more letters on a consumed side (bounded branching).

namespace {

struct PairState {
  std::vector<Letter> s1, s2;
  bool operator==(const PairState& o) const { return s1 == o.s1 && s2 == o.s2; }
};

struct PairStateHash {
  std::size_t operator()(const PairState& s) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](Letter l) {
      h ^= static_cast<std::uint64_t>(static_cast<std::int64_t>(l) + (1 << 20));
      h *= 1099511628211ULL;
    };
    for (Letter l : s.s1) mix(l);
    mix(0x7fffffff);
    for (Letter l : s.s2) mix(l);
    return static_cast<std::size_t>(h);
  }
};

enum class Expl { Dead, Capped, Found };

constexpr std::size_t kMaterializeGuard = 1u << 20;

// f applied once to a letter path, reduced; empty result allowed only for
// empty input.
std::vector<Letter> apply_once(const RoseMap& f, const std::vector<Letter>& w) {
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (Letter l : w) {
    const Word& im = f.image(letter_index(l));
    auto push = [&out](Letter m) {
      if (!out.empty() && out.back() == -m)
        out.pop_back();
      else
        out.push_back(m);
    };
    if (l > 0)
      for (Letter m : im.letters()) push(m);
    else
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) push(-*it);
  }
  return out;
}

std::optional<std::vector<Letter>> apply_power_guarded(const RoseMap& f, std::vector<Letter> w,
                                                       int p) {
  for (int i = 0; i < p; ++i) {
    w = apply_once(f, w);
    if (w.size() > kMaterializeGuard) return std::nullopt;
  }
  return w;
}

bool is_prefix(const std::vector<Letter>& pre, const std::vector<Letter>& full) {
  return pre.size() <= full.size() && std::equal(pre.begin(), pre.end(), full.begin());
}

struct InpSearcher {
  const RoseMap& f;
  InpSearchCaps caps;
  Turn tau;
  std::vector<std::vector<Letter>> gate_partition;
  int rounds = 0;
  bool budget_blown = false;
  std::optional<InpWitness> witness;
  std::unordered_map<PairState, int, PairStateHash> status;  // 0 live, 1 dead, 2 capped

  InpSearcher(const RoseMap& f_, const InpSearchCaps& caps_, const Turn& tau_)
      : f(f_), caps(caps_), tau(tau_), gate_partition(gates(f_)) {}

  bool tick() {
    if (++rounds > caps.rounds) {
      budget_blown = true;
      return false;
    }
    return true;
  }

  std::optional<InpWitness> closure_witness(const PairState& st) {
    for (int p = 1; p <= caps.period_cap; ++p) {
      auto w = check_candidate(st, p);
      if (w) return w;
    }
    return std::nullopt;
  }

  std::optional<InpWitness> check_candidate(const PairState& st, int p) {
    auto t1 = apply_power_guarded(f, st.s1, p);
    auto t2 = apply_power_guarded(f, st.s2, p);
    if (!t1 || !t2) return std::nullopt;
    std::size_t c = 0;
    while (c < t1->size() && c < t2->size() && (*t1)[c] == (*t2)[c]) ++c;
    if (c == 0) return std::nullopt;
    std::vector<Letter> a(t1->begin() + static_cast<long>(c), t1->end());
    std::vector<Letter> b(t2->begin() + static_cast<long>(c), t2->end());
    if (a.empty() || b.empty()) return std::nullopt;
    if (!is_prefix(st.s1, a) || !is_prefix(st.s2, b)) return std::nullopt;

    InpWitness w;
    w.period = p;
    w.side1 = Word(st.s1, f.rank());
    w.side2 = Word(st.s2, f.rank());
    w.interior1 = a.size() > st.s1.size();
    w.interior2 = b.size() > st.s2.size();
    if (!verify_inp(f, w)) return std::nullopt;
    return w;
  }

  Expl combine(Expl acc, Expl next) {
    if (acc == Expl::Found || next == Expl::Found) return Expl::Found;
    if (acc == Expl::Capped || next == Expl::Capped) return Expl::Capped;
    return Expl::Dead;
  }

  Expl explore(PairState st) {
    if (st.s1.size() > static_cast<std::size_t>(caps.side_letters) ||
        st.s2.size() > static_cast<std::size_t>(caps.side_letters))
      return Expl::Capped;
    auto [it, inserted] = status.try_emplace(st, 0);
    if (!inserted) {
      if (it->second == 1) return Expl::Dead;
      return Expl::Capped;  // live (cycle) or previously capped
    }
    if (!tick()) {
      status[st] = 2;
      return Expl::Capped;
    }
    if (auto w = closure_witness(st)) {
      witness = w;
      status[st] = 1;
      return Expl::Found;
    }
    Expl res = transition(st);
    status[st] = (res == Expl::Dead) ? 1 : 2;
    return res;
  }

  // One application of f with tightening at the middle; extends consumed sides.
  Expl transition(const PairState& st) {
    std::vector<Letter> f1 = apply_once(f, st.s1);
    std::vector<Letter> f2 = apply_once(f, st.s2);
    std::size_t i = 0;
    while (i < f1.size() && i < f2.size() && f1[i] == f2[i]) ++i;

    bool end1 = (i == f1.size());
    bool end2 = (i == f2.size());
    if (end1 || end2) return extend(st, end1, end2, i, f1, f2);

    Turn mid(f1[i], f2[i]);
    if (mid != tau) return Expl::Dead;
    PairState next;
    next.s1.assign(f1.begin() + static_cast<long>(i), f1.end());
    next.s2.assign(f2.begin() + static_cast<long>(i), f2.end());
    if (next.s1.front() != tau.a) std::swap(next.s1, next.s2);
    return explore(std::move(next));
  }

  Expl extend(const PairState& st, bool end1, bool end2, std::size_t i,
              const std::vector<Letter>& f1, const std::vector<Letter>& f2) {
    // Extend side 1 by convention when both are consumed.
    bool grow_first = end1;
    const std::vector<Letter>& side = grow_first ? st.s1 : st.s2;
    std::optional<Letter> needed;  // next image letter on the surviving side
    if (end1 != end2) {
      const std::vector<Letter>& other = end1 ? f2 : f1;
      needed = other[i];
    }
    Letter last = side.back();
    Expl acc = Expl::Dead;
    for (int s = 0; s < 2 * f.rank(); ++s) {
      Letter e = letter_at_slot(s);
      if (e == -last) continue;
      if (!is_legal(gate_partition, Turn(-last, e))) continue;
      if (needed) {
        Letter de = f.derivative(e);
        bool cont = (de == *needed);
        bool stop = !cont && Turn(de, *needed) == tau;
        if (!cont && !stop) continue;
      }
      if (!tick()) return Expl::Capped;
      PairState ext = st;
      (grow_first ? ext.s1 : ext.s2).push_back(e);
      acc = combine(acc, transition(ext));
      if (acc == Expl::Found) return acc;
    }
    return acc;
  }
};

void require_expanding_single_illegal(const RoseMap& f, Turn& tau) {
  if (!f.regular()) throw std::invalid_argument("inp search needs a regular map");
  auto gp = gates(f);
  for (const Turn& t : taken_turns(f))
    if (!is_legal(gp, t)) throw std::invalid_argument("inp search needs a train track map");
  auto ill = illegal_turns_of_gates(gp);
  if (ill.size() != 1)
    throw std::invalid_argument("inp search needs exactly one nondegenerate illegal turn");
  tau = ill.front();
  Matrix m = transition_matrix(f);
  bool expanding = is_irreducible(m) && !is_permutation_matrix(m);
  if (!expanding) {
    // Fallback: every column sum of some power must reach 2.
    Matrix acc = m;
    for (int k = 0; k < 4 * f.rank() && !expanding; ++k) {
      bool all = true;
      for (int j = 0; j < m.size(); ++j) {
        BigInt col = 0;
        for (int i = 0; i < m.size(); ++i) col += acc.at(i, j);
        if (col < 2) all = false;
      }
      if (all)
        expanding = true;
      else
        acc = acc * m;
    }
  }
  if (!expanding) throw std::invalid_argument("inp search needs an expanding map");
}

}  // namespace

InpResult find_inp(const RoseMap& f, const InpSearchCaps& caps) {
  Turn tau;
  require_expanding_single_illegal(f, tau);
  InpSearcher s(f, caps, tau);
  PairState root;
  root.s1 = {tau.a};
  root.s2 = {tau.b};
  Expl res = s.explore(std::move(root));
  InpResult out;
  out.rounds_used = s.rounds;
  if (res == Expl::Found) {
    out.status = InpStatus::Found;
    out.witness = s.witness;
  } else if (res == Expl::Dead && !s.budget_blown) {
    out.status = InpStatus::NoInp;
  } else {
    out.status = InpStatus::Inconclusive;
  }
  return out;
}

bool verify_inp(const RoseMap& f, const InpWitness& w) {
  if (w.period < 1 || w.side1.empty() || w.side2.empty()) return false;
  auto t1 = apply_power_guarded(f, w.side1.letters(), w.period);
  auto t2 = apply_power_guarded(f, w.side2.letters(), w.period);
  if (!t1 || !t2) return false;
  std::size_t c = 0;
  while (c < t1->size() && c < t2->size() && (*t1)[c] == (*t2)[c]) ++c;
  if (c == 0) return false;

  // A vertex endpoint must reproduce the side exactly; an interior endpoint
  // must land strictly inside the image of the final edge (offset rule), so
  // the expanding affine return map fixes an interior point of that edge.
  auto check_side = [&](const Word& side, const std::vector<Letter>& total, bool interior) {
    std::vector<Letter> tail(total.begin() + static_cast<long>(c), total.end());
    if (tail.empty()) return false;
    if (!is_prefix(side.letters(), tail)) return false;
    bool strict = tail.size() > side.size();
    if (strict != interior) return false;
    if (!interior) return true;
    Letter e = side.back();
    std::vector<Letter> single{e};
    auto ip = apply_power_guarded(f, single, w.period);
    if (!ip) return false;
    std::size_t len = ip->size();
    if (total.size() < len) return false;
    std::size_t block_start = total.size() - len;
    std::size_t match_end = c + side.size();
    if (match_end <= block_start) return false;
    std::size_t o = match_end - 1 - block_start;
    if (o < 1 || o + 2 > len) return false;
    return total[match_end - 1] == e;
  };
  return check_side(w.side1, *t1, w.interior1) && check_side(w.side2, *t2, w.interior2);
}

std::string format_rose_map(const RoseMap& f) {
  std::string out = "rank " + std::to_string(f.rank()) + "\n";
  for (int i = 1; i <= f.rank(); ++i)
    out += letter_name(i) + " -> " + format_word(f.image(i), false) + "\n";
  return out;
}

RoseMap parse_rose_map(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int rank = -1;
  std::map<int, Word> images;
  while (std::getline(in, line)) {
    std::size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos) continue;
    std::string body = line.substr(p);
    if (body.empty() || body[0] == '#') continue;
    if (rank < 0) {
      if (body.rfind("rank", 0) != 0) throw ParseError("rose map must start with 'rank <r>'");
      try {
        rank = std::stoi(body.substr(4));
      } catch (const std::exception&) {
        throw ParseError("bad rank header");
      }
      if (rank < 1 || rank > 64) throw ParseError("rank out of range");
      continue;
    }
    std::size_t arrow = body.find("->");
    if (arrow == std::string::npos) throw ParseError("rose map line missing '->'");
    Word lhs = parse_word(body.substr(0, arrow), rank);
    if (lhs.size() != 1 || lhs.at(0) < 0) throw ParseError("rose map line must map a generator");
    int gen = lhs.at(0);
    if (images.count(gen)) throw ParseError("duplicate image for " + letter_name(gen));
    images.emplace(gen, parse_word(body.substr(arrow + 2), rank));
  }
  if (rank < 0) throw ParseError("missing rank header");
  std::vector<Word> ims;
  for (int i = 1; i <= rank; ++i) {
    auto it = images.find(i);
    if (it == images.end()) throw ParseError("missing image for " + letter_name(i));
    ims.push_back(it->second);
  }
  return RoseMap(rank, std::move(ims));
}

}  // namespace ttwalk
