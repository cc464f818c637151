#include "ttwalk/composition.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ttwalk {

NielsenComposition::NielsenComposition(int rank) : rank_(rank) {
  if (rank_ < 2) throw std::invalid_argument("composition analyzer needs rank >= 2");
  deriv_.resize(static_cast<std::size_t>(2 * rank_));
  for (int s = 0; s < 2 * rank_; ++s) deriv_[static_cast<std::size_t>(s)] = letter_at_slot(s);
  occurs_.assign(static_cast<std::size_t>(rank_),
                 std::vector<bool>(static_cast<std::size_t>(rank_), false));
  for (int i = 0; i < rank_; ++i) occurs_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
}

void NielsenComposition::push(const NielsenAuto& t) {
  if (t.rank != rank_) throw std::invalid_argument("rank mismatch in composition push");
  // The pushed map cancels against the existing images exactly when its
  // illegal turn has already been taken.
  if (first_irregular_ < 0 && turns_.count(Turn(t.x, t.y))) first_irregular_ = length_;

  auto dtheta = [&t](Letter d) { return d == t.x ? t.y : d; };

  std::set<Turn> next;
  for (const Turn& u : turns_) {
    Letter a = dtheta(u.a), b = dtheta(u.b);
    if (a != b) next.insert(Turn(a, b));
  }
  next.insert(Turn(-t.y, t.x));  // internal turn of the new two-letter block
  turns_ = std::move(next);

  for (Letter& d : deriv_) d = dtheta(d);

  std::size_t xi = static_cast<std::size_t>(letter_index(t.x) - 1);
  std::size_t yi = static_cast<std::size_t>(letter_index(t.y) - 1);
  for (int j = 0; j < rank_; ++j)
    if (occurs_[xi][static_cast<std::size_t>(j)]) occurs_[yi][static_cast<std::size_t>(j)] = true;

  ++length_;
}

Letter NielsenComposition::derivative(Letter d) const {
  if (!valid_letter(d, rank_)) throw std::invalid_argument("direction out of range");
  return deriv_[static_cast<std::size_t>(direction_slot(d))];
}

bool NielsenComposition::pattern_at(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw std::invalid_argument("pattern index out of range");
  return occurs_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

bool NielsenComposition::pattern_positive() const noexcept {
  for (const auto& row : occurs_)
    for (bool b : row)
      if (!b) return false;
  return true;
}

std::vector<std::vector<Letter>> NielsenComposition::gate_partition() const {
  return gates_of_derivative(deriv_, rank_);
}

std::vector<Turn> NielsenComposition::illegal() const {
  return illegal_turns_of_gates(gate_partition());
}

bool NielsenComposition::turns_legal() const {
  auto gp = gate_partition();
  for (const Turn& t : turns_)
    if (!is_legal(gp, t)) return false;
  return true;
}

namespace {

// One side of a candidate periodic Nielsen path. `window` holds the leading
// letters of the side's image in the coordinates of the current stage; it is
// always a prefix of the true image, and `whole` records whether it is the
// entire image (only then may the side be consumed further or a vertex-exact
// recurrence be claimed). `source` lists the original edge letters revealed so
// far and `revealed` how many of them this run has consumed: during the search
// the two always agree, while the confirming replay pre-loads `source` and
// advances `revealed` instead of branching.
struct TrackedSide {
  std::vector<Letter> window;
  std::vector<Letter> source;
  std::size_t revealed = 1;
  bool whole = true;
};

struct ForcingBranch {
  long stage = 0;      // elementary maps applied so far
  TrackedSide xs, ys;  // xs leads with the next map's x, ys with its y
};

// Leading letters of the image of one original edge letter after some number
// of maps; `whole` records whether the cap ever truncated it.
struct StagedImage {
  std::vector<Letter> letters;
  bool whole = true;
};

enum class Probe { Dead, Capped, Found };

// Drives candidate sides through the cycle one elementary map at a time.
//
// Invariants carried per stage, for theta = [x -> yx] the next map to apply:
//  - both sides are legal, so neither contains the turn {x, y} and the
//    letterwise substitution theta(side) is already reduced;
//  - the middle turn between the sides is {x, y}, so the application cancels
//    exactly one letter on each side:  (x u, y v) -> (x theta(u), theta(v));
//  - afterwards the middle turn is {x, D theta(v_1)} and must equal the
//    characteristic pair of the following map, or the branch dies: admissible
//    compositions identify no other direction pair and their derivative images
//    exclude the letter that would recreate the illegal turn, so a mismatched
//    middle turn stays nondegenerate forever and the candidate straightens.
class StagedPinpSearch {
 public:
  StagedPinpSearch(const NielsenSequence& seq, const PinpSearchCaps& caps,
                   std::vector<std::vector<Letter>> gates)
      : seq_(seq),
        caps_(caps),
        gates_(std::move(gates)),
        n_(static_cast<long>(seq.size())),
        rank_(seq.front().rank) {
    memo_.resize(static_cast<std::size_t>(2 * rank_));
    for (int s = 0; s < 2 * rank_; ++s)
      memo_[static_cast<std::size_t>(s)].push_back({{letter_at_slot(s)}, true});
  }

  PinpResult run() {
    ForcingBranch root;
    root.xs.window = {seq_.front().x};
    root.xs.source = root.xs.window;
    root.ys.window = {seq_.front().y};
    root.ys.source = root.ys.window;
    // Breadth first: extension chains can be unboundedly deep (padding a valid
    // path keeps satisfying the stage conditions), so depth first could starve
    // a shallow witness for the whole budget.
    std::deque<ForcingBranch> pending;
    pending.push_back(std::move(root));
    bool capped = false;
    PinpResult out;
    while (!pending.empty() && !budget_blown_) {
      ForcingBranch br = std::move(pending.front());
      pending.pop_front();
      Probe p = drive(std::move(br), pending);
      if (p == Probe::Found) {
        out.status = InpStatus::Found;
        out.witness = witness_;
        out.rounds_used = ticks_;
        return out;
      }
      if (p == Probe::Capped) capped = true;
    }
    out.rounds_used = ticks_;
    out.status = (!capped && !budget_blown_) ? InpStatus::NoInp : InpStatus::Inconclusive;
    return out;
  }

 private:
  bool tick() {
    if (++ticks_ > caps_.rounds) {
      budget_blown_ = true;
      return false;
    }
    return true;
  }

  // theta applied letterwise, truncated to cap; no tightening needed (see the
  // class comment), so a truncated input still yields a prefix of the truth.
  std::vector<Letter> apply_elem(const NielsenAuto& t, const Letter* w, std::size_t len,
                                 std::size_t cap, bool& whole) const {
    std::vector<Letter> out;
    out.reserve(std::min(cap, 2 * len) + 2);
    for (std::size_t i = 0; i < len; ++i) {
      t.image_of(w[i], out);
      if (out.size() > cap) {
        out.resize(cap);
        whole = false;
        return out;
      }
    }
    return out;
  }

  // Image of one original edge letter after `stages` maps: the coordinates a
  // side extended at that stage lives in. Memoized per direction because deep
  // extension chains revisit every earlier stage.
  const StagedImage& staged_image(Letter e, long stages) {
    auto& column = memo_[static_cast<std::size_t>(direction_slot(e))];
    const std::size_t cap = static_cast<std::size_t>(caps_.side_letters);
    while (static_cast<long>(column.size()) <= stages) {
      const StagedImage& prev = column.back();
      long applied = static_cast<long>(column.size()) - 1;
      StagedImage next;
      next.whole = prev.whole;
      next.letters = apply_elem(seq_[static_cast<std::size_t>(applied % n_)], prev.letters.data(),
                                prev.letters.size(), cap, next.whole);
      column.push_back(std::move(next));
    }
    return column[static_cast<std::size_t>(stages)];
  }

  void append_revealed(TrackedSide& side, Letter e, long stage) {
    const StagedImage& img = staged_image(e, stage);
    bool whole = img.whole;
    const std::size_t cap = static_cast<std::size_t>(caps_.side_letters);
    for (Letter l : img.letters) {
      if (side.window.size() >= cap) {
        whole = false;
        break;
      }
      side.window.push_back(l);
    }
    side.whole = side.whole && whole;
  }

  void step(ForcingBranch& br) const {
    const NielsenAuto& t = seq_[static_cast<std::size_t>(br.stage % n_)];
    const std::size_t cap = static_cast<std::size_t>(caps_.side_letters);
    std::vector<Letter> xu =
        apply_elem(t, br.xs.window.data() + 1, br.xs.window.size() - 1, cap - 1, br.xs.whole);
    std::vector<Letter> yv =
        apply_elem(t, br.ys.window.data() + 1, br.ys.window.size() - 1, cap, br.ys.whole);
    br.xs.window.resize(1);  // keeps t.x in front
    br.xs.window.insert(br.xs.window.end(), xu.begin(), xu.end());
    br.ys.window = std::move(yv);
    ++br.stage;
  }

  // Sides revealed down to one letter branch over the next original edge;
  // the turn onto it must be legal or the side would not be a legal path.
  void spawn_extensions(const ForcingBranch& br, std::deque<ForcingBranch>& pending) {
    Letter last = br.ys.source.back();
    for (int s = 0; s < 2 * rank_; ++s) {
      Letter e = letter_at_slot(s);
      if (e == -last) continue;
      if (!is_legal(gates_, Turn(-last, e))) continue;
      ForcingBranch child = br;
      child.ys.source.push_back(e);
      child.ys.revealed = child.ys.source.size();
      append_revealed(child.ys, e, br.stage);
      pending.push_back(std::move(child));
    }
  }

  // After j full cycles the stripped image tails are back in source
  // coordinates; equality with the revealed sides is the Nielsen identity
  // with vertex endpoints.
  bool vertex_recurrence(const ForcingBranch& br) const {
    return br.xs.whole && br.ys.whole && br.xs.window == br.xs.source &&
           br.ys.window == br.ys.source;
  }

  Probe drive(ForcingBranch br, std::deque<ForcingBranch>& pending) {
    for (;;) {
      if (br.stage > 0 && br.stage % n_ == 0) {
        long j = br.stage / n_;
        if (j <= caps_.period_cap && vertex_recurrence(br) && replay_confirms(br, j)) {
          witness_ = PinpWitness{static_cast<int>(j), Word(br.xs.source, rank_),
                                 Word(br.ys.source, rank_)};
          return Probe::Found;
        }
      }
      const NielsenAuto& t = seq_[static_cast<std::size_t>(br.stage % n_)];
      if (br.xs.window.front() == t.y && br.ys.window.front() == t.x) std::swap(br.xs, br.ys);
      if (br.xs.window.front() != t.x || br.ys.window.front() != t.y)
        return Probe::Dead;  // middle turn escaped the forced track
      if (br.ys.window.size() == 1) {
        if (!br.ys.whole) return Probe::Capped;  // truncated window cannot be refilled
        spawn_extensions(br, pending);
        return Probe::Dead;  // fate delegated to the children
      }
      step(br);
      if (!tick()) return Probe::Capped;
    }
  }

  // Re-runs the evolution with the witness sides pre-committed: extensions may
  // only reveal the recorded letters and the run must reach the same
  // vertex-exact recurrence. Guards the closure bookkeeping.
  bool replay_confirms(const ForcingBranch& done, long cycles) {
    ForcingBranch br;
    br.xs.window = {done.xs.source.front()};
    br.xs.source = done.xs.source;
    br.ys.window = {done.ys.source.front()};
    br.ys.source = done.ys.source;
    while (br.stage < cycles * n_) {
      const NielsenAuto& t = seq_[static_cast<std::size_t>(br.stage % n_)];
      if (br.xs.window.front() == t.y && br.ys.window.front() == t.x) std::swap(br.xs, br.ys);
      if (br.xs.window.front() != t.x || br.ys.window.front() != t.y) return false;
      if (br.ys.window.size() == 1) {
        if (!br.ys.whole || br.ys.revealed >= br.ys.source.size()) return false;
        Letter e = br.ys.source[br.ys.revealed++];
        append_revealed(br.ys, e, br.stage);
      }
      step(br);
      if (!tick()) return false;
    }
    return br.xs.revealed == br.xs.source.size() && br.ys.revealed == br.ys.source.size() &&
           vertex_recurrence(br);
  }

  const NielsenSequence& seq_;
  PinpSearchCaps caps_;
  std::vector<std::vector<Letter>> gates_;
  long n_;
  int rank_;
  int ticks_ = 0;
  bool budget_blown_ = false;
  std::optional<PinpWitness> witness_;
  std::vector<std::vector<StagedImage>> memo_;  // [direction slot][stage]
};

}  // namespace

PinpResult search_pinp(const NielsenSequence& seq, const PinpSearchCaps& caps) {
  if (seq.empty()) throw std::invalid_argument("pinp search needs a nonempty sequence");
  if (!is_cyclically_admissible(seq))
    throw std::invalid_argument("pinp search needs a cyclically admissible sequence");
  const int rank = seq.front().rank;
  NielsenComposition comp(rank);
  for (const NielsenAuto& t : seq) comp.push(t);
  if (!comp.regular() || !comp.turns_legal())
    throw std::logic_error("cyclically admissible composition failed train track checks");
  auto ill = comp.illegal();
  if (ill.size() != 1 || ill.front() != Turn(seq.front().x, seq.front().y))
    throw std::logic_error("composition has unexpected illegal turn structure");
  StagedPinpSearch search(seq, caps, comp.gate_partition());
  return search.run();
}

}  // namespace ttwalk
