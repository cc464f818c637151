#include "ttwalk/folds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ttwalk {

PermAuto::PermAuto(int rank_, std::vector<Letter> target_)
    : rank(rank_), target(std::move(target_)) {
  if (rank < 1 || static_cast<int>(target.size()) != rank)
    throw std::invalid_argument("permutation needs one target per generator");
  std::vector<bool> hit(static_cast<std::size_t>(rank), false);
  for (Letter l : target) {
    if (!valid_letter(l, rank)) throw std::invalid_argument("permutation target out of range");
    std::size_t i = static_cast<std::size_t>(letter_index(l) - 1);
    if (hit[i]) throw std::invalid_argument("permutation target repeats a generator");
    hit[i] = true;
  }
}

PermAuto PermAuto::identity(int rank) {
  std::vector<Letter> t(static_cast<std::size_t>(rank));
  std::iota(t.begin(), t.end(), 1);
  return PermAuto(rank, std::move(t));
}

Letter PermAuto::apply(Letter d) const {
  if (!valid_letter(d, rank)) throw std::invalid_argument("direction out of range");
  Letter t = target[static_cast<std::size_t>(letter_index(d) - 1)];
  return d > 0 ? t : -t;
}

Word PermAuto::apply(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back(apply(l));
  return Word(std::move(out), rank);
}

PermAuto PermAuto::inverse() const {
  std::vector<Letter> t(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    Letter im = target[static_cast<std::size_t>(i - 1)];
    t[static_cast<std::size_t>(letter_index(im) - 1)] = im > 0 ? i : -i;
  }
  return PermAuto(rank, std::move(t));
}

PermAuto PermAuto::after(const PermAuto& inner) const {
  if (rank != inner.rank) throw std::invalid_argument("rank mismatch");
  std::vector<Letter> t(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) t[static_cast<std::size_t>(i - 1)] = apply(inner.apply(i));
  return PermAuto(rank, std::move(t));
}

int PermAuto::order() const {
  std::vector<bool> seen(static_cast<std::size_t>(rank), false);
  long long ord = 1;
  for (int i = 1; i <= rank; ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    int len = 0;
    bool flip = false;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j - 1)] = true;
      Letter im = target[static_cast<std::size_t>(j - 1)];
      if (im < 0) flip = !flip;
      j = letter_index(im);
      ++len;
    } while (j != i);
    long long period = flip ? 2LL * len : len;
    ord = std::lcm(ord, period);
  }
  if (ord > (1LL << 30)) throw std::overflow_error("permutation order overflow");
  return static_cast<int>(ord);
}

bool PermAuto::is_identity() const {
  for (int i = 1; i <= rank; ++i)
    if (target[static_cast<std::size_t>(i - 1)] != i) return false;
  return true;
}

RoseMap PermAuto::to_rose_map() const {
  std::vector<Word> ims;
  for (Letter l : target) ims.emplace_back(std::vector<Letter>{l}, rank);
  return RoseMap(rank, std::move(ims));
}

NielsenAuto conjugate(const PermAuto& psi, const NielsenAuto& t) {
  if (psi.rank != t.rank) throw std::invalid_argument("rank mismatch");
  return NielsenAuto(psi.apply(t.x), psi.apply(t.y), t.rank);
}

NielsenSequence conjugate(const PermAuto& psi, const NielsenSequence& seq) {
  NielsenSequence out;
  out.reserve(seq.size());
  for (const NielsenAuto& t : seq) out.push_back(conjugate(psi, t));
  return out;
}

std::vector<Turn> foldable_turns(const RoseMap& f) {
  std::vector<Turn> out;
  int dirs = 2 * f.rank();
  for (int s = 0; s < dirs; ++s)
    for (int u = s + 1; u < dirs; ++u) {
      Letter a = letter_at_slot(s), b = letter_at_slot(u);
      if (f.derivative(a) == f.derivative(b)) out.emplace_back(a, b);
    }
  return out;
}

namespace {

PermAuto extract_permutation(const RoseMap& f) {
  std::vector<Letter> t;
  for (int i = 1; i <= f.rank(); ++i) {
    if (f.image(i).size() != 1)
      throw std::logic_error("permutation extraction needs single-letter images");
    t.push_back(f.image(i).at(0));
  }
  try {
    return PermAuto(f.rank(), std::move(t));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("map is not a homotopy equivalence: residue not a permutation");
  }
}

}  // namespace

FoldDecomposition fold_decomposition(const RoseMap& f) {
  if (!f.regular()) throw std::invalid_argument("fold decomposition needs a regular map");
  int r = f.rank();
  RoseMap cur = f;
  NielsenSequence seq;

  while (cur.complexity() > static_cast<std::size_t>(r)) {
    std::vector<Turn> pairs = foldable_turns(cur);
    if (pairs.empty())
      throw std::invalid_argument("map admits no fold: not a homotopy equivalence of the rose");
    if (pairs.size() > 1) throw std::invalid_argument("ambiguous fold: multiple foldable turns");
    Turn t = pairs.front();
    if (t.a == -t.b)
      throw std::invalid_argument("fold identifies an edge with its inverse");

    Word p1 = cur.image_of_direction(t.a);
    Word p2 = cur.image_of_direction(t.b);
    // Peel the shorter image off the longer one.
    Letter d1 = t.a, d2 = t.b;
    if (p1.size() > p2.size()) {
      std::swap(d1, d2);
      std::swap(p1, p2);
    }
    if (p1.size() == p2.size())
      throw std::invalid_argument("complete fold: images coincide, map is not injective on rank");
    if (!std::equal(p1.letters().begin(), p1.letters().end(), p2.letters().begin()))
      throw std::invalid_argument("partial fold: images diverge inside an edge");

    // cur = cur' o [d2 -> d1 d2], where cur' strips p1 off the front of p2.
    std::vector<Letter> rest(p2.letters().begin() + static_cast<long>(p1.size()),
                             p2.letters().end());
    Word q(std::move(rest), r);
    std::vector<Word> ims;
    for (int i = 1; i <= r; ++i) ims.push_back(cur.image(i));
    if (d2 > 0)
      ims[static_cast<std::size_t>(d2 - 1)] = q;
    else
      ims[static_cast<std::size_t>(-d2 - 1)] = q.inverted();
    seq.emplace_back(d2, d1, r);
    cur = RoseMap(r, std::move(ims));
  }

  // Peeling strips the innermost map first, so seq is already in application
  // order: f = perm o theta_k o ... o theta_1 with seq = (theta_1 ... theta_k).
  return FoldDecomposition{std::move(seq), extract_permutation(cur)};
}

PowerRealization realize_power(const RoseMap& f) {
  FoldDecomposition d = fold_decomposition(f);
  int p = d.perm.order();
  PowerRealization out;
  out.power = p;
  PermAuto conj = PermAuto::identity(f.rank());
  PermAuto psi_inv = d.perm.inverse();
  for (int j = 0; j < p; ++j) {
    NielsenSequence block = conjugate(conj, d.sequence);
    out.sequence.insert(out.sequence.end(), block.begin(), block.end());
    conj = psi_inv.after(conj);
  }
  return out;
}

}  // namespace ttwalk
