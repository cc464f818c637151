#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttwalk/matrix.hpp"
#include "ttwalk/nielsen.hpp"
#include "ttwalk/word.hpp"

namespace ttwalk {

// Unordered pair of directions at the rose vertex; degenerate when both agree.
struct Turn {
  Letter a = 0, b = 0;  // normalized: slot(a) <= slot(b)

  Turn() = default;
  Turn(Letter d1, Letter d2) : a(d1), b(d2) {
    if (direction_slot(a) > direction_slot(b)) std::swap(a, b);
  }
  bool degenerate() const noexcept { return a == b; }
  bool contains(Letter d) const noexcept { return a == d || b == d; }
  bool operator==(const Turn& o) const noexcept { return a == o.a && b == o.b; }
  bool operator!=(const Turn& o) const noexcept { return !(*this == o); }
  bool operator<(const Turn& o) const noexcept {
    if (a != o.a) return direction_slot(a) < direction_slot(o.a);
    return direction_slot(b) < direction_slot(o.b);
  }
};

std::string format_turn(const Turn& t);

// Graph on a subset of the 2r directions; edges are nondegenerate turns.
struct WhGraph {
  int rank = 0;
  std::set<Letter> vertices;
  std::set<Turn> edges;

  static WhGraph on_all_directions(int rank);

  int degree(Letter v) const;
  bool connected() const;  // isolated vertices count as disconnection
  bool is_complete() const;
  bool has_cut_vertex() const;
  bool operator==(const WhGraph& o) const {
    return rank == o.rank && vertices == o.vertices && edges == o.edges;
  }
};

// Complete graph on all directions except x, plus the single edge {x, y^{-1}}.
WhGraph upsilon_graph(int rank, Letter x, Letter y);
// If g is upsilon-shaped, returns the (x, y) with g == upsilon_graph(rank,x,y):
// x is the unique degree-1 vertex and y the inverse of its neighbor.
std::optional<std::pair<Letter, Letter>> upsilon_witness(const WhGraph& g);

// Graph self-map of the rose with r petals. Images are stored freely reduced;
// regular() reports that no reduction ever occurred while building the map,
// i.e. the stored words are literal edge paths of a tight graph map.
class RoseMap {
 public:
  RoseMap(int rank, std::vector<Word> images, bool regular = true);
  static RoseMap identity(int rank);
  static RoseMap from_nielsen(const NielsenAuto& t);
  static RoseMap from_sequence(const NielsenSequence& seq);

  int rank() const noexcept { return rank_; }
  bool regular() const noexcept { return regular_; }
  const Word& image(int gen) const;            // gen in 1..rank
  Word image_of_direction(Letter d) const;     // inverse word for negative d
  Word apply_to_word(const Word& w) const;     // image with free reduction
  // First letter of the image of d.
  Letter derivative(Letter d) const;

  std::size_t complexity() const;  // total image length
  bool operator==(const RoseMap& o) const {
    return rank_ == o.rank_ && images_ == o.images_;
  }
  bool operator!=(const RoseMap& o) const { return !(*this == o); }

 private:
  int rank_;
  std::vector<Word> images_;
  bool regular_;
};

// outer after inner; regular iff both are and no junction cancels.
RoseMap compose(const RoseMap& outer, const RoseMap& inner);
RoseMap power(const RoseMap& f, int k);

// Direction map indexed by slot.
std::vector<Letter> derivative_map(const RoseMap& f);

// Turns crossed by the edge images. Requires a regular map.
std::set<Turn> taken_turns(const RoseMap& f);
std::set<Turn> taken_turns(const Word& path);

// Gate partition: fibers of the stabilized iterated direction map.
std::vector<std::vector<Letter>> gates(const RoseMap& f);
std::vector<std::vector<Letter>> gates_of_derivative(const std::vector<Letter>& deriv, int rank);

bool is_legal(const std::vector<std::vector<Letter>>& gate_partition, const Turn& t);
// Nondegenerate same-gate pairs.
std::vector<Turn> illegal_turns(const RoseMap& f);
std::vector<Turn> illegal_turns_of_gates(const std::vector<std::vector<Letter>>& gate_partition);

// Closure of a turn set under the direction map.  Throws std::invalid_argument
// if a turn degenerates (both directions map to the same direction) or the
// closure fails to stabilize within cap rounds.
std::set<Turn> derivative_closure(std::set<Turn> turns, const std::vector<Letter>& deriv,
                                  int rank, int cap = 64);

// True when g is the complete graph on all directions except x, plus the
// single extra edge {x, y^-1}.
bool is_upsilon(const WhGraph& g, Letter x, Letter y);

// Edges = taken turns.
WhGraph limited_whitehead_graph(const RoseMap& f);
// Edges = closure of taken turns under the direction map (all iterates).
// Throws std::invalid_argument if the closure degenerates (map not train track)
// or fails to stabilize within cap rounds.
WhGraph whitehead_graph(const RoseMap& f, int cap = 64);

// Counts of a_i^{+-1} in the image of a_j.
Matrix transition_matrix(const RoseMap& f);

// Regular + every taken turn legal + homotopy equivalence. The homotopy
// equivalence check runs the fold decomposition, so it inherits its
// at-most-one-foldable-turn precondition; non-equivalences throw.
bool is_train_track(const RoseMap& f);

enum class InpStatus { Found, NoInp, Inconclusive };

struct InpWitness {
  int period = 0;
  Word side1, side2;       // legal paths leaving the unique illegal turn
  bool interior1 = false;  // endpoint inside the final edge rather than at the vertex
  bool interior2 = false;
};

struct InpSearchCaps {
  int rounds = 64;        // budget of forcing-tree events
  int side_letters = 256; // per-side length bound
  int period_cap = 8;     // periods tried by the closure check at each state
};

struct InpResult {
  InpStatus status = InpStatus::Inconclusive;
  std::optional<InpWitness> witness;
  int rounds_used = 0;
};

// Searches for periodic indivisible Nielsen paths of an expanding train track
// map with exactly one nondegenerate illegal turn. NoInp is returned only when
// every forcing branch dies; Found only after verify_inp accepts the witness.
InpResult find_inp(const RoseMap& f, const InpSearchCaps& caps = {});

// Tightening check: f^period applied to side1^{-1} side2 reproduces it exactly
// (vertex endpoints) or as a marked prefix with a valid interior fixed point.
bool verify_inp(const RoseMap& f, const InpWitness& w);

// Text format: "rank r" header then "a1 -> a2a1" lines, one per generator.
std::string format_rose_map(const RoseMap& f);
RoseMap parse_rose_map(std::string_view text);

}  // namespace ttwalk
