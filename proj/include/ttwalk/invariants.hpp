#pragma once

#include <set>
#include <string>
#include <vector>

#include "ttwalk/composition.hpp"
#include "ttwalk/nielsen.hpp"
#include "ttwalk/rational.hpp"
#include "ttwalk/rose_map.hpp"

namespace ttwalk {

// The combinatorial core the index and Whitehead-graph invariants depend on:
// rank, direction map, and taken turns. Extractable from a materialized map
// or from an incremental composition (exact while the composition is regular).
struct TrackData {
  int rank = 0;
  std::vector<Letter> deriv;  // slot-indexed
  std::set<Turn> turns;
};

TrackData track_data(const RoseMap& f);
TrackData track_data(const NielsenComposition& comp);  // throws if irregular

// How the absence of periodic Nielsen paths was established.
//   Certified:      a cancellation-prevention block occurs, which rules them
//                   out for every cyclically admissible completion.
//   SearchNegative: the staged search exhausted all candidates.
//   Inconclusive:   the search hit a cap.
//   FoundPinp:      the search produced a verified periodic Nielsen path.
enum class PinpCertificate { Certified, SearchNegative, Inconclusive, FoundPinp };

std::string to_string(PinpCertificate c);

// Directions lying on a cycle of the direction map (one per gate when the
// map comes from a cyclically admissible composition).
std::vector<Letter> periodic_directions(const TrackData& td);

// Stable Whitehead graph restricted to the periodic directions: vertices are
// the periodic directions, edges the closed-up taken turns between them.
WhGraph ideal_whitehead_graph(const TrackData& td, int cap = 64);
WhGraph ideal_whitehead_graph(const RoseMap& f, int cap = 64);

struct IndexReport {
  int gate_count = 0;
  std::vector<Rational> index_list;  // one entry per singular point (>= 3 gates)
  Rational rotationless_index{0};
  Rational geometric_index{0};  // = -2 * rotationless_index
  int iw_vertices = 0;
  bool iw_is_complete = false;
};

// Index data for the one-vertex graph. Valid only in the absence of periodic
// Nielsen paths, so the caller must supply how that was established; throws
// std::invalid_argument for Inconclusive or FoundPinp, and std::domain_error
// if the computed index leaves [1 - rank, 0).
IndexReport index_report(const TrackData& td, PinpCertificate no_pinp);
IndexReport index_report(const RoseMap& f, PinpCertificate no_pinp);

struct GCaps {
  int power_cap = 64;      // primitivity: some power of the matrix is positive
  int whitehead_cap = 64;  // turn-closure rounds
  PinpSearchCaps pinp;
};

// Everything check_property_G establishes about the composition of one
// cyclically admissible sequence. Certification flags are conservative: false
// means "not established here", not a disproof.
struct GReport {
  int rank = 0;
  int rotation = 0;  // cyclic rotation applied so a prevention block is a prefix
  bool prevention_prefix = false;

  bool single_illegal_turn = false;    // composition is regular with one illegal turn
  bool matrix_primitive = false;
  bool whitehead_connected = false;
  PinpCertificate no_pinp = PinpCertificate::Inconclusive;

  bool fully_irreducible_certified = false;
  bool ageometric_certified = false;

  // Filled only when no_pinp is Certified or SearchNegative.
  int gate_count = 0;
  Rational rotationless_index{0};
  Rational geometric_index{0};
  bool index_extremal = false;  // rotationless index == 3/2 - rank
  int iw_vertices = 0;
  bool iw_complete = false;     // complete graph on 2*rank - 1 vertices
  bool lone_axis = false;       // index_extremal and no cut vertex in the IW graph
};

// Analyzes the composition of seq without materializing image words: rotates
// a detected prevention block to the front when one occurs cyclically, runs
// the staged periodic-path search otherwise, and derives the certification
// flags from the incremental composition and the product transition matrix.
// Throws std::invalid_argument unless seq is cyclically admissible.
GReport check_property_G(const NielsenSequence& seq, const GCaps& caps = {});

}  // namespace ttwalk
