#include "ttwalk/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "ttwalk/spectral.hpp"

namespace ttwalk {

TrackData track_data(const RoseMap& f) {
  return TrackData{f.rank(), derivative_map(f), taken_turns(f)};
}

TrackData track_data(const NielsenComposition& comp) {
  if (!comp.regular())
    throw std::invalid_argument("composition is irregular: turn data is not certified");
  return TrackData{comp.rank(), comp.derivative_map(), comp.turns()};
}

std::string to_string(PinpCertificate c) {
  switch (c) {
    case PinpCertificate::Certified: return "certified";
    case PinpCertificate::SearchNegative: return "search-negative";
    case PinpCertificate::Inconclusive: return "inconclusive";
    case PinpCertificate::FoundPinp: return "found-pinp";
  }
  return "?";
}

std::vector<Letter> periodic_directions(const TrackData& td) {
  int dirs = 2 * td.rank;
  if (static_cast<int>(td.deriv.size()) != dirs)
    throw std::invalid_argument("direction map has wrong size");
  // After 2r iterations every slot lands on a cycle, and each cycle maps onto
  // itself, so the landing set is exactly the set of periodic directions.
  std::set<Letter> landed;
  for (int s = 0; s < dirs; ++s) {
    Letter d = letter_at_slot(s);
    for (int k = 0; k < dirs; ++k) d = td.deriv[static_cast<std::size_t>(direction_slot(d))];
    landed.insert(d);
  }
  return std::vector<Letter>(landed.begin(), landed.end());
}

WhGraph ideal_whitehead_graph(const TrackData& td, int cap) {
  std::set<Turn> closure = derivative_closure(td.turns, td.deriv, td.rank, cap);
  std::vector<Letter> periodic = periodic_directions(td);
  WhGraph g;
  g.rank = td.rank;
  g.vertices.insert(periodic.begin(), periodic.end());
  for (const Turn& t : closure)
    if (g.vertices.count(t.a) && g.vertices.count(t.b)) g.edges.insert(t);
  return g;
}

WhGraph ideal_whitehead_graph(const RoseMap& f, int cap) {
  return ideal_whitehead_graph(track_data(f), cap);
}

IndexReport index_report(const TrackData& td, PinpCertificate no_pinp) {
  if (no_pinp != PinpCertificate::Certified && no_pinp != PinpCertificate::SearchNegative)
    throw std::invalid_argument(
        "index report needs the absence of periodic Nielsen paths established");
  IndexReport rep;
  auto gp = gates_of_derivative(td.deriv, td.rank);
  rep.gate_count = static_cast<int>(gp.size());
  if (rep.gate_count >= 3)
    rep.index_list.push_back(Rational(2 - rep.gate_count, 2));
  for (const Rational& q : rep.index_list) rep.rotationless_index += q;
  rep.geometric_index = Rational(-2) * rep.rotationless_index;
  if (!(rep.rotationless_index < 0 && rep.rotationless_index >= Rational(1 - td.rank)))
    throw std::domain_error("rotationless index outside [1 - rank, 0)");
  WhGraph iw = ideal_whitehead_graph(td);
  rep.iw_vertices = static_cast<int>(iw.vertices.size());
  rep.iw_is_complete = iw.is_complete();
  return rep;
}

IndexReport index_report(const RoseMap& f, PinpCertificate no_pinp) {
  return index_report(track_data(f), no_pinp);
}

namespace {

// Start index of a cyclic occurrence of block in seq, or -1.
int cyclic_occurrence(const NielsenSequence& seq, const NielsenSequence& block) {
  int n = static_cast<int>(seq.size());
  if (block.empty() || static_cast<int>(block.size()) > n) return -1;
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < block.size() && ok; ++j)
      ok = seq[(static_cast<std::size_t>(i) + j) % static_cast<std::size_t>(n)] == block[j];
    if (ok) return i;
  }
  return -1;
}

}  // namespace

GReport check_property_G(const NielsenSequence& seq, const GCaps& caps) {
  if (seq.empty() || !is_cyclically_admissible(seq))
    throw std::invalid_argument("sequence is not cyclically admissible");
  const int r = seq.front().rank;

  GReport rep;
  rep.rank = r;

  NielsenSequence rotated = seq;
  int rot = cyclic_occurrence(seq, prevention_block(r));
  if (rot >= 0) {
    std::rotate(rotated.begin(), rotated.begin() + rot, rotated.end());
    rep.rotation = rot;
    rep.prevention_prefix = true;
  }

  NielsenComposition comp(r);
  for (const NielsenAuto& t : rotated) comp.push(t);

  rep.single_illegal_turn =
      comp.regular() && comp.turns_legal() && comp.illegal().size() == 1;

  rep.matrix_primitive = is_primitive(product_matrix(rotated), caps.power_cap);

  if (comp.regular()) {
    try {
      WhGraph g = WhGraph::on_all_directions(r);
      g.edges = derivative_closure(comp.turns(), comp.derivative_map(), r, caps.whitehead_cap);
      rep.whitehead_connected = g.connected();
    } catch (const std::invalid_argument&) {
      rep.whitehead_connected = false;
    }
  }

  if (rep.prevention_prefix) {
    rep.no_pinp = PinpCertificate::Certified;
  } else {
    PinpResult pr = search_pinp(rotated, caps.pinp);
    switch (pr.status) {
      case InpStatus::NoInp: rep.no_pinp = PinpCertificate::SearchNegative; break;
      case InpStatus::Found: rep.no_pinp = PinpCertificate::FoundPinp; break;
      case InpStatus::Inconclusive: rep.no_pinp = PinpCertificate::Inconclusive; break;
    }
  }

  const bool pinp_free = rep.no_pinp == PinpCertificate::Certified ||
                         rep.no_pinp == PinpCertificate::SearchNegative;
  rep.fully_irreducible_certified = pinp_free && rep.single_illegal_turn &&
                                    rep.matrix_primitive && rep.whitehead_connected;
  rep.ageometric_certified = rep.fully_irreducible_certified && pinp_free;

  if (pinp_free && comp.regular()) {
    TrackData td = track_data(comp);
    IndexReport ir = index_report(td, rep.no_pinp);
    rep.gate_count = ir.gate_count;
    rep.rotationless_index = ir.rotationless_index;
    rep.geometric_index = ir.geometric_index;
    rep.index_extremal = ir.rotationless_index == Rational(3 - 2 * r, 2);
    rep.iw_vertices = ir.iw_vertices;
    rep.iw_complete = ir.iw_is_complete && ir.iw_vertices == 2 * r - 1;
    if (rep.index_extremal) {
      WhGraph iw = ideal_whitehead_graph(td, caps.whitehead_cap);
      rep.lone_axis = !iw.has_cut_vertex();
    }
  }
  return rep;
}

}  // namespace ttwalk
