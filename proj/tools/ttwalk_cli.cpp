#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ttwalk/folds.hpp"
#include "ttwalk/invariants.hpp"
#include "ttwalk/nielsen.hpp"
#include "ttwalk/rational.hpp"
#include "ttwalk/rose_map.hpp"
#include "ttwalk/spectral.hpp"
#include "ttwalk/walk.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ttwalk;

constexpr const char* kVersion = "0.1.0";

// Shared flag bundle; not every command uses every field.
struct Options {
  int rank = 3;
  int n = 100;
  int trials = 10;
  std::uint64_t seed = 0;
  int inp_cap = 32768;
  int whitehead_cap = 64;
  int power_k_cap = 64;
  std::uint64_t budget = 2'000'000;
  bool emit_maps = false;
  std::string out;
  std::string in_file;
};

// The manifest goes to stderr so stdout stays byte-identical across replays.
class ManifestScope {
 public:
  ManifestScope(const std::string& command, const Options& o, json extra = json::object())
      : start_(std::chrono::steady_clock::now()) {
    m_["command"] = command;
    m_["rank"] = o.rank;
    m_["seed"] = o.seed;
    m_["n"] = o.n;
    m_["trials"] = o.trials;
    m_["caps"] = {{"inp_cap", o.inp_cap},
                  {"whitehead_cap", o.whitehead_cap},
                  {"power_k_cap", o.power_k_cap},
                  {"budget", o.budget}};
    for (auto& [k, v] : extra.items()) m_[k] = v;
    m_["version"] = kVersion;
  }
  json& fields() { return m_; }
  ~ManifestScope() {
    auto dt = std::chrono::steady_clock::now() - start_;
    m_["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    std::cerr << m_.dump() << "\n";
  }

 private:
  json m_;
  std::chrono::steady_clock::time_point start_;
};

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

json rational_str(const Rational& q) { return format_rational(q); }

json greport_json(const GReport& g) {
  json j;
  j["rank"] = g.rank;
  j["rotation"] = g.rotation;
  j["prevention_prefix"] = g.prevention_prefix;
  j["single_illegal_turn"] = g.single_illegal_turn;
  j["matrix_primitive"] = g.matrix_primitive;
  j["whitehead_connected"] = g.whitehead_connected;
  j["no_pinp"] = to_string(g.no_pinp);
  j["fully_irreducible_certified"] = g.fully_irreducible_certified;
  j["ageometric_certified"] = g.ageometric_certified;
  j["gate_count"] = g.gate_count;
  j["rotationless_index"] = rational_str(g.rotationless_index);
  j["geometric_index"] = rational_str(g.geometric_index);
  j["index_extremal"] = g.index_extremal;
  j["iw_vertices"] = g.iw_vertices;
  j["iw_complete"] = g.iw_complete;
  j["lone_axis"] = g.lone_axis;
  return j;
}

WalkConfig walk_config(const Options& o) {
  WalkConfig c;
  c.rank = o.rank;
  c.seed = o.seed;
  c.length = o.n;
  c.trials = o.trials;
  return c;
}

// Materializes the composition with a complexity guard; image words grow
// exponentially in the sequence length, so this is only for short prefixes.
RoseMap materialize_guarded(const NielsenSequence& seq, std::size_t cap) {
  RoseMap m = RoseMap::identity(seq.empty() ? 2 : seq.front().rank);
  for (const NielsenAuto& t : seq) {
    m = compose(RoseMap::from_nielsen(t), m);
    if (m.complexity() > cap)
      throw std::invalid_argument(
          "image words exceed the materialization budget; rerun with smaller --n");
  }
  return m;
}

int run_sample(const Options& o) {
  ManifestScope manifest("sample", o);
  std::ofstream file;
  std::ostream& os = open_out(o.out, file);
  WalkConfig cfg = walk_config(o);
  const NielsenSequence& block = prevention_block(o.rank);
  for (int trial = 0; trial < o.trials; ++trial) {
    Trajectory tr = sample_trajectory(cfg, trial);
    json rec;
    rec["trial"] = trial;
    rec["n"] = o.n;
    rec["cyclically_admissible"] = is_cyclically_admissible(tr.items);
    rec["block_occurrences"] = count_occurrences(tr.items, block);
    rec["sequence"] = format_sequence(tr.items);
    if (o.emit_maps) rec["map"] = format_rose_map(materialize_guarded(tr.items, 1u << 20));
    os << rec.dump() << "\n";
  }
  return 0;
}

int run_estimate_en(const Options& o) {
  ManifestScope manifest("estimate-en", o);
  std::ofstream file;
  std::ostream& os = open_out(o.out, file);
  MonteCarloEstimate est = estimate_cyclic_closure(walk_config(o));
  json j;
  j["command"] = "estimate-en";
  j["rank"] = o.rank;
  j["n"] = o.n;
  j["trials"] = est.trials;
  j["hits"] = est.hits;
  j["estimate"] = est.estimate;
  j["stderr"] = est.std_error;
  j["theoretical_limit"] = rational_str(cyclic_closure_limit(o.rank));
  os << j.dump(2) << "\n";
  return 0;
}

int run_property_g(const Options& o) {
  ManifestScope manifest("property-g", o);
  std::ofstream file;
  std::ostream& os = open_out(o.out, file);
  WalkConfig cfg = walk_config(o);
  GCaps caps;
  caps.power_cap = o.power_k_cap;
  caps.whitehead_cap = o.whitehead_cap;
  caps.pinp.rounds = o.inp_cap;
  bool inconclusive = false;
  for (int trial = 0; trial < o.trials; ++trial) {
    Trajectory tr = sample_trajectory(cfg, trial);
    json rec;
    rec["trial"] = trial;
    bool cyc = is_cyclically_admissible(tr.items);
    rec["cyclically_admissible"] = cyc;
    if (cyc) {
      GReport rep = check_property_G(tr.items, caps);
      if (rep.no_pinp == PinpCertificate::Inconclusive) inconclusive = true;
      rec["greport"] = greport_json(rep);
    }
    os << rec.dump() << "\n";
  }
  return inconclusive ? 4 : 0;
}

int run_lyapunov(const Options& o) {
  ManifestScope manifest("lyapunov", o);
  std::ofstream file;
  std::ostream& os = open_out(o.out, file);
  LyapunovEstimate est = estimate_lyapunov(walk_config(o));
  json j;
  j["command"] = "lyapunov";
  j["rank"] = o.rank;
  j["n"] = est.n;
  j["trials"] = est.trials;
  j["ell1_hat"] = est.ell1_hat;
  j["stderr"] = est.std_error;
  os << j.dump(2) << "\n";
  return 0;
}

int run_decompose(const Options& o) {
  ManifestScope manifest("decompose", o, {{"input", o.in_file}});
  std::ofstream file;
  std::ostream& os = open_out(o.out, file);
  std::ifstream in(o.in_file);
  if (!in) throw std::invalid_argument("cannot open input file: " + o.in_file);
  std::stringstream buf;
  buf << in.rdbuf();
  RoseMap f = parse_rose_map(buf.str());

  FoldDecomposition d = fold_decomposition(f);
  RoseMap recomposed = compose(d.perm.to_rose_map(), RoseMap::from_sequence(d.sequence));
  PowerRealization pr = realize_power(f);
  RoseMap powered = RoseMap::from_sequence(pr.sequence);

  json j;
  j["command"] = "decompose";
  j["rank"] = f.rank();
  j["complexity"] = f.complexity();
  j["sequence"] = format_sequence(d.sequence);
  j["perm"] = d.perm.target;
  j["perm_order"] = d.perm.order();
  j["recomposition_ok"] = recomposed == f;
  j["power"] = pr.power;
  j["power_sequence"] = format_sequence(pr.sequence);
  j["power_sequence_cyclically_admissible"] =
      !pr.sequence.empty() && is_cyclically_admissible(pr.sequence);
  j["power_ok"] = powered == power(f, pr.power);
  os << j.dump(2) << "\n";
  return 0;
}

int run_seed_search(const Options& o) {
  ManifestScope manifest("seed-search", o);
  std::ofstream file;
  std::ostream& os = open_out(o.out, file);
  SeedSearchStats stats;
  NielsenSequence s = find_seed_sequence(o.rank, o.budget, &stats);
  os << format_seed_fixture_line(o.rank, s) << "\n";
  manifest.fields()["stats"] = {{"visited", stats.visited}, {"length", stats.length}};
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random walk on elementary automorphisms: sampling, certification, decomposition"};
  app.require_subcommand(1);
  Options o;

  auto add_walk_flags = [&o](CLI::App* sub, int min_rank) {
    sub->add_option("--rank", o.rank, "free group rank")->check(CLI::Range(min_rank, 64));
    sub->add_option("--n", o.n, "walk length")->check(CLI::Range(1, 1 << 20));
    sub->add_option("--trials", o.trials, "number of trajectories")
        ->check(CLI::Range(1, 1 << 30));
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--out", o.out, "output path (default stdout)");
  };

  CLI::App* sample = app.add_subcommand("sample", "sample walk trajectories as JSON lines");
  add_walk_flags(sample, 3);
  sample->add_flag("--emit-maps", o.emit_maps, "include materialized edge images");

  CLI::App* est = app.add_subcommand(
      "estimate-en", "Monte Carlo frequency of cyclically admissible prefixes");
  add_walk_flags(est, 3);

  CLI::App* pg = app.add_subcommand(
      "property-g", "certification reports for cyclically admissible samples");
  add_walk_flags(pg, 3);
  pg->add_option("--inp-cap", o.inp_cap, "periodic-path search budget")
      ->check(CLI::Range(1, 1 << 30));
  pg->add_option("--whitehead-cap", o.whitehead_cap, "turn closure rounds")
      ->check(CLI::Range(1, 1 << 20));
  pg->add_option("--power-k-cap", o.power_k_cap, "primitivity power cap")
      ->check(CLI::Range(1, 1 << 20));

  CLI::App* ly = app.add_subcommand("lyapunov", "top Lyapunov exponent estimate");
  add_walk_flags(ly, 3);

  CLI::App* dec = app.add_subcommand("decompose", "fold decomposition of a rose map file");
  dec->add_option("file", o.in_file, "rose map text file")->required();
  dec->add_option("--out", o.out, "output path (default stdout)");

  CLI::App* seed = app.add_subcommand("seed-search", "find a seed sequence for a rank");
  seed->add_option("--rank", o.rank, "free group rank")->check(CLI::Range(3, 64));
  seed->add_option("--budget", o.budget, "search node budget");
  seed->add_option("--out", o.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sample) return run_sample(o);
    if (*est) return run_estimate_en(o);
    if (*pg) return run_property_g(o);
    if (*ly) return run_lyapunov(o);
    if (*dec) return run_decompose(o);
    if (*seed) return run_seed_search(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
