#include "ttwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "ttwalk/rng.hpp"

namespace ttwalk {

Rational transition_prob(const NielsenAuto& a, const NielsenAuto& b) {
  if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
  if (!is_admissible_pair(a, b)) return Rational(0);
  return Rational(1, 4LL * a.rank - 6);
}

bool stationary_check(int rank) {
  std::vector<NielsenAuto> s = enumerate_generators(rank);
  std::map<NielsenAuto, int> id;
  for (std::size_t i = 0; i < s.size(); ++i) id.emplace(s[i], static_cast<int>(i));

  std::vector<std::vector<int>> out(s.size()), in(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const NielsenAuto& t : successors(s[i])) {
      int j = id.at(t);
      out[i].push_back(j);
      in[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
    }

  // Uniform stationarity: column sums of the transition kernel must be 1.
  Rational uniform(1, static_cast<long long>(s.size()));
  for (std::size_t j = 0; j < s.size(); ++j) {
    Rational col(0);
    for (int i : in[j]) col += uniform * transition_prob(s[static_cast<std::size_t>(i)], s[j]);
    if (col != uniform) return false;
  }
  // Row sums must be exactly 1.
  for (std::size_t i = 0; i < s.size(); ++i) {
    Rational row(0);
    for (int j : out[i]) row += transition_prob(s[i], s[static_cast<std::size_t>(j)]);
    if (row != Rational(1)) return false;
  }

  // Aperiodicity: every state carries a self-loop.
  for (const NielsenAuto& t : s)
    if (!is_admissible_pair(t, t)) return false;

  // Strong connectivity: forward and backward reachability from state 0.
  auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(s.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++count;
          q.push(w);
        }
    }
    return count == s.size();
  };
  return reaches_all(out) && reaches_all(in);
}

Trajectory sample_trajectory(const WalkConfig& config, int trial_index) {
  if (config.rank < 3) throw std::invalid_argument("walk needs rank >= 3");
  if (config.length < 1) throw std::invalid_argument("walk needs length >= 1");
  std::vector<NielsenAuto> s = enumerate_generators(config.rank);
  SplitMix64 rng(substream(config.seed, static_cast<std::uint64_t>(trial_index)));

  Trajectory traj;
  traj.config = config;
  traj.trial_index = trial_index;
  traj.items.reserve(static_cast<std::size_t>(config.length));
  NielsenAuto cur = s[rng.below(s.size())];
  traj.items.push_back(cur);
  for (int k = 1; k < config.length; ++k) {
    std::vector<NielsenAuto> succ = successors(cur);
    cur = succ[rng.below(succ.size())];
    traj.items.push_back(cur);
  }
  return traj;
}

Rational cyclic_closure_limit(int rank) {
  if (rank < 2) throw std::invalid_argument("rank out of range");
  return Rational(2LL * rank - 3, 2LL * rank * (rank - 1));
}

MonteCarloEstimate estimate_cyclic_closure(const WalkConfig& config) {
  MonteCarloEstimate out;
  out.trials = config.trials;
  for (int t = 0; t < config.trials; ++t) {
    Trajectory traj = sample_trajectory(config, t);
    if (is_cyclically_admissible(traj.items)) ++out.hits;
  }
  double p = static_cast<double>(out.hits) / static_cast<double>(out.trials);
  out.estimate = p;
  out.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(out.trials));
  return out;
}

int count_occurrences(const NielsenSequence& seq, const NielsenSequence& block) {
  if (block.empty()) throw std::invalid_argument("empty block");
  if (block.size() > seq.size()) return 0;
  int count = 0;
  for (std::size_t i = 0; i + block.size() <= seq.size(); ++i)
    if (std::equal(block.begin(), block.end(), seq.begin() + static_cast<long>(i))) ++count;
  return count;
}

std::optional<int> first_prefix_ending_with(const NielsenSequence& seq,
                                            const NielsenSequence& block) {
  if (block.empty()) throw std::invalid_argument("empty block");
  for (std::size_t m = block.size(); m <= seq.size(); ++m)
    if (std::equal(block.begin(), block.end(), seq.begin() + static_cast<long>(m - block.size())))
      return static_cast<int>(m);
  return std::nullopt;
}

}  // namespace ttwalk
