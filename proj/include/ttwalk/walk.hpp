#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ttwalk/rational.hpp"

#include "ttwalk/nielsen.hpp"

namespace ttwalk {


struct WalkConfig {
  int rank = 3;
  std::uint64_t seed = 0;
  int length = 1;
  int trials = 1;
};

struct Trajectory {
  NielsenSequence items;
  WalkConfig config;
  int trial_index = 0;
};

// 1/(4r-6) for admissible pairs, 0 otherwise
Rational transition_prob(const NielsenAuto& a, const NielsenAuto& b);

// Exact check that the uniform distribution is stationary and that the
// admissibility digraph is strongly connected and aperiodic.
bool stationary_check(int rank);

// First step uniform on the generating set, each next step uniform on the
// admissible successors; deterministic given (config.seed, trial_index).
Trajectory sample_trajectory(const WalkConfig& config, int trial_index);

// Limit of the probability that a length-n prefix closes up cyclically:
// (2r-3) / (2r(r-1)).
Rational cyclic_closure_limit(int rank);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  long long hits = 0;
  long long trials = 0;
};

// Frequency of cyclic admissibility over config.trials sampled trajectories.
MonteCarloEstimate estimate_cyclic_closure(const WalkConfig& config);

// Occurrences of block as a contiguous subsequence.
int count_occurrences(const NielsenSequence& seq, const NielsenSequence& block);

// Length of the shortest prefix ending with block, if any.
std::optional<int> first_prefix_ending_with(const NielsenSequence& seq,
                                            const NielsenSequence& block);

}  // namespace ttwalk
