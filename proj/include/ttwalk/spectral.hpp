#pragma once

#include <stdexcept>
#include <vector>

#include "ttwalk/matrix.hpp"
#include "ttwalk/nielsen.hpp"
#include "ttwalk/rose_map.hpp"
#include "ttwalk/walk.hpp"

namespace ttwalk {

// Identity plus a single off-diagonal 1 at (|y|, |x|).
Matrix elementary_matrix(const NielsenAuto& t);

// Ordered product of elementary matrices, newest leftmost.
Matrix product_matrix(const NielsenSequence& seq);

// L-infinity operator norm as a double (exact value lives in Matrix::linf_norm).
double operator_norm(const Matrix& m);

struct ConvergenceError : std::runtime_error {
  double best;
  ConvergenceError(const std::string& what, double best_) : std::runtime_error(what), best(best_) {}
};

// Power iteration with geometric-mean growth over a window (damps periodic
// classes); throws ConvergenceError carrying the best estimate on cap.
double spectral_radius(const Matrix& m, double tol = 1e-10, int iter_cap = 100000);

// Exact dyadic bisection on the predicate rho(M) < x, decided by leading
// principal minors of xI - M in integer arithmetic. Independent of the power
// iteration; correct for reducible and periodic matrices too.
double spectral_radius_exact(const Matrix& m, double rel_tol = 1e-10);

// log of the spectral radius, stable for matrices with huge entries.
double log_spectral_radius_exact(const Matrix& m, double rel_tol = 1e-10);

// lambda(M) <= ||M|| <= r * lambda(M)^2 for entrywise >= 1 matrices.
bool tao_bounds_check(const Matrix& m);

// Spectral radius of the transition matrix of an expanding irreducible map.
double stretch_factor(const RoseMap& f);

// X_n = log ||M(theta_n) ... M(theta_1)||, X_0 = 0.
double log_norm_process(const NielsenSequence& seq, int n);
std::vector<double> log_norm_prefixes(const NielsenSequence& seq);  // X_1..X_n

struct LyapunovEstimate {
  double ell1_hat = 0.0;
  int n = 0;
  int trials = 0;
  double std_error = 0.0;
};

// Mean of X_n / n over independent trajectories.
LyapunovEstimate estimate_lyapunov(const WalkConfig& config);

// (alpha_hat / (2 * block_len)) * ln 2: certified lower bound for the exponent
// given an occurrence rate of a norm-doubling block.
double lyapunov_lower_bound(double alpha_hat, int block_len);

struct GrowthBandRow {
  int n = 0;
  double log_lambda_over_n = 0.0;
  bool in_band = false;
};

// (1/n) log lambda of prefix products against [0.9 * ell1/2, 1.1 * ell1].
std::vector<GrowthBandRow> growth_band_check(const NielsenSequence& seq,
                                             const std::vector<int>& indices, double ell1_hat,
                                             double slack = 0.1);

// log(stretch_factor(f)) / log(qa): lower bound on word length in any
// generating set of per-letter stretch at most qa.
double word_length_lower_bound(const RoseMap& f, double qa);

}  // namespace ttwalk
