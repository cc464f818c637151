#include "ttwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ttwalk/rng.hpp"

namespace ttwalk {

Matrix elementary_matrix(const NielsenAuto& t) {
  Matrix m = Matrix::identity(t.rank);
  m.at(letter_index(t.y) - 1, letter_index(t.x) - 1) += 1;
  return m;
}

Matrix product_matrix(const NielsenSequence& seq) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  Matrix acc = elementary_matrix(seq.front());
  for (std::size_t i = 1; i < seq.size(); ++i) acc = elementary_matrix(seq[i]) * acc;
  return acc;
}

double operator_norm(const Matrix& m) {
  BigInt norm = m.linf_norm();
  if (norm == 0) return 0.0;
  double lg = log_bigint(norm);
  if (lg > 700.0) return std::numeric_limits<double>::infinity();
  return std::exp(lg);
}

namespace {

// Fraction-free Gaussian elimination; exact.
BigInt det_bareiss(std::vector<std::vector<BigInt>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        auto& aij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        aij = (aij * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
               a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                   a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
              prev;
      }
    prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  return sign * a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

// rho(M) < c / 2^p, decided exactly: cI - 2^p M must have all leading
// principal minors positive (nonsingular M-matrix test).
bool radius_below(const Matrix& m, const BigInt& c, int p) {
  int n = m.size();
  BigInt scale = BigInt(1) << p;
  for (int j = 1; j <= n; ++j) {
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(j),
                                       std::vector<BigInt>(static_cast<std::size_t>(j)));
    for (int r = 0; r < j; ++r)
      for (int s = 0; s < j; ++s) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = -scale * m.at(r, s);
        if (r == s) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] += c;
      }
    if (det_bareiss(std::move(a)) <= 0) return false;
  }
  return true;
}

bool is_nilpotent(const Matrix& m) {
  Matrix acc = m;
  for (int k = 1; k < m.size(); ++k) acc = acc * m;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (acc.at(i, j) != 0) return false;
  return true;
}

constexpr int kDyadicBits = 40;

}  // namespace

double log_spectral_radius_exact(const Matrix& m, double rel_tol) {
  if (!m.nonnegative()) throw std::invalid_argument("spectral radius needs a nonnegative matrix");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  rel_tol = std::max(rel_tol, 1e-15);
  BigInt norm = m.linf_norm();
  if (norm == 0 || is_nilpotent(m))
    throw std::domain_error("spectral radius is zero; log undefined");

  // A nonzero non-nilpotent nonnegative integer matrix has a cycle, so rho >= 1.
  // The grid must resolve the tolerance at rho = 1 or a one-unit bracket could
  // stall the bisection below.
  int bits = kDyadicBits;
  while (std::ldexp(rel_tol / 4.0, bits) < 1.0) ++bits;

  BigInt lo = BigInt(1) << bits;
  BigInt hi = (norm + 1) << bits;
  BigInt inv_tol(static_cast<long long>(2.0 / rel_tol));
  while (hi - lo > 1 && (hi - lo) * inv_tol > lo) {
    BigInt mid = (lo + hi) / 2;
    if (radius_below(m, mid, bits)) hi = mid;
    else lo = mid;
  }
  return log_bigint(lo + (hi - lo) / 2) - bits * std::log(2.0);
}

double spectral_radius_exact(const Matrix& m, double rel_tol) {
  if (!m.nonnegative()) throw std::invalid_argument("spectral radius needs a nonnegative matrix");
  if (m.linf_norm() == 0 || is_nilpotent(m)) return 0.0;
  return std::exp(log_spectral_radius_exact(m, rel_tol));
}

double spectral_radius(const Matrix& m, double tol, int iter_cap) {
  if (!m.nonnegative()) throw std::invalid_argument("spectral radius needs a nonnegative matrix");
  int n = m.size();
  BigInt maxe = m.max_entry();
  if (maxe == 0) return 0.0;

  long shift = 0;
  if (maxe > (BigInt(1) << 500))
    shift = static_cast<long>(boost::multiprecision::msb(maxe)) - 500;
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (m.at(i, j) >> shift).convert_to<double>();

  std::vector<double> v(static_cast<std::size_t>(n), 1.0), w(static_cast<std::size_t>(n));
  const int window = 32;
  std::vector<double> log_growth;
  log_growth.reserve(static_cast<std::size_t>(iter_cap));
  double prev_est = -1.0;
  int stable = 0;
  for (int it = 0; it < iter_cap; ++it) {
    double g = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j)
        s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             v[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = s;
      g = std::max(g, s);
    }
    if (g == 0.0) return 0.0;  // nilpotent action on the positive cone
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / g;
    log_growth.push_back(std::log(g));
    if (static_cast<int>(log_growth.size()) >= window) {
      double s = 0.0;
      for (int k = 0; k < window; ++k) s += log_growth[log_growth.size() - 1 - static_cast<std::size_t>(k)];
      double est = s / window;
      if (prev_est >= 0.0 && std::abs(est - prev_est) <= tol * std::max(1.0, std::abs(est))) {
        if (++stable >= 3)
          return std::exp(est + static_cast<double>(shift) * std::log(2.0));
      } else {
        stable = 0;
      }
      prev_est = est;
    }
  }
  double best = prev_est >= 0.0 ? std::exp(prev_est + static_cast<double>(shift) * std::log(2.0))
                                : 0.0;
  throw ConvergenceError("power iteration did not converge", best);
}

bool tao_bounds_check(const Matrix& m) {
  if (m.min_entry() < 1)
    throw std::invalid_argument("sandwich bound needs every entry >= 1");
  double ll = log_spectral_radius_exact(m, 1e-12);
  double ln = log_bigint(m.linf_norm());
  double slack = 1e-9;
  return ll <= ln + slack && ln <= std::log(static_cast<double>(m.size())) + 2.0 * ll + slack;
}

double stretch_factor(const RoseMap& f) {
  Matrix m = transition_matrix(f);
  if (!is_irreducible(m))
    throw std::invalid_argument("stretch factor needs an irreducible transition matrix");
  if (is_permutation_matrix(m))
    throw std::invalid_argument("map is not expanding: transition matrix is a permutation");
  return spectral_radius_exact(m, 1e-12);
}

double log_norm_process(const NielsenSequence& seq, int n) {
  if (n < 0 || n > static_cast<int>(seq.size()))
    throw std::invalid_argument("prefix length out of range");
  if (n == 0) return 0.0;
  NielsenSequence prefix(seq.begin(), seq.begin() + n);
  return log_bigint(product_matrix(prefix).linf_norm());
}

std::vector<double> log_norm_prefixes(const NielsenSequence& seq) {
  std::vector<double> out;
  out.reserve(seq.size());
  Matrix acc = Matrix::identity(seq.empty() ? 1 : seq.front().rank);
  for (const NielsenAuto& t : seq) {
    acc = elementary_matrix(t) * acc;
    out.push_back(log_bigint(acc.linf_norm()));
  }
  return out;
}

LyapunovEstimate estimate_lyapunov(const WalkConfig& config) {
  LyapunovEstimate out;
  out.n = config.length;
  out.trials = config.trials;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(config.trials));
  for (int t = 0; t < config.trials; ++t) {
    Trajectory traj = sample_trajectory(config, t);
    values.push_back(log_norm_process(traj.items, config.length) /
                     static_cast<double>(config.length));
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  out.ell1_hat = mean;
  if (values.size() > 1) {
    var /= static_cast<double>(values.size() - 1);
    out.std_error = std::sqrt(var / static_cast<double>(values.size()));
  }
  return out;
}

double lyapunov_lower_bound(double alpha_hat, int block_len) {
  if (block_len < 1) throw std::invalid_argument("block length must be positive");
  if (alpha_hat < 0.0 || alpha_hat > 1.0)
    throw std::invalid_argument("occurrence rate must lie in [0,1]");
  return alpha_hat / (2.0 * static_cast<double>(block_len)) * std::log(2.0);
}

std::vector<GrowthBandRow> growth_band_check(const NielsenSequence& seq,
                                             const std::vector<int>& indices, double ell1_hat,
                                             double slack) {
  std::vector<GrowthBandRow> out;
  double lower = (1.0 - slack) * ell1_hat / 2.0;
  double upper = (1.0 + slack) * ell1_hat;
  for (int n : indices) {
    if (n < 1 || n > static_cast<int>(seq.size()))
      throw std::invalid_argument("prefix length out of range");
    NielsenSequence prefix(seq.begin(), seq.begin() + n);
    if (!is_cyclically_admissible(prefix))
      throw std::invalid_argument("prefix is not cyclically admissible");
    GrowthBandRow row;
    row.n = n;
    row.log_lambda_over_n =
        log_spectral_radius_exact(product_matrix(prefix), 1e-10) / static_cast<double>(n);
    row.in_band = row.log_lambda_over_n >= lower && row.log_lambda_over_n <= upper;
    out.push_back(row);
  }
  return out;
}

double word_length_lower_bound(const RoseMap& f, double qa) {
  if (!(qa > 1.0)) throw std::invalid_argument("per-letter stretch must exceed 1");
  return std::log(stretch_factor(f)) / std::log(qa);
}

}  // namespace ttwalk
