#include "ttwalk/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ttwalk {

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
  Matrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const BigInt& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n_; ++j) {
        const BigInt& w = rhs.at(k, j);
        if (w != 0) out.at(i, j) += v * w;
      }
    }
  return out;
}

bool Matrix::nonnegative() const {
  for (const BigInt& v : a_)
    if (v < 0) return false;
  return true;
}

bool Matrix::positive() const {
  for (const BigInt& v : a_)
    if (v <= 0) return false;
  return true;
}

BigInt Matrix::min_entry() const {
  BigInt m = a_.front();
  for (const BigInt& v : a_)
    if (v < m) m = v;
  return m;
}

BigInt Matrix::max_entry() const {
  BigInt m = a_.front();
  for (const BigInt& v : a_)
    if (v > m) m = v;
  return m;
}

BigInt Matrix::linf_norm() const {
  BigInt best = 0;
  for (int i = 0; i < n_; ++i) {
    BigInt row = 0;
    for (int j = 0; j < n_; ++j) row += abs(at(i, j));
    if (row > best) best = row;
  }
  return best;
}

// GCC's fortified-memcpy checks misread Boost's inlined limb shift and warn
// about impossible sizes; the operation is a plain right shift.
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overread"
#pragma GCC diagnostic ignored "-Wstringop-overflow"
double log_bigint(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log of non-positive value");
  unsigned bits = boost::multiprecision::msb(v);  // floor(log2 v)
  if (bits <= 900) return std::log(v.convert_to<double>());
  unsigned shift = bits - 64;
  BigInt top = v;
  top >>= shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}
#pragma GCC diagnostic pop

bool is_permutation_matrix(const Matrix& m) {
  int n = m.size();
  for (int i = 0; i < n; ++i) {
    int row_ones = 0;
    for (int j = 0; j < n; ++j) {
      const BigInt& v = m.at(i, j);
      if (v != 0 && v != 1) return false;
      if (v == 1) ++row_ones;
    }
    if (row_ones != 1) return false;
  }
  for (int j = 0; j < n; ++j) {
    int col_ones = 0;
    for (int i = 0; i < n; ++i)
      if (m.at(i, j) == 1) ++col_ones;
    if (col_ones != 1) return false;
  }
  return true;
}

bool is_irreducible(const Matrix& m) {
  int n = m.size();
  Matrix s = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) != 0) s.at(i, j) += 1;
  Matrix acc = Matrix::identity(n);
  for (int k = 0; k < n - 1; ++k) acc = acc * s;
  return acc.positive();
}

bool is_primitive(const Matrix& m, int cap) {
  Matrix acc = m;
  for (int k = 1; k <= cap; ++k) {
    if (acc.positive()) return true;
    acc = acc * m;
  }
  return false;
}

}  // namespace ttwalk
