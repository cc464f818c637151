#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace ttwalk {

using BigInt = boost::multiprecision::cpp_int;

// Dense square matrix with exact integer entries. Products of the walk's
// elementary matrices stay exact at any length.
class Matrix {
 public:
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
  static Matrix identity(int n);

  int size() const noexcept { return n_; }
  BigInt& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
  const BigInt& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }

  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& o) const noexcept { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const noexcept { return !(*this == o); }

  bool nonnegative() const;
  bool positive() const;
  BigInt min_entry() const;
  BigInt max_entry() const;
  // Max absolute row sum.
  BigInt linf_norm() const;

 private:
  int n_;
  std::vector<BigInt> a_;
};

// Natural log of a positive big integer, exact to double precision at any size.
double log_bigint(const BigInt& v);

bool is_permutation_matrix(const Matrix& m);
// (I + M)^{n-1} entrywise positive.
bool is_irreducible(const Matrix& m);
// M^k entrywise positive for some k <= cap (k need not be minimal on return).
bool is_primitive(const Matrix& m, int cap);

}  // namespace ttwalk
