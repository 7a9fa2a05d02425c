#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "copos/rational.hpp"

namespace copos {

/// Dense symmetric matrix with exact rational entries.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), data_(n * n, Rational(0)) {}
  /// Throws std::invalid_argument if `rows` is not square and symmetric.
  explicit SymMatrix(const std::vector<std::vector<Rational>>& rows);

  static SymMatrix identity(std::size_t n);
  static SymMatrix ones(std::size_t n);
  static SymMatrix from_eigen(const Eigen::MatrixXd& m);
  /// Block-diagonal direct sum.
  static SymMatrix direct_sum(const SymMatrix& a, const SymMatrix& b);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rational& v);

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  SymMatrix& operator*=(const Rational& c);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(SymMatrix a, const Rational& c) { return a *= c; }
  friend SymMatrix operator*(const Rational& c, SymMatrix a) { return a *= c; }
  bool operator==(const SymMatrix& o) const = default;

  Eigen::MatrixXd to_eigen() const;
  Rational max_abs() const;
  bool is_entrywise_nonnegative() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Exact test by symmetric Gaussian elimination over the rationals.
bool is_positive_definite(const SymMatrix& m);
/// Exact PSD test (pivoting on the largest remaining diagonal).
bool is_positive_semidefinite(const SymMatrix& m);

}  // namespace copos
