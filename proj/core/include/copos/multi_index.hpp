#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace copos {

/// Exponent vector of a monomial x^alpha in a fixed number of variables.
///
/// Ordering is graded lexicographic: lower total degree first, then the
/// exponent vector that is lexicographically larger comes first, so that
/// with two variables the degree-1 block reads x1, x2.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t nvars) : exps_(nvars, 0) {}
  MultiIndex(std::initializer_list<int> exps);
  explicit MultiIndex(std::vector<int> exps);

  static MultiIndex unit(std::size_t nvars, std::size_t i, int power = 1);

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool is_even() const;

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex scaled(int factor) const;

  /// True when every exponent of `other` is <= the matching one here.
  bool divisible_by(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;

  bool operator==(const MultiIndex& other) const { return exps_ == other.exps_; }
  std::strong_ordering operator<=>(const MultiIndex& other) const;

  std::string to_string() const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// |alpha|! / (alpha_1! ... alpha_n!).
mpz_class multinomial(const MultiIndex& alpha);

mpz_class binomial(unsigned long n, unsigned long k);

/// All multi-indices with |alpha| <= d (or == d when exact_degree), in
/// graded lexicographic order.
std::vector<MultiIndex> monomial_basis(std::size_t n, int d, bool exact_degree = false);

}  // namespace copos
