#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "copos/multi_index.hpp"
#include "copos/rational.hpp"

namespace copos {

/// Sparse polynomial with exact rational coefficients. Zero coefficients
/// are never stored.
class Poly {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly monomial(const MultiIndex& alpha, const Rational& c = 1);
  /// x_1 + ... + x_n
  static Poly linear_sum(std::size_t nvars);
  /// x_1^2 + ... + x_n^2
  static Poly square_sum(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  int degree() const;

  Rational coefficient(const MultiIndex& alpha) const;
  void add_term(const MultiIndex& alpha, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly pow(unsigned k) const;

  bool operator==(const Poly& other) const = default;

  Rational evaluate(std::span<const Rational> x) const;
  double evaluate(std::span<const double> x) const;

  std::string to_string() const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace copos
