#include "copos/coeff_bounds.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace copos {

namespace {

Rational pow_q(const Rational& base, unsigned long e) {
  Rational out = 1;
  for (unsigned long i = 0; i < e; ++i) out *= base;
  return out;
}

// If p == c * (sum x_i^2)^k, returns (c, k).
std::optional<std::pair<Rational, int>> as_scaled_square_sum_power(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  const int d = p.degree();
  if (d % 2 != 0) return std::nullopt;
  const int k = d / 2;
  const Rational c = p.coefficient(MultiIndex::unit(p.nvars(), 0, d));
  if (c == 0) return std::nullopt;
  Poly candidate = Poly::square_sum(p.nvars()).pow(static_cast<unsigned>(k)) * c;
  if (candidate == p) return std::make_pair(c, k);
  return std::nullopt;
}

}  // namespace

Rational coeff_norm(const Poly& p) {
  Rational best = 0;
  for (const auto& [a, c] : p.terms()) {
    Rational v = abs(c) / Rational(multinomial(a));
    if (v > best) best = v;
  }
  return best;
}

Rational max_abs_coefficient(const Poly& p) {
  Rational best = 0;
  for (const auto& [a, c] : p.terms())
    if (abs(c) > best) best = abs(c);
  return best;
}

SupBound box_sup(const Poly& p) {
  if (p.is_zero()) return {0, true};
  if (p.degree() <= 1) {
    // |c0 + sum a_i x_i| peaks at a vertex with signs matching a and c0.
    Rational s = 0;
    for (const auto& [a, c] : p.terms()) s += abs(c);
    return {s, true};
  }
  if (auto sq = as_scaled_square_sum_power(p)) {
    return {abs(sq->first) * pow_q(Rational(static_cast<long>(p.nvars())), sq->second), true};
  }
  Rational s = 0;
  for (const auto& [a, c] : p.terms()) s += abs(c);
  return {s, false};
}

SupBound ball_sup_squared(const Poly& p, const Rational& r) {
  if (r <= 0) throw std::invalid_argument("ball_sup_squared: radius must be positive");
  if (p.is_zero()) return {0, true};
  if (p.degree() == 0) {
    Rational c = p.terms().begin()->second;
    return {c * c, true};
  }
  const MultiIndex zero(p.nvars());
  if (p.degree() == 1 && p.coefficient(zero) == 0) {
    Rational norm2 = 0;
    for (const auto& [a, c] : p.terms()) norm2 += c * c;
    return {r * norm2, true};
  }
  if (auto sq = as_scaled_square_sum_power(p)) {
    Rational v = abs(sq->first) * pow_q(r, static_cast<unsigned long>(sq->second));
    return {v * v, true};
  }
  // |x^alpha| <= sqrt(r)^|alpha| on the ball; sqrt(r) <= (r + 1) / 2.
  const Rational root_up = (r + 1) / 2;
  Rational s = 0;
  for (const auto& [a, c] : p.terms()) {
    const auto deg = static_cast<unsigned long>(a.degree());
    s += abs(c) * pow_q(r, deg / 2) * (deg % 2 ? root_up : Rational(1));
  }
  return {s * s, false};
}

Rational korda_bound_rhs(const Poly& p) {
  const int d = std::max(p.degree(), 0);
  return pow_q(3, static_cast<unsigned long>(d + 1)) * box_sup(p).value;
}

Rational scaled_bound_rhs_squared(const Poly& p, const Rational& r) {
  const Rational n(static_cast<long>(p.nvars()));
  if (!(r > 0 && r < n)) throw std::invalid_argument("scaled_bound_rhs: require 0 < r < n");
  const int d = std::max(p.degree(), 0);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
  const Rational lead = pow_q(3, static_cast<unsigned long>(d + 1)) * Rational(fact);
  return lead * lead * pow_q(n / r, static_cast<unsigned long>(d)) * ball_sup_squared(p, r).value;
}

double scaled_bound_rhs(const Poly& p, const Rational& r) {
  return std::sqrt(scaled_bound_rhs_squared(p, r).get_d());
}

}  // namespace copos
