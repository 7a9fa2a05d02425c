#include "copos/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace copos {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(MultiIndex(nvars), c);
  return p;
}

Poly Poly::monomial(const MultiIndex& alpha, const Rational& c) {
  Poly p(alpha.nvars());
  p.add_term(alpha, c);
  return p;
}

Poly Poly::linear_sum(std::size_t nvars) {
  Poly p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) p.add_term(MultiIndex::unit(nvars, i), 1);
  return p;
}

Poly Poly::square_sum(std::size_t nvars) {
  Poly p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) p.add_term(MultiIndex::unit(nvars, i, 2), 1);
  return p;
}

int Poly::degree() const {
  // Graded order puts the highest degree last.
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

Rational Poly::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.nvars() != nvars_) throw std::invalid_argument("Poly: monomial has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Rational Poly::evaluate(std::span<const Rational> x) const {
  if (x.size() != nvars_) throw std::invalid_argument("Poly::evaluate: point has wrong dimension");
  Rational sum = 0;
  for (const auto& [a, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int e = 0; e < a[i]; ++e) t *= x[i];
    }
    sum += t;
  }
  return sum;
}

double Poly::evaluate(std::span<const double> x) const {
  if (x.size() != nvars_) throw std::invalid_argument("Poly::evaluate: point has wrong dimension");
  double sum = 0.0;
  for (const auto& [a, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i) t *= std::pow(x[i], a[i]);
    sum += t;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.get_str() + ")";
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (a[i] == 0) continue;
      s += "*x" + std::to_string(i + 1);
      if (a[i] > 1) s += "^" + std::to_string(a[i]);
    }
  }
  return s;
}

}  // namespace copos
