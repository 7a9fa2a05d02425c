#include "copos/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace copos {

namespace {

int checked_degree(const std::vector<int>& exps) {
  int d = 0;
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    d += e;
  }
  return d;
}

// Appends every exponent vector of total degree `d` over variables
// [pos, n), lexicographically descending.
void enumerate_exact(std::size_t n, int d, std::size_t pos, std::vector<int>& cur,
                     std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.emplace_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[pos] = e;
    enumerate_exact(n, d - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> exps)
    : exps_(exps), degree_(checked_degree(exps_)) {}

MultiIndex::MultiIndex(std::vector<int> exps)
    : exps_(std::move(exps)), degree_(checked_degree(exps_)) {}

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t i, int power) {
  std::vector<int> e(nvars, 0);
  e.at(i) = power;
  return MultiIndex(std::move(e));
}

bool MultiIndex::is_even() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e % 2 == 0; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.nvars() != nvars()) throw std::invalid_argument("MultiIndex: length mismatch");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::scaled(int factor) const {
  std::vector<int> e(exps_);
  for (int& v : e) v *= factor;
  return MultiIndex(std::move(e));
}

bool MultiIndex::divisible_by(const MultiIndex& other) const {
  if (other.nvars() != nvars()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (other.exps_[i] > exps_[i]) return false;
  return true;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!divisible_by(other)) throw std::invalid_argument("MultiIndex: subtraction underflow");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
  return MultiIndex(std::move(e));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  if (exps_.size() != other.exps_.size()) return exps_.size() <=> other.exps_.size();
  // Larger exponent vector first within a degree.
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != other.exps_[i]) return other.exps_[i] <=> exps_[i];
  }
  return std::strong_ordering::equal;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

mpz_class multinomial(const MultiIndex& alpha) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(alpha.degree()));
  for (int e : alpha.exponents()) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
    result /= f;
  }
  return result;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

std::vector<MultiIndex> monomial_basis(std::size_t n, int d, bool exact_degree) {
  if (n == 0) throw std::invalid_argument("monomial_basis: n must be >= 1");
  if (d < 0) throw std::invalid_argument("monomial_basis: d must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(n, 0);
  for (int deg = exact_degree ? d : 0; deg <= d; ++deg) enumerate_exact(n, deg, 0, cur, out);
  return out;
}

}  // namespace copos
