#include "copos/sym_matrix.hpp"

#include <stdexcept>
#include <string>

namespace copos {

SymMatrix::SymMatrix(const std::vector<std::vector<Rational>>& rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("matrix is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  for (auto& v : data_) v.canonicalize();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i))
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SymMatrix SymMatrix::ones(std::size_t n) {
  SymMatrix m(n);
  for (auto& v : m.data_) v = 1;
  return m;
}

SymMatrix SymMatrix::from_eigen(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix is not square");
  const auto n = static_cast<std::size_t>(a.rows());
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (a(i, j) != a(j, i)) throw std::invalid_argument("matrix is not symmetric");
      m.set(i, j, rational_from_double(a(i, j)));
    }
  return m;
}

SymMatrix SymMatrix::direct_sum(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix m(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) m.set(i, j, a(i, j));
  const std::size_t off = a.size();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) m.set(off + i, off + j, b(i, j));
  return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  Rational& a = data_.at(i * n_ + j);
  a = v;
  a.canonicalize();
  data_.at(j * n_ + i) = a;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymMatrix: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymMatrix: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(const Rational& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

Eigen::MatrixXd SymMatrix::to_eigen() const {
  Eigen::MatrixXd m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).get_d();
  return m;
}

Rational SymMatrix::max_abs() const {
  Rational best = 0;
  for (const auto& v : data_)
    if (abs(v) > best) best = abs(v);
  return best;
}

bool SymMatrix::is_entrywise_nonnegative() const {
  for (const auto& v : data_)
    if (v < 0) return false;
  return true;
}

namespace {

std::vector<Rational> dense_copy(const SymMatrix& m) {
  std::vector<Rational> a(m.size() * m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a[i * m.size() + j] = m(i, j);
  return a;
}

}  // namespace

bool is_positive_definite(const SymMatrix& m) {
  const std::size_t n = m.size();
  auto a = dense_copy(m);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational piv = a[k * n + k];
    if (piv <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i * n + k] == 0) continue;
      const Rational f = a[i * n + k] / piv;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return true;
}

bool is_positive_semidefinite(const SymMatrix& m) {
  const std::size_t n = m.size();
  auto a = dense_copy(m);
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && (k == n || a[i * n + i] > a[k * n + k])) k = i;
    const Rational piv = a[k * n + k];
    if (piv < 0) return false;
    if (piv == 0) {
      // Every remaining diagonal is zero, so the rest must vanish.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a[i * n + j] != 0) return false;
      return true;
    }
    done[k] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i * n + k] == 0) continue;
      const Rational f = a[i * n + k] / piv;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return true;
}

}  // namespace copos
