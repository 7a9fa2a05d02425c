#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "copos/graph.hpp"
#include "copos/rational.hpp"
#include "copos/sym_matrix.hpp"

namespace copos::testing {

inline std::vector<std::vector<int>> random_int_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<int>> g(rows, std::vector<int>(cols));
  for (auto& row : g)
    for (int& v : row) v = d(rng);
  return g;
}

/// G^T G + shift * I for a random integer G (rows x n).
inline SymMatrix planted_psd(std::mt19937_64& rng, int n, int rows, const Rational& shift) {
  const auto g = random_int_matrix(rng, rows, n, -2, 2);
  SymMatrix p(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational s = i == j ? shift : Rational(0);
      for (int k = 0; k < rows; ++k) s += g[k][i] * g[k][j];
      p.set(i, j, s);
    }
  return p;
}

/// Entrywise nonnegative with entries in {0, 1/2, ..., 2}.
inline SymMatrix planted_nonneg(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(0, 4);
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational v(d(rng), 2);
      v.canonicalize();
      m.set(i, j, v);
    }
  return m;
}

struct PlantedSpn {
  SymMatrix p;
  SymMatrix n;
  SymMatrix m;
};

inline PlantedSpn planted_spn(std::mt19937_64& rng, int n, const Rational& shift = Rational(1)) {
  PlantedSpn s{planted_psd(rng, n, 2, shift), planted_nonneg(rng, n), SymMatrix(n)};
  s.m = s.p + s.n;
  return s;
}

inline SymMatrix c5_adjacency_plus_identity() {
  return apps::Graph::cycle(5).adjacency() + SymMatrix::identity(5);
}

}  // namespace copos::testing

#include "copos/coeff_bounds.hpp"
#include "copos/poly.hpp"

namespace copos::testing {

/// Polynomials with closed-form suprema: constants, linear forms and
/// c * (sum x_i^2)^k for k <= 4, over n <= 6 variables.
inline std::vector<Poly> closed_form_corpus() {
  std::vector<Poly> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    out.push_back(Poly::constant(n, Rational(-7, 3)));
    out.push_back(Poly::constant(n, 5));
    Poly lin(n), alt(n);
    for (std::size_t i = 0; i < n; ++i) {
      lin.add_term(MultiIndex::unit(n, i), Rational(static_cast<long>(i) + 1));
      alt.add_term(MultiIndex::unit(n, i), Rational(i % 2 ? -1 : 2, 3));
    }
    out.push_back(lin);
    out.push_back(alt);
    out.push_back(Poly::linear_sum(n));
    for (unsigned k = 1; k <= 4; ++k) {
      out.push_back(Poly::square_sum(n).pow(k));
      out.push_back(Poly::square_sum(n).pow(k) * Rational(-3, 2));
    }
  }
  return out;
}

/// Squared ball radii used for the scaled bound: 1/2, 1 and n - 1
/// (whichever lie strictly between 0 and n).
inline std::vector<Rational> scaled_bound_radii(std::size_t n) {
  std::vector<Rational> r;
  for (const Rational& c : {Rational(1, 2), Rational(1), Rational(static_cast<long>(n) - 1)})
    if (c > 0 && c < static_cast<long>(n) && std::find(r.begin(), r.end(), c) == r.end()) r.push_back(c);
  return r;
}

}  // namespace copos::testing

namespace copos::testing {

/// Random symmetric integer matrix with entries in [lo, hi].
inline SymMatrix random_symmetric(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, d(rng));
  return m;
}

}  // namespace copos::testing
