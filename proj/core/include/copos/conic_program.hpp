#pragma once

#include <span>
#include <vector>

#include "copos/rational.hpp"
#include "copos/sym_matrix.hpp"

namespace copos::relax {

/// One copositivity constraint sum_i y_i A_i - C in COP_n.
struct ConeConstraint {
  SymMatrix c;
  std::vector<SymMatrix> a;

  std::size_t side() const { return c.size(); }
  /// sum_i y_i A_i - C
  SymMatrix slack(std::span<const Rational> y) const;
};

/// min b^T y  s.t.  every constraint's slack is copositive.
struct ConicProgram {
  int m = 0;
  std::vector<Rational> b;
  std::vector<ConeConstraint> constraints;

  /// Throws std::invalid_argument on inconsistent dimensions.
  void validate() const;
  Rational objective(std::span<const Rational> y) const;
};

}  // namespace copos::relax
