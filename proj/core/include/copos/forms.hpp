#pragma once

#include "copos/poly.hpp"
#include "copos/sym_matrix.hpp"

namespace copos {

enum class LiftKind { Linear, Quadratic };

/// sum_ij M_ij x_i x_j
Poly quadratic_form(const SymMatrix& m);

/// sum_ij M_ij x_i^2 x_j^2
Poly quartic_form(const SymMatrix& m);

/// (sum x_i)^r p for Linear, (sum x_i^2)^r p for Quadratic.
Poly polya_lift(const Poly& p, int r, LiftKind kind);

}  // namespace copos
