#pragma once

#include "copos/poly.hpp"
#include "copos/rational.hpp"

namespace copos {

/// max_alpha |c_alpha| / multinomial(alpha); zero for the zero polynomial.
Rational coeff_norm(const Poly& p);

/// max_alpha |c_alpha|
Rational max_abs_coefficient(const Poly& p);

/// Upper bound on a supremum of |p|. `exact` is set when the value is the
/// supremum itself (closed form recognised), otherwise it is an
/// over-estimate obtained by bounding every monomial separately.
struct SupBound {
  Rational value;
  bool exact = false;
};

/// Supremum of |p| over the box [-1, 1]^n. Closed forms: constants,
/// affine forms, c * (sum x_i^2)^k.
SupBound box_sup(const Poly& p);

/// Square of the supremum of |p| over the ball sum x_i^2 <= r. Closed
/// forms: constants, linear forms, c * (sum x_i^2)^k.
SupBound ball_sup_squared(const Poly& p, const Rational& r);

/// 3^(d+1) * sup_{[-1,1]^n} |p|, the right-hand side of the box
/// coefficient bound ||p|| <= 3^(d+1) max |p|.
Rational korda_bound_rhs(const Poly& p);

/// Square of 3^(d+1) d! (n/r)^(d/2) sup_{|x|^2 <= r} |p|, the bound on
/// max |c_alpha| over a ball of squared radius r. Squared so that the
/// comparison stays rational. Requires 0 < r < n.
Rational scaled_bound_rhs_squared(const Poly& p, const Rational& r);
double scaled_bound_rhs(const Poly& p, const Rational& r);

}  // namespace copos
