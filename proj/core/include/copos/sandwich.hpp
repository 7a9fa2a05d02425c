#pragma once

#include <vector>

#include "copos/block_sdp.hpp"

namespace copos::sdp {

/// Numerical check of a claimed interior point X0 together with the radii
/// of a ball sandwich B(X0, inner) in F in B(X0, outer). Purely
/// informative; nothing here proves the inclusions.
struct SandwichReport {
  double max_residual = 0.0;  // max_i |<A_i, X0> - b_i|
  int worst_row = -1;
  std::vector<double> block_margins;  // smallest eigenvalue / entry per block
  double margin = 0.0;                // min over blocks
  double log_radius_ratio = 0.0;      // log(outer / inner)
  bool interior = false;              // residual <= tol and margin > 0
};

/// Throws std::invalid_argument if x0 does not match the block pattern
/// or the radii are not 0 < inner <= outer.
SandwichReport sandwich_diagnostics(const BlockSdp& sdp, const BlockMatrix& x0, double inner_radius,
                                    double outer_radius, double tol = 1e-9);

}  // namespace copos::sdp
