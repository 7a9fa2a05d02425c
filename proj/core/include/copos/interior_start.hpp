#pragma once

#include "copos/block_sdp.hpp"
#include "copos/conic_program.hpp"
#include "copos/intspn.hpp"
#include "copos/relaxation.hpp"

namespace copos::relax {

struct InteriorStart {
  sdp::BlockMatrix x0;
  Rational shift;  // b with P - bJ PSD
  int halvings = 0;
  double inner_radius = 0.0;  // min{b/k, R} (K) or min{b/(4n^2), R} (Q)
};

/// Strictly feasible point of a single-constraint relaxation SDP built
/// from an intSPN witness: with S = (P - bJ) + (N + bJ),
///   K: Gram = sum_alpha multinomial(alpha) * (P - bJ padded at alpha + 2e_i)
///      plus the diagonal of the nonnegative part;
///   Q: blocks a_beta (P - bJ) + (b/2n) I and the leftover scalars.
/// b starts at lambda_min_lb / 2 and is halved (at most 60 times) until
/// P - bJ is PSD. Throws if the witness does not match the SDP or ybar
/// lies outside the open box.
InteriorStart build_interior_start(const RelaxationSdp& rel, const ConicProgram& prog, const SpnWitness& witness);

}  // namespace copos::relax
