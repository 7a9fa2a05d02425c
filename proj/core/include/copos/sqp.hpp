#pragma once

#include <cstdint>
#include <optional>

#include "copos/conic_program.hpp"
#include "copos/intspn.hpp"
#include "copos/relaxation.hpp"
#include "copos/sym_matrix.hpp"

namespace copos::apps {

using cones::ConeKind;

/// min lambda  s.t.  lambda J + M copositive  (the optimum is -p_min).
relax::ConicProgram sqp_program(const SymMatrix& m);
/// max |M_ij| + 1; large enough that (lambda) = this is an interior point.
Rational sqp_box(const SymMatrix& m);
/// P = I, N = M + lambda J - I at lambda = sqp_box(M).
relax::SpnWitness sqp_witness(const SymMatrix& m);

struct BoundResult {
  double value = 0.0;
  relax::RelaxationResult relaxation;
  bool ok() const { return relaxation.status == sdp::SolveStatus::Optimal; }
};

/// p^(r) = -min{lambda : M + lambda J in cone}, a lower bound on
/// min{x^T M x : x in the simplex}.
BoundResult sqp_bound(const SymMatrix& m, int level, ConeKind kind, double eps = 1e-8);

/// min lambda  s.t.  lambda M - J copositive  (the optimum is 1 / p_min).
relax::ConicProgram sqp_reciprocal_program(const SymMatrix& m);

/// q^(r) = min{lambda : lambda M - J in cone} with box 4n / b, where b is
/// half the witness eigenvalue bound. Without a witness one is searched
/// for with check_intspn; std::nullopt when none is found.
std::optional<BoundResult> sqp_reciprocal_bound(const SymMatrix& m, int level, ConeKind kind, double eps = 1e-8,
                                                const std::optional<relax::SpnWitness>& witness = std::nullopt);

/// Smallest x^T M x seen over the simplex vertices, edge midpoints, the
/// barycentre and `samples` Dirichlet(1) points. A negative value proves
/// M is not copositive; a nonnegative one proves nothing.
double sampled_simplex_min(const SymMatrix& m, int samples, std::uint64_t seed = 1);

}  // namespace copos::apps
