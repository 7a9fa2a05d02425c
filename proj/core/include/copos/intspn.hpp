#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copos/conic_program.hpp"
#include "copos/rational.hpp"
#include "copos/solver.hpp"
#include "copos/sym_matrix.hpp"

namespace copos::relax {

/// sum_i ybar_i A_i - C = P + N with N >= 0 and lambda_min(P) >= lambda_min_lb > 0,
/// all exact.
struct SpnWitness {
  std::vector<Rational> ybar;
  SymMatrix p;
  SymMatrix n;
  Rational lambda_min_lb;
  int constraint = 0;
};

/// Checks a candidate decomposition exactly and fills lambda_min_lb with a
/// rational bound certified by an exact Cholesky of P - lb I. Returns
/// nullopt when S != P + N, N has a negative entry, or P is not definite.
std::optional<SpnWitness> make_witness(const ConicProgram& prog, std::vector<Rational> ybar, SymMatrix p,
                                       SymMatrix n, int constraint = 0);

struct IntSpnResult {
  std::optional<SpnWitness> witness;
  double lambda = 0.0;  // lambda* from the auxiliary SDP
  sdp::SolveStatus status = sdp::SolveStatus::Inconclusive;
  std::string message;
};

/// max lambda s.t. S = P + N, P - lambda I PSD, N >= 0 with S the slack
/// of one constraint at ybar. A witness is returned when lambda* > tol and
/// the rounded decomposition survives the exact checks.
IntSpnResult check_intspn(const ConicProgram& prog, const std::vector<Rational>& ybar, int constraint = 0,
                          double tol = 1e-9);

}  // namespace copos::relax
