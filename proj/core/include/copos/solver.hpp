#pragma once

#include <limits>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "copos/block_sdp.hpp"

namespace copos::sdp {

enum class SolveStatus { Optimal, PrimalInfeasible, DualInfeasibleOrUnbounded, Inconclusive };

std::string_view to_string(SolveStatus s);

struct SolverOptions {
  double feas_tol = 1e-8;    // relative primal/dual residual
  double gap_tol = 1e-8;     // relative duality gap
  double infeas_tol = 1e-8;  // quality threshold for an improving ray
  int max_iter = 200;
  double step_fraction = 0.95;
  bool verbose = false;  // iteration log on std::clog
};

struct SdpSolution {
  SolveStatus status = SolveStatus::Inconclusive;
  /// For Optimal: the primal-dual pair. For PrimalInfeasible: (y, s) hold
  /// the Farkas ray normalised to b^T y = 1. For DualInfeasibleOrUnbounded:
  /// x holds the ray normalised to <C, x> = -1.
  BlockMatrix x;
  Eigen::VectorXd y;
  BlockMatrix s;
  double primal_objective = std::numeric_limits<double>::quiet_NaN();
  double dual_objective = std::numeric_limits<double>::quiet_NaN();
  double primal_residual = std::numeric_limits<double>::infinity();
  double dual_residual = std::numeric_limits<double>::infinity();
  double gap = std::numeric_limits<double>::infinity();
  /// ||A^T y + S|| / b^T y or ||A(X)|| / -<C, X> for the best ray seen.
  double ray_quality = std::numeric_limits<double>::infinity();
  int iterations = 0;
  /// Largest |entry| over all iterates, before homogeneous rescaling.
  double max_iterate_magnitude = 0.0;
  double final_tau = 0.0;
  double final_kappa = 0.0;
  std::string message;
};

/// Primal-dual path following on the homogeneous self-dual embedding
/// with Nesterov-Todd scaling and a Mehrotra predictor-corrector.
SdpSolution solve(const BlockSdp& sdp, const SolverOptions& options = {});

/// eps sets the feasibility, gap and infeasibility tolerances.
SdpSolution solve(const BlockSdp& sdp, double eps, int max_iter);

}  // namespace copos::sdp
