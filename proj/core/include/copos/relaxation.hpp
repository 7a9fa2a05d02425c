#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copos/block_sdp.hpp"
#include "copos/certificate.hpp"
#include "copos/conic_program.hpp"
#include "copos/intspn.hpp"
#include "copos/lifted_layout.hpp"
#include "copos/sandwich.hpp"
#include "copos/solver.hpp"

namespace copos::relax {

using cones::ConeKind;

/// CP-K / CP-Q relaxation written as a block SDP.
///
/// For each cone constraint the layout's blocks are placed one after the
/// other; then, when m > 0, a Nonneg(2m) block D = (d_1+, d_1-, ...) with
/// d_i+ = 2R + y_i and d_i+ + d_i- = 4R. The objective is
/// Diag(b_1/2, -b_1/2, ...) on D, so <D, B> = b^T y.
struct RelaxationSdp {
  sdp::BlockSdp sdp;
  ConeKind kind = ConeKind::K;
  int level = 0;
  int m = 0;
  double box = 0.0;
  std::vector<cones::LiftedLayout> layouts;
  std::vector<int> block_offsets;
  /// First coupling row of each cone constraint.
  std::vector<int> row_offsets;
  int d_block = -1;

  /// y_i = (d_i+ - d_i-) / 2, which keeps <D, B> = b^T y exact.
  std::vector<double> decode(const sdp::BlockMatrix& x) const;
  /// D block for a given y (d+ = 2R + y, d- = 2R - y).
  Eigen::MatrixXd encode(const std::vector<double>& y) const;
};

RelaxationSdp build_relaxation_sdp(const ConicProgram& prog, int level, ConeKind kind, double box);
RelaxationSdp build_cpk_sdp(const ConicProgram& prog, int level, double box);
RelaxationSdp build_cpq_sdp(const ConicProgram& prog, int level, double box);

/// Adds the box -2R <= y_i <= 2R as copositivity of
/// D = Diag(2R - y_1, 2R + y_1, ...). A single-constraint program is
/// extended blockwise (side n + 2m, A_i and C padded with the diagonal);
/// with several constraints D becomes one more cone constraint.
ConicProgram to_bounded(const ConicProgram& prog, const Rational& box);

struct RelaxationOptions {
  double eps = 1e-8;      // solver feasibility / gap / ray tolerance
  int max_iter = 200;
  double cert_tol = 1e-6;  // relative to max(1, max |slack entry|)
  /// When given, X0 is built from it and checked with the sandwich
  /// diagnostics before solving. Single-constraint programs only.
  std::optional<SpnWitness> witness;
};

struct InteriorDiagnostics {
  double shift = 0.0;  // b
  int halvings = 0;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  sdp::SandwichReport sandwich;
};

struct RelaxationResult {
  sdp::SolveStatus status = sdp::SolveStatus::Inconclusive;
  double value = 0.0;  // b^T y_star
  std::vector<double> y_star;
  std::vector<cones::SosCertificate> certificates;
  std::vector<cones::CertificateReport> reports;
  bool certificates_valid = false;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;
  double ray_quality = 0.0;
  double max_iterate_magnitude = 0.0;
  std::string message;
  std::optional<InteriorDiagnostics> interior;
};

RelaxationResult solve_relaxation(const ConicProgram& prog, int level, ConeKind kind, double box,
                                  const RelaxationOptions& options = {});
RelaxationResult solve_relaxation(const ConicProgram& prog, int level, ConeKind kind, double box, double eps);

}  // namespace copos::relax
