#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "copos/block_sdp.hpp"
#include "copos/certificate.hpp"
#include "copos/lifted_layout.hpp"
#include "copos/poly.hpp"
#include "copos/solver.hpp"
#include "copos/sym_matrix.hpp"

namespace copos::cones {

/// Feasibility SDP for "M in K^(r)" or "M in Q^(r)".
///
/// Rows are built for M / scale with scale = max |M_ij| (1 for M = 0) so
/// that membership of cM behaves the same for every c > 0; certificates
/// are scaled back before they are returned.
struct MembershipProblem {
  SymMatrix matrix;
  int level = 0;
  ConeKind kind = ConeKind::K;
  double scale = 1.0;
  LiftedLayout layout;
  sdp::BlockSdp sdp;
  Poly lifted{1};

  /// Monomial gamma of the lifted polynomial -> constraint row.
  const std::map<MultiIndex, int>& index_map() const { return layout.row_of; }
};

MembershipProblem build_K_membership(const SymMatrix& m, int level);
MembershipProblem build_Q_membership(const SymMatrix& m, int level);
MembershipProblem build_membership(ConeKind kind, const SymMatrix& m, int level);

enum class Verdict { Member, NotMember, Inconclusive };
std::string_view to_string(Verdict v);

struct MembershipResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<SosCertificate> certificate;
  std::optional<CertificateReport> report;
  sdp::SolveStatus solver_status = sdp::SolveStatus::Inconclusive;
  double ray_quality = 0.0;
  int iterations = 0;
  std::string message;
};

/// MEMBER needs a validated certificate (residual and negative eigenvalue
/// both within eps * max |M_ij|); NOT_MEMBER needs an infeasibility ray of quality at
/// most eps. Anything else is INCONCLUSIVE.
MembershipResult decide_membership(const MembershipProblem& problem, double eps = 1e-6,
                                   const sdp::SolverOptions& options = {});

}  // namespace copos::cones
