#include "copos/membership.hpp"

#include <stdexcept>

namespace copos::cones {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Member: return "MEMBER";
    case Verdict::NotMember: return "NOT_MEMBER";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

MembershipProblem build_membership(ConeKind kind, const SymMatrix& m, int level) {
  if (level < 0) throw std::invalid_argument("membership: level must be >= 0");
  if (m.size() == 0) throw std::invalid_argument("membership: empty matrix");
  MembershipProblem p;
  p.matrix = m;
  p.level = level;
  p.kind = kind;
  const Rational mx = m.max_abs();
  p.scale = mx == 0 ? 1.0 : to_double(mx);
  p.layout = make_layout(kind, static_cast<int>(m.size()), level);
  p.lifted = lifted_polynomial(kind, m, level);

  for (const auto& blk : p.layout.blocks) p.sdp.add_block(blk.kind, blk.size);
  const Rational inv_scale = mx == 0 ? Rational(1) : Rational(1) / mx;
  for (std::size_t g = 0; g < p.layout.rows.size(); ++g) {
    const Rational c = p.lifted.coefficient(p.layout.rows[g]) * inv_scale;
    p.sdp.add_constraint(p.layout.row_entries[g], to_double(c));
  }
  return p;
}

MembershipProblem build_K_membership(const SymMatrix& m, int level) { return build_membership(ConeKind::K, m, level); }
MembershipProblem build_Q_membership(const SymMatrix& m, int level) { return build_membership(ConeKind::Q, m, level); }

MembershipResult decide_membership(const MembershipProblem& problem, double eps, const sdp::SolverOptions& options) {
  if (!(eps > 0)) throw std::invalid_argument("decide_membership: eps must be positive");
  MembershipResult res;
  const sdp::SdpSolution sol = sdp::solve(problem.sdp, options);
  res.solver_status = sol.status;
  res.ray_quality = sol.ray_quality;
  res.iterations = sol.iterations;
  res.message = sol.message;

  if (sol.status == sdp::SolveStatus::Optimal) {
    SosCertificate cert = extract_certificate(problem.layout, sol.x);
    for (auto& g : cert.gram) g *= problem.scale;
    for (auto& s : cert.scalars) s *= problem.scale;
    cert.provenance = {options.feas_tol, options.gap_tol, sol.iterations, std::string(sdp::to_string(sol.status))};
    // Thresholds follow the scale of M so that cM and M get the same verdict.
    res.report = validate_certificate(problem.matrix, cert, eps * problem.scale);
    res.certificate = std::move(cert);
    if (res.report->valid) {
      res.verdict = Verdict::Member;
    } else {
      res.message = "certificate failed validation";
    }
  } else if (sol.status == sdp::SolveStatus::PrimalInfeasible && sol.ray_quality <= eps) {
    res.verdict = Verdict::NotMember;
  }
  return res;
}

}  // namespace copos::cones
