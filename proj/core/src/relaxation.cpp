#include "copos/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "copos/interior_start.hpp"

namespace copos::relax {

std::vector<double> RelaxationSdp::decode(const sdp::BlockMatrix& x) const {
  std::vector<double> y(static_cast<std::size_t>(m), 0.0);
  if (d_block < 0) return y;
  const auto& d = x.block(static_cast<std::size_t>(d_block));
  for (int i = 0; i < m; ++i) y[i] = 0.5 * (d(2 * i, 0) - d(2 * i + 1, 0));
  return y;
}

Eigen::MatrixXd RelaxationSdp::encode(const std::vector<double>& y) const {
  if (y.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("encode: y has the wrong length");
  Eigen::MatrixXd d(2 * m, 1);
  for (int i = 0; i < m; ++i) {
    d(2 * i, 0) = 2 * box + y[i];
    d(2 * i + 1, 0) = 2 * box - y[i];
  }
  return d;
}

RelaxationSdp build_relaxation_sdp(const ConicProgram& prog, int level, ConeKind kind, double box) {
  prog.validate();
  if (level < 0) throw std::invalid_argument("relaxation: level must be >= 0");
  if (!(box > 0) || !std::isfinite(box)) throw std::invalid_argument("relaxation: box bound must be positive");

  RelaxationSdp rel;
  rel.kind = kind;
  rel.level = level;
  rel.m = prog.m;
  rel.box = box;
  for (const auto& con : prog.constraints) {
    rel.layouts.push_back(cones::make_layout(kind, static_cast<int>(con.side()), level));
    rel.block_offsets.push_back(static_cast<int>(rel.sdp.blocks().size()));
    for (const auto& blk : rel.layouts.back().blocks) rel.sdp.add_block(blk.kind, blk.size);
  }
  if (prog.m > 0) {
    rel.d_block = rel.sdp.add_block(sdp::BlockKind::Nonneg, 2 * prog.m);
    for (int i = 0; i < prog.m; ++i) {
      const double half = to_double(prog.b[i]) / 2;
      rel.sdp.add_objective_entry({rel.d_block, 2 * i, 2 * i, half});
      rel.sdp.add_objective_entry({rel.d_block, 2 * i + 1, 2 * i + 1, -half});
    }
  }

  // Row gamma: <Gram, A_gamma> - sum_i a_{gamma,i} d_i+ = -c_gamma(C) - 2R sum_i a_{gamma,i},
  // which is the coefficient identity for sum_i y_i A_i - C with y_i = d_i+ - 2R.
  const Rational two_r = rational_from_double(box) * 2;
  for (std::size_t k = 0; k < prog.constraints.size(); ++k) {
    const auto& con = prog.constraints[k];
    const auto& lay = rel.layouts[k];
    std::vector<Poly> lift_a;
    for (const auto& ai : con.a) lift_a.push_back(cones::lifted_polynomial(kind, ai, level));
    const Poly lift_c = cones::lifted_polynomial(kind, con.c, level);
    rel.row_offsets.push_back(static_cast<int>(rel.sdp.num_constraints()));
    for (std::size_t g = 0; g < lay.rows.size(); ++g) {
      const MultiIndex& gamma = lay.rows[g];
      auto entries = lay.shifted_row(static_cast<int>(g), rel.block_offsets[k]);
      Rational sum_a = 0;
      for (int i = 0; i < prog.m; ++i) {
        const Rational a = lift_a[i].coefficient(gamma);
        if (a == 0) continue;
        entries.push_back({rel.d_block, 2 * i, 2 * i, -to_double(a)});
        sum_a += a;
      }
      const Rational rhs = -lift_c.coefficient(gamma) - two_r * sum_a;
      rel.sdp.add_constraint(std::move(entries), to_double(rhs));
    }
  }
  for (int i = 0; i < prog.m; ++i)
    rel.sdp.add_constraint({{rel.d_block, 2 * i, 2 * i, 1.0}, {rel.d_block, 2 * i + 1, 2 * i + 1, 1.0}},
                           4 * box);
  return rel;
}

RelaxationSdp build_cpk_sdp(const ConicProgram& prog, int level, double box) {
  return build_relaxation_sdp(prog, level, ConeKind::K, box);
}

RelaxationSdp build_cpq_sdp(const ConicProgram& prog, int level, double box) {
  return build_relaxation_sdp(prog, level, ConeKind::Q, box);
}

ConicProgram to_bounded(const ConicProgram& prog, const Rational& box) {
  prog.validate();
  if (box <= 0) throw std::invalid_argument("to_bounded: box bound must be positive");
  const auto m = static_cast<std::size_t>(prog.m);
  const Rational two_r = box * 2;

  // Diagonal pieces of D = Diag(2R - y_1, 2R + y_1, ...) = sum_i y_i E_i - F.
  std::vector<SymMatrix> e(m, SymMatrix(2 * m));
  SymMatrix f(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    e[i].set(2 * i, 2 * i, -1);
    e[i].set(2 * i + 1, 2 * i + 1, 1);
    f.set(2 * i, 2 * i, -two_r);
    f.set(2 * i + 1, 2 * i + 1, -two_r);
  }

  ConicProgram out;
  out.m = prog.m;
  out.b = prog.b;
  if (m == 0) {
    out.constraints = prog.constraints;
    return out;
  }
  if (prog.constraints.size() == 1) {
    const auto& con = prog.constraints.front();
    ConeConstraint ext;
    ext.c = SymMatrix::direct_sum(con.c, f);
    for (std::size_t i = 0; i < m; ++i) ext.a.push_back(SymMatrix::direct_sum(con.a[i], e[i]));
    out.constraints.push_back(std::move(ext));
    return out;
  }
  out.constraints = prog.constraints;
  out.constraints.push_back({f, e});
  return out;
}

RelaxationResult solve_relaxation(const ConicProgram& prog, int level, ConeKind kind, double box,
                                  const RelaxationOptions& options) {
  const RelaxationSdp rel = build_relaxation_sdp(prog, level, kind, box);
  RelaxationResult res;

  if (options.witness) {
    const InteriorStart start = build_interior_start(rel, prog, *options.witness);
    InteriorDiagnostics diag;
    diag.shift = to_double(start.shift);
    diag.halvings = start.halvings;
    diag.inner_radius = start.inner_radius;
    // No closed form for the outer radius is available here; this is a
    // generous estimate from the size of X0 and the box.
    diag.outer_radius = std::max(diag.inner_radius, 2 * std::sqrt(sdp::inner(start.x0, start.x0)) + 4 * box);
    diag.sandwich = sdp::sandwich_diagnostics(rel.sdp, start.x0, diag.inner_radius, diag.outer_radius);
    res.interior = diag;
  }

  sdp::SolverOptions so;
  so.feas_tol = so.gap_tol = so.infeas_tol = options.eps;
  so.max_iter = options.max_iter;
  const sdp::SdpSolution sol = sdp::solve(rel.sdp, so);
  res.status = sol.status;
  res.iterations = sol.iterations;
  res.primal_residual = sol.primal_residual;
  res.dual_residual = sol.dual_residual;
  res.gap = sol.gap;
  res.ray_quality = sol.ray_quality;
  res.max_iterate_magnitude = sol.max_iterate_magnitude;
  res.message = sol.message;
  res.value = std::numeric_limits<double>::quiet_NaN();
  if (sol.status != sdp::SolveStatus::Optimal) return res;

  res.y_star = rel.decode(sol.x);
  res.value = 0.0;
  for (int i = 0; i < prog.m; ++i) res.value += to_double(prog.b[i]) * res.y_star[i];

  std::vector<Rational> yq;
  for (double v : res.y_star) yq.push_back(rational_from_double(v));
  res.certificates_valid = true;
  for (std::size_t k = 0; k < prog.constraints.size(); ++k) {
    auto cert = cones::extract_certificate(rel.layouts[k], sol.x, rel.block_offsets[k]);
    cert.provenance = {so.feas_tol, so.gap_tol, sol.iterations, std::string(sdp::to_string(sol.status))};
    const SymMatrix slack = prog.constraints[k].slack(yq);
    const double scale = std::max(1.0, to_double(slack.max_abs()));
    auto rep = cones::validate_certificate(slack, cert, options.cert_tol * scale);
    res.certificates_valid = res.certificates_valid && rep.valid;
    res.certificates.push_back(std::move(cert));
    res.reports.push_back(rep);
  }
  return res;
}

RelaxationResult solve_relaxation(const ConicProgram& prog, int level, ConeKind kind, double box, double eps) {
  RelaxationOptions o;
  o.eps = eps;
  return solve_relaxation(prog, level, kind, box, o);
}

}  // namespace copos::relax
