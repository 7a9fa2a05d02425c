#include "copos/sandwich.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace copos::sdp {

SandwichReport sandwich_diagnostics(const BlockSdp& sdp, const BlockMatrix& x0, double inner_radius,
                                    double outer_radius, double tol) {
  if (!sdp.conforms(x0)) throw std::invalid_argument("sandwich_diagnostics: X0 does not match the block pattern");
  if (!(inner_radius > 0.0 && outer_radius >= inner_radius))
    throw std::invalid_argument("sandwich_diagnostics: need 0 < inner radius <= outer radius");

  SandwichReport rep;
  const auto& cons = sdp.constraints();
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double r = std::abs(sdp.inner(cons[i].a, x0) - cons[i].rhs);
    if (r > rep.max_residual) {
      rep.max_residual = r;
      rep.worst_row = static_cast<int>(i);
    }
  }
  rep.margin = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < sdp.blocks().size(); ++b) {
    double m;
    if (sdp.blocks()[b].kind == BlockKind::Psd) {
      const Eigen::MatrixXd& blk = x0.block(b);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (blk + blk.transpose()), Eigen::EigenvaluesOnly);
      m = es.eigenvalues().minCoeff();
    } else {
      m = x0.block(b).minCoeff();
    }
    rep.block_margins.push_back(m);
    rep.margin = std::min(rep.margin, m);
  }
  rep.log_radius_ratio = std::log(outer_radius / inner_radius);
  rep.interior = rep.max_residual <= tol && rep.margin > 0.0;
  return rep;
}

}  // namespace copos::sdp
