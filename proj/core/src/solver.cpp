#include "copos/solver.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace copos::sdp {

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
      return "OPTIMAL";
    case SolveStatus::PrimalInfeasible:
      return "PRIMAL_INFEASIBLE";
    case SolveStatus::DualInfeasibleOrUnbounded:
      return "DUAL_INFEASIBLE_OR_UNBOUNDED";
    case SolveStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Touch {
  int constraint;
  std::vector<Entry> entries;
};

struct NonnegTouch {
  int constraint;
  double value;
};

// Per-block view of the constraint matrices.
struct Structure {
  std::vector<std::vector<Touch>> psd_touch;                   // by block
  std::vector<std::vector<std::vector<NonnegTouch>>> nn_touch;  // by block, then index
};

Structure index_structure(const BlockSdp& sdp) {
  const auto& blocks = sdp.blocks();
  Structure st;
  st.psd_touch.resize(blocks.size());
  st.nn_touch.resize(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].kind == BlockKind::Nonneg) st.nn_touch[b].resize(blocks[b].size);

  const auto& cons = sdp.constraints();
  for (std::size_t i = 0; i < cons.size(); ++i) {
    std::vector<int> last(blocks.size(), -1);
    for (const auto& e : cons[i].a) {
      if (e.value == 0.0) continue;
      if (blocks[e.block].kind == BlockKind::Nonneg) {
        st.nn_touch[e.block][e.row].push_back({static_cast<int>(i), e.value});
      } else {
        auto& list = st.psd_touch[e.block];
        if (last[e.block] < 0) {
          last[e.block] = static_cast<int>(list.size());
          list.push_back({static_cast<int>(i), {}});
        }
        list[last[e.block]].entries.push_back(e);
      }
    }
  }
  return st;
}

// NT scaling of one block: W S W = X, with G G^T = W and
// G^{-1} X G^{-T} = G^T S G = Diag(v).
// Nonneg blocks store w = x / z (the square of the scale) and g = sqrt(w).
struct Scaling {
  bool psd = true;
  MatrixXd g, ginv, w;
  VectorXd v;
};

struct Direction {
  BlockMatrix dx, ds;
  VectorXd dy;
  double dtau = 0.0, dkappa = 0.0;
};

class HsdSolver {
 public:
  HsdSolver(const BlockSdp& sdp, const SolverOptions& opt)
      : sdp_(sdp), opt_(opt), blocks_(sdp.blocks()), m_(static_cast<int>(sdp.num_constraints())) {
    sdp_.validate();
    st_ = index_structure(sdp_);
    b_.resize(m_);
    for (int i = 0; i < m_; ++i) b_(i) = sdp_.constraints()[i].rhs;
    c_ = sdp_.dense(sdp_.objective());
    nu_ = sdp_.cone_degree();
    normb_ = b_.norm();
    normc_ = frob(c_);
  }

  SdpSolution run();

 private:
  static double frob(const BlockMatrix& a) { return std::sqrt(inner(a, a)); }

  VectorXd apply_a(const BlockMatrix& x) const {
    VectorXd out(m_);
    for (int i = 0; i < m_; ++i) out(i) = sdp_.inner(sdp_.constraints()[i].a, x);
    return out;
  }

  BlockMatrix apply_at(const VectorXd& y) const {
    BlockMatrix out(blocks_);
    for (int i = 0; i < m_; ++i) {
      if (y(i) == 0.0) continue;
      for (const auto& e : sdp_.constraints()[i].a) {
        auto& blk = out.block(e.block);
        if (blocks_[e.block].kind == BlockKind::Nonneg) {
          blk(e.row, 0) += y(i) * e.value;
        } else {
          blk(e.row, e.col) += y(i) * e.value;
          if (e.row != e.col) blk(e.col, e.row) += y(i) * e.value;
        }
      }
    }
    return out;
  }

  // W R W blockwise.
  BlockMatrix congruence(const BlockMatrix& r) const {
    BlockMatrix out(blocks_);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].kind == BlockKind::Psd)
        out.block(b).noalias() = sc_[b].w * r.block(b) * sc_[b].w;
      else
        out.block(b) = sc_[b].w.col(0).cwiseProduct(r.block(b));  // w already holds x / z
    }
    return out;
  }

  bool compute_scaling();
  void build_schur();
  bool factor_schur();
  VectorXd schur_solve(const VectorXd& rhs) const;
  Direction newton(const std::vector<MatrixXd>& rc, double rtau, double eta) const;
  double max_step(const Direction& d, std::vector<MatrixXd>* dxs, std::vector<MatrixXd>* dss) const;
  bool interior(const BlockMatrix& m) const;

  const BlockSdp& sdp_;
  SolverOptions opt_;
  const std::vector<BlockSpec>& blocks_;
  int m_;
  Structure st_;
  VectorXd b_;
  BlockMatrix c_;
  int nu_ = 0;
  double normb_ = 0.0, normc_ = 0.0;

  // Iterate.
  BlockMatrix x_, s_;
  VectorXd y_;
  double tau_ = 1.0, kappa_ = 1.0;

  // Per-iteration data.
  std::vector<Scaling> sc_;
  MatrixXd schur_;
  Eigen::LLT<MatrixXd> llt_;
  Eigen::LDLT<MatrixXd> ldlt_;
  bool use_ldlt_ = false;
  BlockMatrix rd_, wcw_, wrdw_;
  VectorXd rp_, u_, a_wrdw_;
  double rg_ = 0.0, c0_ = 0.0, wcw_rd_ = 0.0;
};

bool HsdSolver::compute_scaling() {
  sc_.assign(blocks_.size(), {});
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& s = sc_[b];
    if (blocks_[b].kind == BlockKind::Nonneg) {
      s.psd = false;
      const VectorXd x = x_.block(b).col(0), z = s_.block(b).col(0);
      if ((x.array() <= 0.0).any() || (z.array() <= 0.0).any()) return false;
      s.w = (x.array() / z.array()).matrix();
      s.g = s.w.array().sqrt().matrix();
      s.v = (x.array() * z.array()).sqrt().matrix();
      continue;
    }
    Eigen::LLT<MatrixXd> chol(x_.block(b));
    if (chol.info() != Eigen::Success) return false;
    const MatrixXd l = chol.matrixL();
    const MatrixXd t = l.transpose() * s_.block(b) * l;
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (t + t.transpose()));
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) return false;
    const VectorXd d = es.eigenvalues().cwiseSqrt();
    const VectorXd dm = d.cwiseSqrt().cwiseInverse();
    s.g = l * es.eigenvectors() * dm.asDiagonal();
    const MatrixXd linv = l.triangularView<Eigen::Lower>().solve(MatrixXd::Identity(l.rows(), l.cols()));
    s.ginv = d.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose() * linv;
    s.w = s.g * s.g.transpose();
    s.v = d;
  }
  return true;
}

void HsdSolver::build_schur() {
  schur_ = MatrixXd::Zero(m_, m_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].kind == BlockKind::Nonneg) {
      const VectorXd& w = sc_[b].w;
      for (int r = 0; r < blocks_[b].size; ++r) {
        const auto& list = st_.nn_touch[b][r];
        for (const auto& p : list)
          for (const auto& q : list) schur_(p.constraint, q.constraint) += p.value * q.value * w(r);
      }
      continue;
    }
    const MatrixXd& w = sc_[b].w;
    const int k = blocks_[b].size;
    const auto& touches = st_.psd_touch[b];
    MatrixXd t(k, k);
    for (const auto& tj : touches) {
      if (static_cast<int>(tj.entries.size()) * 2 > k) {
        MatrixXd a = MatrixXd::Zero(k, k);
        for (const auto& e : tj.entries) {
          a(e.row, e.col) += e.value;
          if (e.row != e.col) a(e.col, e.row) += e.value;
        }
        t.noalias() = w * a * w;
      } else {
        t.setZero();
        for (const auto& e : tj.entries) {
          if (e.row == e.col) {
            t.noalias() += e.value * w.col(e.row) * w.col(e.row).transpose();
          } else {
            t.noalias() += e.value * w.col(e.row) * w.col(e.col).transpose();
            t.noalias() += e.value * w.col(e.col) * w.col(e.row).transpose();
          }
        }
      }
      for (const auto& ti : touches) {
        double acc = 0.0;
        for (const auto& e : ti.entries) acc += e.value * (e.row == e.col ? t(e.row, e.row) : 2.0 * t(e.row, e.col));
        schur_(ti.constraint, tj.constraint) += acc;
      }
    }
  }
  schur_ = 0.5 * (schur_ + schur_.transpose());
}

bool HsdSolver::factor_schur() {
  if (m_ == 0) return true;
  use_ldlt_ = false;
  llt_.compute(schur_);
  if (llt_.info() == Eigen::Success) return true;
  // Tiny diagonal regularisation, then fall back to LDL^T.
  const double reg = 1e-13 * std::max(1.0, schur_.diagonal().cwiseAbs().maxCoeff());
  MatrixXd mreg = schur_;
  mreg.diagonal().array() += reg;
  llt_.compute(mreg);
  if (llt_.info() == Eigen::Success) return true;
  ldlt_.compute(mreg);
  use_ldlt_ = true;
  return ldlt_.info() == Eigen::Success;
}

VectorXd HsdSolver::schur_solve(const VectorXd& rhs) const {
  if (m_ == 0) return VectorXd(0);
  auto once = [&](const VectorXd& r) { return use_ldlt_ ? VectorXd(ldlt_.solve(r)) : VectorXd(llt_.solve(r)); };
  VectorXd x = once(rhs);
  // One step of iterative refinement against the unregularised matrix.
  x += once(rhs - schur_ * x);
  return x;
}

// Solves the linearised embedding with complementarity right-hand side
// `rc` in the scaled space (per block) and `rtau` for tau * kappa; the
// linear residuals are reduced by the factor (1 - eta).
Direction HsdSolver::newton(const std::vector<MatrixXd>& rc, double rtau, double eta) const {
  BlockMatrix rx(blocks_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& s = sc_[b];
    if (!s.psd) {
      rx.block(b) = (s.g.array() * rc[b].col(0).array() / s.v.array()).matrix();
      continue;
    }
    const int k = blocks_[b].size;
    MatrixXd rt(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) rt(i, j) = rc[b](i, j) * 2.0 / (s.v(i) + s.v(j));
    rx.block(b).noalias() = s.g * rt * s.g.transpose();
  }

  const VectorXd h1 = eta * rp_ - apply_a(rx) + eta * a_wrdw_;
  const double h2 = eta * rg_ - inner(c_, rx) + eta * wcw_rd_ - rtau / tau_;
  const VectorXd p = schur_solve(h1);
  const VectorXd q = schur_solve(u_ + b_);
  const VectorXd umb = u_ - b_;
  const double denom = (m_ ? umb.dot(q) : 0.0) - c0_ - kappa_ / tau_;
  Direction d;
  d.dtau = (h2 - (m_ ? umb.dot(p) : 0.0)) / denom;
  d.dy = p + q * d.dtau;
  d.ds = rd_ * eta - apply_at(d.dy) + c_ * d.dtau;
  d.dx = rx - congruence(d.ds);
  d.dkappa = (rtau - kappa_ * d.dtau) / tau_;
  return d;
}

// Largest step keeping every cone variable inside its cone. Fills the
// scaled directions when requested.
double HsdSolver::max_step(const Direction& d, std::vector<MatrixXd>* dxs, std::vector<MatrixXd>* dss) const {
  double amax = std::numeric_limits<double>::infinity();
  auto ratio = [&](double val, double dval) {
    if (dval < 0.0) amax = std::min(amax, -val / dval);
  };
  if (dxs) dxs->assign(blocks_.size(), MatrixXd());
  if (dss) dss->assign(blocks_.size(), MatrixXd());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& s = sc_[b];
    if (!s.psd) {
      const VectorXd dx = d.dx.block(b).col(0), ds = d.ds.block(b).col(0);
      for (int r = 0; r < blocks_[b].size; ++r) {
        ratio(x_.block(b)(r, 0), dx(r));
        ratio(s_.block(b)(r, 0), ds(r));
      }
      if (dxs) (*dxs)[b] = (dx.array() / s.g.array()).matrix();
      if (dss) (*dss)[b] = (ds.array() * s.g.array()).matrix();
      continue;
    }
    MatrixXd dxt = s.ginv * d.dx.block(b) * s.ginv.transpose();
    MatrixXd dst = s.g.transpose() * d.ds.block(b) * s.g;
    dxt = 0.5 * (dxt + dxt.transpose());
    dst = 0.5 * (dst + dst.transpose());
    const VectorXd vis = s.v.cwiseSqrt().cwiseInverse();
    for (const MatrixXd* dm : {&dxt, &dst}) {
      const MatrixXd scaled = vis.asDiagonal() * (*dm) * vis.asDiagonal();
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(scaled, Eigen::EigenvaluesOnly);
      const double lmin = es.eigenvalues().minCoeff();
      if (lmin < 0.0) amax = std::min(amax, -1.0 / lmin);
    }
    if (dxs) (*dxs)[b] = std::move(dxt);
    if (dss) (*dss)[b] = std::move(dst);
  }
  ratio(tau_, d.dtau);
  ratio(kappa_, d.dkappa);
  return amax;
}

bool HsdSolver::interior(const BlockMatrix& m) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].kind == BlockKind::Nonneg) {
      if ((m.block(b).array() <= 0.0).any()) return false;
    } else if (Eigen::LLT<MatrixXd>(m.block(b)).info() != Eigen::Success) {
      return false;
    }
  }
  return true;
}

SdpSolution HsdSolver::run() {
  SdpSolution sol;
  x_ = BlockMatrix::identity(blocks_);
  s_ = BlockMatrix::identity(blocks_);
  y_ = VectorXd::Zero(m_);
  tau_ = 1.0;
  kappa_ = 1.0;
  const double nu1 = static_cast<double>(nu_) + 1.0;
  int stalled = 0;

  auto finish_optimal = [&](double pres, double dres, double gap) {
    sol.status = SolveStatus::Optimal;
    sol.x = x_ * (1.0 / tau_);
    sol.y = y_ / tau_;
    sol.s = s_ * (1.0 / tau_);
    sol.primal_objective = inner(c_, sol.x);
    sol.dual_objective = b_.dot(sol.y);
    sol.primal_residual = pres;
    sol.dual_residual = dres;
    sol.gap = gap;
    sol.message = "converged";
  };

  for (int iter = 0;; ++iter) {
    sol.iterations = iter;
    sol.final_tau = tau_;
    sol.final_kappa = kappa_;
    sol.max_iterate_magnitude =
        std::max({sol.max_iterate_magnitude, x_.max_abs(), s_.max_abs(), m_ ? y_.cwiseAbs().maxCoeff() : 0.0});

    const VectorXd ax = apply_a(x_);
    const BlockMatrix aty = apply_at(y_);
    rp_ = tau_ * b_ - ax;
    rd_ = c_ * tau_ - aty - s_;
    const double cx = inner(c_, x_), by = b_.dot(y_);
    rg_ = by - cx - kappa_;
    const double mu = (inner(x_, s_) + tau_ * kappa_) / nu1;

    const double pres = rp_.norm() / tau_ / (1.0 + normb_);
    const double dres = frob(rd_) / tau_ / (1.0 + normc_);
    const double pobj = cx / tau_, dobj = by / tau_;
    const double gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    sol.primal_residual = pres;
    sol.dual_residual = dres;
    sol.gap = gap;
    sol.primal_objective = pobj;
    sol.dual_objective = dobj;

    if (opt_.verbose) {
      std::clog << std::scientific << std::setprecision(3) << "it " << std::setw(3) << iter << " pobj " << pobj
                << " dobj " << dobj << " pres " << pres << " dres " << dres << " gap " << gap << " tau " << tau_
                << " kappa " << kappa_ << " mu " << mu << "\n";
    }

    if (pres <= opt_.feas_tol && dres <= opt_.feas_tol && gap <= opt_.gap_tol) {
      finish_optimal(pres, dres, gap);
      return sol;
    }
    if (by > 0.0) {
      BlockMatrix ray = aty + s_;
      const double q = frob(ray) / by;
      sol.ray_quality = std::min(sol.ray_quality, q);
      if (q <= opt_.infeas_tol && tau_ < kappa_) {
        sol.status = SolveStatus::PrimalInfeasible;
        sol.y = y_ / by;
        sol.s = s_ * (1.0 / by);
        sol.x = BlockMatrix(blocks_);
        sol.ray_quality = q;
        sol.message = "Farkas ray for the primal found";
        return sol;
      }
    }
    if (cx < 0.0) {
      const double q = ax.norm() / (-cx);
      sol.ray_quality = std::min(sol.ray_quality, q);
      if (q <= opt_.infeas_tol && tau_ < kappa_) {
        sol.status = SolveStatus::DualInfeasibleOrUnbounded;
        sol.x = x_ * (1.0 / -cx);
        sol.y = VectorXd::Zero(m_);
        sol.s = BlockMatrix(blocks_);
        sol.ray_quality = q;
        sol.message = "improving primal ray found";
        return sol;
      }
    }
    if (iter >= opt_.max_iter) {
      sol.message = "iteration limit reached";
      break;
    }
    if (!std::isfinite(mu) || mu < 1e-30) {
      sol.message = "complementarity vanished without a certificate";
      break;
    }

    if (!compute_scaling()) {
      sol.message = "numerical breakdown: iterate left the cone interior";
      break;
    }
    build_schur();
    if (!factor_schur()) {
      sol.message = "numerical breakdown: Schur complement factorisation failed";
      break;
    }
    wcw_ = congruence(c_);
    u_ = apply_a(wcw_);
    c0_ = inner(c_, wcw_);
    wrdw_ = congruence(rd_);
    a_wrdw_ = apply_a(wrdw_);
    wcw_rd_ = inner(wcw_, rd_);

    // Predictor.
    std::vector<MatrixXd> rc(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const VectorXd v2 = sc_[b].v.cwiseProduct(sc_[b].v);
      if (sc_[b].psd)
        rc[b] = MatrixXd((-v2).asDiagonal());
      else
        rc[b] = -v2;
    }
    Direction aff = newton(rc, -tau_ * kappa_, 1.0);
    std::vector<MatrixXd> dxa, dsa;
    const double amax_a = max_step(aff, &dxa, &dsa);
    const double aa = std::min(1.0, amax_a);
    const double mu_aff = (inner(x_ + aff.dx * aa, s_ + aff.ds * aa) +
                           (tau_ + aa * aff.dtau) * (kappa_ + aa * aff.dkappa)) /
                          nu1;
    double sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3);
    sigma = std::clamp(sigma, 0.0, 1.0);

    // Corrector.
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const VectorXd v2 = sc_[b].v.cwiseProduct(sc_[b].v);
      if (sc_[b].psd) {
        MatrixXd corr = 0.5 * (dxa[b] * dsa[b] + dsa[b] * dxa[b]);
        rc[b] = -corr;
        rc[b].diagonal().array() += sigma * mu - v2.array();
      } else {
        rc[b] = ((sigma * mu - v2.array()) - dxa[b].col(0).array() * dsa[b].col(0).array()).matrix();
      }
    }
    Direction dir = newton(rc, sigma * mu - tau_ * kappa_ - aff.dtau * aff.dkappa, 1.0 - sigma);
    const double amax = max_step(dir, nullptr, nullptr);
    double alpha = std::min(1.0, opt_.step_fraction * amax);
    if (!std::isfinite(alpha) || alpha <= 0.0) {
      sol.message = "numerical breakdown: no admissible step";
      break;
    }
    if (alpha < 1e-8) {
      if (++stalled >= 3) {
        sol.message = "stalled: step lengths vanished";
        break;
      }
    } else {
      stalled = 0;
    }

    // Rounding can push a full fraction-to-boundary step just outside a
    // cone; halve until every block still factors.
    const BlockMatrix x_prev = x_, s_prev = s_;
    const VectorXd y_prev = y_;
    const double tau_prev = tau_, kappa_prev = kappa_;
    bool inside = false;
    for (int tries = 0; tries < 30 && !inside; ++tries, alpha *= 0.5) {
      x_ = x_prev + dir.dx * alpha;
      s_ = s_prev + dir.ds * alpha;
      y_ = y_prev + dir.dy * alpha;
      tau_ = tau_prev + alpha * dir.dtau;
      kappa_ = kappa_prev + alpha * dir.dkappa;
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].kind == BlockKind::Psd) {
          x_.block(b) = 0.5 * (x_.block(b) + x_.block(b).transpose()).eval();
          s_.block(b) = 0.5 * (s_.block(b) + s_.block(b).transpose()).eval();
        }
      }
      inside = tau_ > 0.0 && kappa_ > 0.0 && interior(x_) && interior(s_);
    }
    if (!inside) {
      x_ = x_prev;
      s_ = s_prev;
      y_ = y_prev;
      tau_ = tau_prev;
      kappa_ = kappa_prev;
      sol.message = "numerical breakdown: no step keeps the iterate interior";
      break;
    }
  }

  sol.status = SolveStatus::Inconclusive;
  if (tau_ > 0.0) {
    sol.x = x_ * (1.0 / tau_);
    sol.y = y_ / tau_;
    sol.s = s_ * (1.0 / tau_);
  }
  return sol;
}

}  // namespace

SdpSolution solve(const BlockSdp& sdp, const SolverOptions& options) {
  HsdSolver solver(sdp, options);
  return solver.run();
}

SdpSolution solve(const BlockSdp& sdp, double eps, int max_iter) {
  if (!(eps > 0.0)) throw std::invalid_argument("solve: eps must be positive");
  SolverOptions opt;
  opt.feas_tol = eps;
  opt.gap_tol = eps;
  opt.infeas_tol = eps;
  opt.max_iter = max_iter;
  return solve(sdp, opt);
}

}  // namespace copos::sdp
