#include "copos/intspn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "copos/block_sdp.hpp"

namespace copos::relax {

namespace {

// floor(v * 2^bits) / 2^bits, keeping witness entries short.
Rational dyadic_floor(double v, int bits = 40) {
  const double scaled = std::floor(std::ldexp(v, bits));
  Rational q = rational_from_double(scaled);
  mpz_class den = 1;
  den <<= bits;
  q /= den;
  q.canonicalize();
  return q;
}

Rational dyadic_round(double v, int bits = 40) {
  return dyadic_floor(v + std::ldexp(0.5, -bits), bits);
}

std::optional<Rational> certified_lambda_lb(const SymMatrix& p) {
  const auto n = p.size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.to_eigen(), Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  if (!(lmin > 0)) return std::nullopt;
  Rational lb = dyadic_floor(lmin * (1 - 1e-6));
  for (int attempt = 0; attempt <= 60 && lb > 0; ++attempt) {
    if (is_positive_definite(p - SymMatrix::identity(n) * lb)) return lb;
    lb /= 2;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SpnWitness> make_witness(const ConicProgram& prog, std::vector<Rational> ybar, SymMatrix p,
                                       SymMatrix n, int constraint) {
  prog.validate();
  if (constraint < 0 || static_cast<std::size_t>(constraint) >= prog.constraints.size())
    throw std::invalid_argument("make_witness: constraint index out of range");
  const auto& con = prog.constraints[constraint];
  if (ybar.size() != static_cast<std::size_t>(prog.m) || p.size() != con.side() || n.size() != con.side())
    throw std::invalid_argument("make_witness: dimension mismatch");
  if (!n.is_entrywise_nonnegative()) return std::nullopt;
  if (con.slack(ybar) != p + n) return std::nullopt;
  auto lb = certified_lambda_lb(p);
  if (!lb) return std::nullopt;
  return SpnWitness{std::move(ybar), std::move(p), std::move(n), *lb, constraint};
}

IntSpnResult check_intspn(const ConicProgram& prog, const std::vector<Rational>& ybar, int constraint, double tol) {
  prog.validate();
  if (constraint < 0 || static_cast<std::size_t>(constraint) >= prog.constraints.size())
    throw std::invalid_argument("check_intspn: constraint index out of range");
  if (ybar.size() != static_cast<std::size_t>(prog.m)) throw std::invalid_argument("check_intspn: ybar has the wrong length");
  const SymMatrix s = prog.constraints[constraint].slack(ybar);
  const int n = static_cast<int>(s.size());

  // lambda = U - l with U above every diagonal entry, so l >= 0 is a
  // plain nonnegative variable and the program is bounded.
  double dmin = to_double(s(0, 0));
  for (int i = 1; i < n; ++i) dmin = std::min(dmin, to_double(s(i, i)));
  const double upper = dmin + 1.0;

  sdp::BlockSdp aux;
  const int pb = aux.add_block(sdp::BlockKind::Psd, n);
  const int nb = aux.add_block(sdp::BlockKind::Nonneg, n * (n + 1) / 2);
  const int lb = aux.add_block(sdp::BlockKind::Nonneg, 1);
  aux.set_objective({{lb, 0, 0, 1.0}});
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++idx) {
      if (i == j) {
        aux.add_constraint({{pb, i, i, 1.0}, {nb, idx, idx, 1.0}, {lb, 0, 0, -1.0}}, to_double(s(i, i)) - upper);
      } else {
        aux.add_constraint({{pb, i, j, 0.5}, {nb, idx, idx, 1.0}}, to_double(s(i, j)));
      }
    }

  IntSpnResult res;
  const sdp::SdpSolution sol = sdp::solve(aux);
  res.status = sol.status;
  res.message = sol.message;
  if (sol.status != sdp::SolveStatus::Optimal) return res;
  res.lambda = upper - sol.x.block(lb)(0, 0);
  if (!(res.lambda > tol)) {
    res.message = "no interior SPN point: lambda* <= tolerance";
    return res;
  }

  SymMatrix nmat(static_cast<std::size_t>(n));
  idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++idx) {
      const double v = sol.x.block(nb)(idx, 0);
      if (v > 0) nmat.set(i, j, dyadic_round(v));
    }
  res.witness = make_witness(prog, ybar, s - nmat, nmat, constraint);
  if (!res.witness) res.message = "rounded decomposition failed the exact check";
  return res;
}

}  // namespace copos::relax
