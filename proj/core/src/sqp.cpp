#include "copos/sqp.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace copos::apps {

relax::ConicProgram sqp_program(const SymMatrix& m) {
  relax::ConicProgram p;
  p.m = 1;
  p.b = {Rational(1)};
  p.constraints.push_back({m * Rational(-1), {SymMatrix::ones(m.size())}});
  return p;
}

Rational sqp_box(const SymMatrix& m) { return m.max_abs() + 1; }

relax::SpnWitness sqp_witness(const SymMatrix& m) {
  const Rational lam = sqp_box(m);
  const auto n = m.size();
  const SymMatrix p = SymMatrix::identity(n);
  const SymMatrix nn = m + SymMatrix::ones(n) * lam - p;
  auto w = relax::make_witness(sqp_program(m), {lam}, p, nn);
  if (!w) throw std::logic_error("sqp_witness: the explicit decomposition failed its exact check");
  return *w;
}

BoundResult sqp_bound(const SymMatrix& m, int level, ConeKind kind, double eps) {
  BoundResult out;
  out.relaxation = relax::solve_relaxation(sqp_program(m), level, kind, to_double(sqp_box(m)), eps);
  out.value = out.ok() ? -out.relaxation.value : std::numeric_limits<double>::quiet_NaN();
  return out;
}

relax::ConicProgram sqp_reciprocal_program(const SymMatrix& m) {
  relax::ConicProgram p;
  p.m = 1;
  p.b = {Rational(1)};
  p.constraints.push_back({SymMatrix::ones(m.size()), {m}});
  return p;
}

std::optional<BoundResult> sqp_reciprocal_bound(const SymMatrix& m, int level, ConeKind kind, double eps,
                                                const std::optional<relax::SpnWitness>& witness) {
  std::optional<relax::SpnWitness> w = witness;
  if (!w) {
    // M itself must split as P + N: the m = 0 program with C = -M.
    relax::ConicProgram self;
    self.constraints.push_back({m * Rational(-1), {}});
    w = relax::check_intspn(self, {}).witness;
    if (!w) return std::nullopt;
  }
  if (w->p.size() != m.size() || w->p + w->n != m)
    throw std::invalid_argument("sqp_reciprocal_bound: witness does not decompose M");
  const Rational b = w->lambda_min_lb / 2;
  const double box = to_double(Rational(4 * static_cast<long>(m.size())) / b);
  BoundResult out;
  out.relaxation = relax::solve_relaxation(sqp_reciprocal_program(m), level, kind, box, eps);
  out.value = out.ok() ? out.relaxation.value : std::numeric_limits<double>::quiet_NaN();
  return out;
}

double sampled_simplex_min(const SymMatrix& m, int samples, std::uint64_t seed) {
  const auto n = m.size();
  const Eigen::MatrixXd a = m.to_eigen();
  double best = std::numeric_limits<double>::infinity();
  auto eval = [&](const Eigen::VectorXd& x) { best = std::min(best, x.dot(a * x)); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
      x(i) += 0.5;
      x(j) += 0.5;
      eval(x);
    }
  }
  eval(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n)));
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd x(static_cast<Eigen::Index>(n));
  for (int s = 0; s < samples; ++s) {
    for (auto& v : x) v = expo(rng);
    x /= x.sum();
    eval(x);
  }
  return best;
}

}  // namespace copos::apps
