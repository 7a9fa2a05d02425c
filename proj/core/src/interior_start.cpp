#include "copos/interior_start.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "copos/forms.hpp"

namespace copos::relax {

InteriorStart build_interior_start(const RelaxationSdp& rel, const ConicProgram& prog, const SpnWitness& witness) {
  if (rel.layouts.size() != 1 || prog.constraints.size() != 1)
    throw std::invalid_argument("interior start: single-constraint programs only");
  if (witness.constraint != 0 || witness.ybar.size() != static_cast<std::size_t>(prog.m))
    throw std::invalid_argument("interior start: witness does not match the program");
  const auto& lay = rel.layouts.front();
  const auto n = static_cast<std::size_t>(lay.n);
  if (witness.p.size() != n) throw std::invalid_argument("interior start: witness side does not match");
  for (const auto& y : witness.ybar)
    if (std::abs(to_double(y)) >= 2 * rel.box) throw std::invalid_argument("interior start: ybar outside the box");

  InteriorStart out;
  out.shift = witness.lambda_min_lb / 2;
  const SymMatrix ones = SymMatrix::ones(n);
  while (!is_positive_semidefinite(witness.p - ones * out.shift)) {
    if (++out.halvings > 60) throw std::invalid_argument("interior start: P - bJ stays indefinite");
    out.shift /= 2;
  }
  const Rational& b = out.shift;
  const SymMatrix pb = witness.p - ones * b;
  const SymMatrix nb = witness.n + ones * b;

  out.x0 = sdp::BlockMatrix(rel.sdp.blocks());
  const int off = rel.block_offsets.front();

  if (lay.kind == ConeKind::K) {
    const auto k = lay.gram_basis.size();
    std::map<MultiIndex, std::size_t> pos;
    for (std::size_t a = 0; a < k; ++a) pos.emplace(lay.gram_basis[a], a);
    std::vector<Rational> gram(k * k, Rational(0));
    for (const auto& alpha : monomial_basis(n, lay.level, true)) {
      const Rational w(multinomial(alpha));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto r = pos.at(alpha + MultiIndex::unit(n, i, 2));
          const auto c = pos.at(alpha + MultiIndex::unit(n, j, 2));
          gram[r * k + c] += w * pb(i, j);
        }
    }
    // The nonnegative part is a polynomial in the squares, so it sits on
    // the diagonal: coefficient of x^(2 delta) at basis element delta.
    const Poly rest = polya_lift(quartic_form(nb), lay.level, LiftKind::Quadratic);
    for (const auto& [gamma, c] : rest.terms()) {
      std::vector<int> half(n);
      for (std::size_t i = 0; i < n; ++i) half[i] = gamma[i] / 2;
      const auto d = pos.at(MultiIndex(std::move(half)));
      gram[d * k + d] += c;
    }
    auto& g = out.x0.block(off);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) g(r, c) = to_double(gram[r * k + c]);
    out.inner_radius = std::min(to_double(b) / static_cast<double>(k), rel.box);
  } else {
    const Rational diag = b / (2 * static_cast<long>(n));
    Poly multiplier_sum(n);
    for (std::size_t mi = 0; mi < lay.multipliers.size(); ++mi) {
      const Rational a(multinomial(lay.multipliers[mi]));
      auto& g = out.x0.block(off + mi);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = to_double(a * pb(i, j) + (i == j ? diag : Rational(0)));
      multiplier_sum.add_term(lay.multipliers[mi], 1);
    }
    const Poly scalars = polya_lift(quadratic_form(nb), lay.level, LiftKind::Linear) -
                         multiplier_sum * Poly::square_sum(n) * diag;
    auto& c = out.x0.block(off + lay.multipliers.size());
    for (std::size_t s = 0; s < lay.scalar_monomials.size(); ++s)
      c(s, 0) = to_double(scalars.coefficient(lay.scalar_monomials[s]));
    const double nd = static_cast<double>(n);
    out.inner_radius = std::min(to_double(b) / (4 * nd * nd), rel.box);
  }

  if (rel.d_block >= 0) {
    std::vector<double> y;
    for (const auto& v : witness.ybar) y.push_back(to_double(v));
    out.x0.block(rel.d_block) = rel.encode(y);
  }
  return out;
}

}  // namespace copos::relax
