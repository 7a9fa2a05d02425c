#include "copos/lifted_layout.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "copos/forms.hpp"

namespace copos::cones {

std::string_view to_string(ConeKind k) { return k == ConeKind::K ? "K" : "Q"; }

ConeKind parse_cone_kind(std::string_view s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c == 'K') return ConeKind::K;
    if (c == 'Q') return ConeKind::Q;
  }
  throw std::invalid_argument("unknown cone kind '" + std::string(s) + "' (expected K or Q)");
}

Poly lifted_polynomial(ConeKind kind, const SymMatrix& m, int level) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  if (kind == ConeKind::K) return polya_lift(quartic_form(m), level, LiftKind::Quadratic);
  return polya_lift(quadratic_form(m), level, LiftKind::Linear);
}

std::vector<sdp::Entry> LiftedLayout::shifted_row(int g, int offset) const {
  std::vector<sdp::Entry> out = row_entries.at(g);
  for (auto& e : out) e.block += offset;
  return out;
}

LiftedLayout make_layout(ConeKind kind, int n, int level) {
  if (n < 1) throw std::invalid_argument("make_layout: n must be >= 1");
  if (level < 0) throw std::invalid_argument("make_layout: level must be >= 0");
  LiftedLayout lay;
  lay.kind = kind;
  lay.n = n;
  lay.level = level;
  const auto nv = static_cast<std::size_t>(n);

  const int row_degree = kind == ConeKind::K ? 2 * level + 4 : level + 2;
  lay.rows = monomial_basis(nv, row_degree, true);
  for (std::size_t g = 0; g < lay.rows.size(); ++g) lay.row_of.emplace(lay.rows[g], static_cast<int>(g));
  lay.row_entries.resize(lay.rows.size());
  auto push = [&](const MultiIndex& gamma, const sdp::Entry& e) {
    lay.row_entries[lay.row_of.at(gamma)].push_back(e);
  };

  if (kind == ConeKind::K) {
    lay.gram_basis = monomial_basis(nv, level + 2, true);
    const int k = static_cast<int>(lay.gram_basis.size());
    lay.blocks.push_back({sdp::BlockKind::Psd, k});
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b) push(lay.gram_basis[a] + lay.gram_basis[b], {0, a, b, 1.0});
    return lay;
  }

  lay.multipliers = monomial_basis(nv, level, true);
  lay.scalar_monomials = monomial_basis(nv, level + 2, true);
  std::vector<MultiIndex> units;
  for (std::size_t i = 0; i < nv; ++i) units.push_back(MultiIndex::unit(nv, i));
  for (std::size_t m = 0; m < lay.multipliers.size(); ++m) {
    const int blk = static_cast<int>(lay.blocks.size());
    lay.blocks.push_back({sdp::BlockKind::Psd, n});
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) push(lay.multipliers[m] + units[i] + units[j], {blk, i, j, 1.0});
  }
  const int sblk = static_cast<int>(lay.blocks.size());
  lay.blocks.push_back({sdp::BlockKind::Nonneg, static_cast<int>(lay.scalar_monomials.size())});
  for (std::size_t s = 0; s < lay.scalar_monomials.size(); ++s)
    push(lay.scalar_monomials[s], {sblk, static_cast<int>(s), static_cast<int>(s), 1.0});
  return lay;
}

}  // namespace copos::cones
