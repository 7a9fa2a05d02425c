#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "copos/block_sdp.hpp"
#include "copos/multi_index.hpp"
#include "copos/poly.hpp"
#include "copos/sym_matrix.hpp"

namespace copos::cones {

enum class ConeKind { K, Q };

std::string_view to_string(ConeKind k);
/// Accepts "K" / "Q" (case-insensitive).
ConeKind parse_cone_kind(std::string_view s);

/// The polynomial whose certificate decides membership of M:
/// K: (sum x_i^2)^r (x o x)^T M (x o x);  Q: (sum x_i)^r x^T M x.
Poly lifted_polynomial(ConeKind kind, const SymMatrix& m, int level);

/// Gram-side half of a membership SDP for n x n matrices at level r.
///
/// Blocks are local (numbered from 0) so that several layouts can be
/// placed side by side in one BlockSdp. Row g of the layout equates the
/// coefficient of rows[g] in the certificate's expansion.
///
/// K: one PSD block over the degree-(r+2) monomials.
/// Q: one PSD(n) block per multiplier x^beta (|beta| = r), then one
///    Nonneg block over the monomials with |beta| = r + 2.
struct LiftedLayout {
  ConeKind kind = ConeKind::K;
  int n = 0;
  int level = 0;
  std::vector<sdp::BlockSpec> blocks;
  std::vector<MultiIndex> rows;
  std::map<MultiIndex, int> row_of;
  std::vector<std::vector<sdp::Entry>> row_entries;

  std::vector<MultiIndex> gram_basis;        // K
  std::vector<MultiIndex> multipliers;       // Q
  std::vector<MultiIndex> scalar_monomials;  // Q

  /// Returns row_entries[g] with every block index shifted by `offset`.
  std::vector<sdp::Entry> shifted_row(int g, int offset) const;
};

LiftedLayout make_layout(ConeKind kind, int n, int level);

}  // namespace copos::cones
