#pragma once

#include <optional>

#include "copos/graph.hpp"
#include "copos/sqp.hpp"

namespace copos::apps {

/// B_ii = 1/w_i, B_ij = (B_ii + B_jj)/2 on edges, 0 elsewhere.
SymMatrix ms_matrix(const Graph& g);
/// True when B has B_ii = 1/w_i, B_ij >= (B_ii + B_jj)/2 on edges and
/// zeros off the edge set.
bool in_ms_family(const Graph& g, const SymMatrix& b);

/// n * max w + 1: at t = n * max w the matrix tB - J is diagonally
/// dominant after moving the nonnegative edge entries to N.
Rational stability_box(const Graph& g);

/// min{t : tB - J in cone}; kind K gives theta^(r), kind Q gives nu^(r).
/// B defaults to ms_matrix(g) and is checked against the family otherwise.
BoundResult stability_bound(const Graph& g, int level, ConeKind kind, double eps = 1e-8,
                            const std::optional<SymMatrix>& b = std::nullopt);
BoundResult theta_r(const Graph& g, int level, double eps = 1e-8, const std::optional<SymMatrix>& b = std::nullopt);
BoundResult nu_r(const Graph& g, int level, double eps = 1e-8, const std::optional<SymMatrix>& b = std::nullopt);

}  // namespace copos::apps
