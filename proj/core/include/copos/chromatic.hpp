#pragma once

#include "copos/graph.hpp"
#include "copos/intspn.hpp"
#include "copos/sqp.hpp"

namespace copos::apps {

/// Variables (y, z); minimise -y subject to, for t = 1..n,
///   ((t - y)/n^2) J + z (n (I + A_{G_t}) - J)  copositive  (side n t).
relax::ConicProgram chromatic_program(const Graph& g);
/// n^2 + 1, covering (chi(G), 1) and the interior point (-n^2, 1).
Rational chromatic_box(const Graph& g);

/// Slack matrix of constraint t (1-based) at (y, z).
SymMatrix chromatic_matrix(const Graph& g, int t, const Rational& y, const Rational& z);

/// At (y, z) = (-n^2, 1): P = I, N = (t/n^2) J + n A_{G_t} + (n - 1) I.
relax::SpnWitness chromatic_witness(const Graph& g, int t);

/// max y over the relaxed program after to_bounded. The relaxation is an
/// inner approximation, so the value never exceeds chi(G).
BoundResult chromatic_bound(const Graph& g, int level, ConeKind kind = ConeKind::Q, double eps = 1e-8);

}  // namespace copos::apps
