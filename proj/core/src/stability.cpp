#include "copos/stability.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace copos::apps {

SymMatrix ms_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  SymMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, i, Rational(1) / g.weights()[i]);
  for (auto [i, j] : g.edges()) b.set(i, j, (b(i, i) + b(j, j)) / 2);
  return b;
}

bool in_ms_family(const Graph& g, const SymMatrix& b) {
  const auto n = static_cast<std::size_t>(g.size());
  if (b.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != Rational(1) / g.weights()[i]) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.adjacent(static_cast<int>(i), static_cast<int>(j))) {
        if (b(i, j) < (b(i, i) + b(j, j)) / 2) return false;
      } else if (b(i, j) != 0) {
        return false;
      }
    }
  }
  return true;
}

Rational stability_box(const Graph& g) {
  Rational wmax = 1;
  if (!g.weights().empty()) wmax = *std::max_element(g.weights().begin(), g.weights().end());
  return Rational(g.size()) * wmax + 1;
}

BoundResult stability_bound(const Graph& g, int level, ConeKind kind, double eps, const std::optional<SymMatrix>& b) {
  if (g.size() < 1) throw std::invalid_argument("stability_bound: empty graph");
  const SymMatrix bm = b ? *b : ms_matrix(g);
  if (b && !in_ms_family(g, bm)) throw std::invalid_argument("stability_bound: B is not in the family M(G, w)");
  BoundResult out;
  out.relaxation =
      relax::solve_relaxation(sqp_reciprocal_program(bm), level, kind, to_double(stability_box(g)), eps);
  out.value = out.ok() ? out.relaxation.value : std::numeric_limits<double>::quiet_NaN();
  return out;
}

BoundResult theta_r(const Graph& g, int level, double eps, const std::optional<SymMatrix>& b) {
  return stability_bound(g, level, ConeKind::K, eps, b);
}

BoundResult nu_r(const Graph& g, int level, double eps, const std::optional<SymMatrix>& b) {
  return stability_bound(g, level, ConeKind::Q, eps, b);
}

}  // namespace copos::apps
