#include "copos/chromatic.hpp"

#include <limits>
#include <stdexcept>

namespace copos::apps {

namespace {

Rational n_squared(const Graph& g) { return Rational(g.size()) * g.size(); }

}  // namespace

SymMatrix chromatic_matrix(const Graph& g, int t, const Rational& y, const Rational& z) {
  const int n = g.size();
  if (t < 1 || t > n) throw std::invalid_argument("chromatic_matrix: t out of range");
  const auto side = static_cast<std::size_t>(n * t);
  const Graph gt = product_graph(g, t);
  const SymMatrix ones = SymMatrix::ones(side);
  SymMatrix core = (SymMatrix::identity(side) + gt.adjacency()) * Rational(n) - ones;
  return ones * ((Rational(t) - y) / n_squared(g)) + core * z;
}

relax::ConicProgram chromatic_program(const Graph& g) {
  const int n = g.size();
  if (n < 1) throw std::invalid_argument("chromatic_program: empty graph");
  relax::ConicProgram p;
  p.m = 2;
  p.b = {Rational(-1), Rational(0)};
  for (int t = 1; t <= n; ++t) {
    const auto side = static_cast<std::size_t>(n * t);
    const Graph gt = product_graph(g, t);
    const SymMatrix ones = SymMatrix::ones(side);
    relax::ConeConstraint con;
    con.a.push_back(ones * (Rational(-1) / n_squared(g)));
    con.a.push_back((SymMatrix::identity(side) + gt.adjacency()) * Rational(n) - ones);
    con.c = ones * (Rational(-t) / n_squared(g));
    p.constraints.push_back(std::move(con));
  }
  return p;
}

Rational chromatic_box(const Graph& g) { return n_squared(g) + 1; }

relax::SpnWitness chromatic_witness(const Graph& g, int t) {
  const int n = g.size();
  const auto side = static_cast<std::size_t>(n * t);
  const Graph gt = product_graph(g, t);
  const SymMatrix p = SymMatrix::identity(side);
  const SymMatrix nn = SymMatrix::ones(side) * (Rational(t) / n_squared(g)) + gt.adjacency() * Rational(n) +
                       SymMatrix::identity(side) * Rational(n - 1);
  auto w = relax::make_witness(chromatic_program(g), {-n_squared(g), Rational(1)}, p, nn, t - 1);
  if (!w) throw std::logic_error("chromatic_witness: the explicit decomposition failed its exact check");
  return *w;
}

BoundResult chromatic_bound(const Graph& g, int level, ConeKind kind, double eps) {
  const Rational box = chromatic_box(g);
  BoundResult out;
  out.relaxation = relax::solve_relaxation(relax::to_bounded(chromatic_program(g), box), level, kind,
                                           to_double(box), eps);
  out.value = out.ok() ? -out.relaxation.value : std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace copos::apps
