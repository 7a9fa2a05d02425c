#include "copos/pathology.hpp"

#include <stdexcept>

#include "copos/graph.hpp"

namespace copos::pathology {

namespace {

relax::ConicProgram empty_program(int m, std::size_t side) {
  relax::ConicProgram p;
  p.m = m;
  p.b.assign(static_cast<std::size_t>(m), Rational(0));
  relax::ConeConstraint con;
  con.c = SymMatrix(side);
  con.a.assign(static_cast<std::size_t>(m), SymMatrix(side));
  p.constraints.push_back(std::move(con));
  return p;
}

Verdict reject(int block, std::string why) { return {false, block, std::move(why)}; }

mpz_class pow_mpz(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// [[a, b], [b, c]] is copositive iff a, c >= 0 and (b >= 0 or b^2 <= ac).
bool copositive_2x2(const Rational& a, const Rational& b, const Rational& c) {
  if (a < 0 || c < 0) return false;
  return b >= 0 || b * b <= a * c;
}

}  // namespace

PathologyInstance khachiyan_cp(int n) {
  if (n < 2) throw std::invalid_argument("khachiyan_cp: n must be >= 2");
  const auto side = static_cast<std::size_t>(2 * n - 1);
  PathologyInstance inst{Example::Ex1, n, empty_program(n, side), {}};
  auto& con = inst.program.constraints.front();
  inst.program.b[n - 1] = 1;
  for (int i = 0; i + 1 < n; ++i) {
    const auto r = static_cast<std::size_t>(2 * i);
    con.a[i].set(r, r, 1);
    con.a[i + 1].set(r, r + 1, -1);
    con.c.set(r + 1, r + 1, -1);
  }
  con.a[n - 1].set(side - 1, side - 1, 1);
  con.c.set(side - 1, side - 1, 2);
  inst.facts = {{"optimal_value", "2"},
                {"matrix_side", std::to_string(side)},
                {"y1_lower_bound", ex1_y1_lower_bound(n).get_str()},
                {"feasible_pattern", "y_i = 2^(2^(n-i))"}};
  return inst;
}

Verdict verify_ex1_necessary(const std::vector<Rational>& y) {
  const int n = static_cast<int>(y.size());
  if (n < 1) return reject(0, "empty vector");
  for (int i = 0; i + 1 < n; ++i) {
    if (y[i] < 0) return reject(i + 1, "diagonal entry y_" + std::to_string(i + 1) + " is negative");
    if (y[i] < y[i + 1] * y[i + 1])
      return reject(i + 1, "y_" + std::to_string(i + 1) + " < y_" + std::to_string(i + 2) + "^2");
  }
  if (y[n - 1] < 2) return reject(n, "y_n < 2");
  return {true, 0, ""};
}

mpz_class ex1_y1_lower_bound(int n) {
  if (n < 1) throw std::invalid_argument("ex1_y1_lower_bound: n must be >= 1");
  return pow_mpz(2, 1ul << (n - 1));
}

SymMatrix c5_matrix() {
  const auto a = apps::Graph::cycle(5).adjacency();
  return (a + SymMatrix::identity(5)) * Rational(2) - SymMatrix::ones(5);
}

SymMatrix c5_padded_matrix() { return SymMatrix::direct_sum(c5_matrix(), SymMatrix(1)); }

PathologyInstance c5_padded_cp() {
  PathologyInstance inst{Example::Ex2, 1, empty_program(1, 7), {}};
  auto& con = inst.program.constraints.front();
  inst.program.b[0] = 1;
  con.c = SymMatrix::direct_sum(c5_padded_matrix(), SymMatrix(1)) * Rational(-1);
  con.a[0].set(6, 6, 1);
  inst.facts = {{"optimal_value", "0"},
                {"matrix_side", "7"},
                {"relaxations", "infeasible at every level (K and Q)"}};
  return inst;
}

PathologyInstance ex3_cp(int n) {
  if (n < 2) throw std::invalid_argument("ex3_cp: n must be >= 2");
  const auto side = static_cast<std::size_t>(2 * n + 6);
  const int m = n + 2;
  PathologyInstance inst{Example::Ex3, n, empty_program(m, side), {}};
  auto& con = inst.program.constraints.front();
  const int wv = 0, zv = n + 1;
  auto yv = [](int i) { return i; };  // y_i (1-based) is variable i
  inst.program.b[wv] = 1;
  inst.program.b[zv] = 1;

  const SymMatrix c5 = apps::Graph::cycle(5).adjacency() + SymMatrix::identity(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) {
      con.a[zv].set(i, j, c5(i, j));
      con.c.set(i, j, 1);
    }
  const Rational two_thirds(2, 3), forty_thirds(40, 3);
  for (int i = 1; i <= n; ++i) {
    const auto r = static_cast<std::size_t>(5 + 2 * (i - 1));
    con.a[yv(i)].set(r, r, 1);
    con.c.set(r + 1, r + 1, -1);
    if (i < n) {
      con.a[yv(i + 1)].set(r, r + 1, -two_thirds);
    } else {
      con.a[zv].set(r, r + 1, -forty_thirds);
      con.a[wv].set(r, r + 1, forty_thirds);
    }
  }
  con.a[wv].set(side - 1, side - 1, 1);
  con.c.set(side - 1, side - 1, 2);
  inst.facts = {{"optimal_value", "4"},
                {"optimal_point", "z = w = 2, y = 0"},
                {"matrix_side", std::to_string(side)},
                {"relaxation_z_lower_bound", "sqrt(5)"},
                {"relaxation_y1_lower_bound", ex3_y1_lower_bound(n).get_str()},
                {"stated_y1_lower_bound", pow_mpz(3, (1ul << n) - 1).get_str()}};
  return inst;
}

relax::SpnWitness ex3_witness(int n) {
  const auto inst = ex3_cp(n);
  const auto side = static_cast<std::size_t>(2 * n + 6);
  const Rational z = Rational(121, 20), w = 6;
  std::vector<Rational> ybar(static_cast<std::size_t>(n + 2), Rational(1));
  ybar.front() = w;
  ybar.back() = z;

  SymMatrix p(side), nn(side);
  const SymMatrix a = apps::Graph::cycle(5).adjacency();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) {
      if (i == j) p.set(i, i, z - 1);
      else if (a(i, j) != 0) nn.set(i, j, z - 1);
      else p.set(i, j, -1);
    }
  for (int i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(5 + 2 * i);
    p.set(r, r, 1);
    p.set(r + 1, r + 1, 1);
    p.set(r, r + 1, Rational(-2, 3));
  }
  p.set(side - 1, side - 1, w - 2);
  auto wit = relax::make_witness(inst.program, ybar, p, nn);
  if (!wit) throw std::logic_error("ex3_witness: explicit decomposition failed its exact check");
  return *wit;
}

Verdict verify_ex3_necessary(const Rational& w, const std::vector<Rational>& y, const Rational& z,
                             const Rational& tol) {
  const int n = static_cast<int>(y.size());
  if (n < 1) return reject(0, "empty vector");
  const Rational zt = z + tol;
  if (zt < 0 || zt * zt < 5) return reject(0, "z < sqrt(5)");
  if (w < 2) return reject(0, "w < 2");
  if (y[n - 1] < 9) return reject(n, "y_n < 9");
  for (int i = 0; i + 1 < n; ++i)
    if (y[i] * 3 < y[i + 1] * y[i + 1])
      return reject(i + 1, "y_" + std::to_string(i + 1) + " < y_" + std::to_string(i + 2) + "^2 / 3");
  return {true, 0, ""};
}

Verdict verify_ex3_cop(const Rational& w, const std::vector<Rational>& y, const Rational& z) {
  const int n = static_cast<int>(y.size());
  if (n < 1) return reject(0, "empty vector");
  if (z < 2) return reject(0, "z < 2: z(A + I) - J is not copositive");
  if (w < 2) return reject(0, "w < 2");
  for (int i = 0; i + 1 < n; ++i)
    if (!copositive_2x2(y[i], -Rational(2, 3) * y[i + 1], 1))
      return reject(i + 1, "block " + std::to_string(i + 1) + " is not copositive");
  if (!copositive_2x2(y[n - 1], -Rational(40, 3) * (z - w), 1))
    return reject(n, "block " + std::to_string(n) + " is not copositive");
  return {true, 0, ""};
}

mpz_class ex3_y1_lower_bound(int n) {
  if (n < 1) throw std::invalid_argument("ex3_y1_lower_bound: n must be >= 1");
  mpq_class y = 9;
  for (int i = n - 1; i >= 1; --i) y = y * y / 3;
  return y.get_num();
}

}  // namespace copos::pathology
