#include "copos/conic_program.hpp"

#include <stdexcept>
#include <string>

namespace copos::relax {

SymMatrix ConeConstraint::slack(std::span<const Rational> y) const {
  if (y.size() != a.size()) throw std::invalid_argument("slack: y has the wrong length");
  SymMatrix s = c * Rational(-1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (y[i] != 0) s += a[i] * y[i];
  return s;
}

void ConicProgram::validate() const {
  if (m < 0) throw std::invalid_argument("program: m must be >= 0");
  if (b.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("program: b has " + std::to_string(b.size()) + " entries, expected " +
                                std::to_string(m));
  if (constraints.empty()) throw std::invalid_argument("program: at least one cone constraint is required");
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const auto& con = constraints[k];
    const std::string where = "program: constraint " + std::to_string(k);
    if (con.side() == 0) throw std::invalid_argument(where + " has an empty matrix");
    if (con.a.size() != static_cast<std::size_t>(m))
      throw std::invalid_argument(where + " has " + std::to_string(con.a.size()) + " A matrices, expected " +
                                  std::to_string(m));
    for (const auto& ai : con.a)
      if (ai.size() != con.side()) throw std::invalid_argument(where + ": A_i and C differ in size");
  }
}

Rational ConicProgram::objective(std::span<const Rational> y) const {
  if (y.size() != b.size()) throw std::invalid_argument("objective: y has the wrong length");
  Rational v = 0;
  for (std::size_t i = 0; i < b.size(); ++i) v += b[i] * y[i];
  return v;
}

}  // namespace copos::relax
