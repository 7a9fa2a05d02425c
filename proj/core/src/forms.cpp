#include "copos/forms.hpp"

#include <stdexcept>

namespace copos {

namespace {

Poly form_with_power(const SymMatrix& m, int power) {
  const std::size_t n = m.size();
  Poly p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.add_term(MultiIndex::unit(n, i, 2 * power), m(i, i));
    for (std::size_t j = i + 1; j < n; ++j)
      p.add_term(MultiIndex::unit(n, i, power) + MultiIndex::unit(n, j, power), 2 * m(i, j));
  }
  return p;
}

}  // namespace

Poly quadratic_form(const SymMatrix& m) { return form_with_power(m, 1); }

Poly quartic_form(const SymMatrix& m) { return form_with_power(m, 2); }

Poly polya_lift(const Poly& p, int r, LiftKind kind) {
  if (r < 0) throw std::invalid_argument("polya_lift: level must be >= 0");
  if (r == 0) return p;
  Poly factor = kind == LiftKind::Linear ? Poly::linear_sum(p.nvars()) : Poly::square_sum(p.nvars());
  return factor.pow(static_cast<unsigned>(r)) * p;
}

}  // namespace copos
