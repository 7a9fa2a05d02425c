#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "copos/conic_program.hpp"
#include "copos/intspn.hpp"
#include "copos/rational.hpp"

namespace copos::pathology {

enum class Example { Ex1 = 1, Ex2 = 2, Ex3 = 3 };

struct PathologyInstance {
  Example kind = Example::Ex1;
  int n = 0;
  relax::ConicProgram program;
  /// Analytic facts as printable key/value pairs (exact numbers as text).
  std::vector<std::pair<std::string, std::string>> facts;
};

/// Block diagonal M_y = [[y_1, -y_2], [-y_2, 1]] + ... + [y_n - 2] of side
/// 2n - 1; minimise y_n. Optimal value 2.
PathologyInstance khachiyan_cp(int n);

struct Verdict {
  bool accepted = false;
  int failing_block = 0;  // 1-based, 0 when accepted
  std::string reason;
};

/// y_i >= 0, y_n >= 2 and y_i >= y_{i+1}^2, all exact.
Verdict verify_ex1_necessary(const std::vector<Rational>& y);
/// 2^(2^(n-1)), the smallest y_1 the recursion allows.
mpz_class ex1_y1_lower_bound(int n);

/// M_1 = 2(A_C5 + I) - J padded with a zero row/column, then (+) [y];
/// side 7, minimise y. Optimal value 0.
PathologyInstance c5_padded_cp();
SymMatrix c5_matrix();         // 2(A_C5 + I) - J
SymMatrix c5_padded_matrix();  // M_1, 6 x 6

/// Variables ordered (w, y_1, ..., y_n, z); minimise z + w over the side
/// 2n + 6 matrix z(A_C5 + I) - J (+) M~_wyz (+) [w - 2].
PathologyInstance ex3_cp(int n);
/// Exact decomposition at z = 6 + 1/20, w = 6, y = 1 with lambda_min(P) >= 1/3.
relax::SpnWitness ex3_witness(int n);

/// Conditions the K^(0) relaxation imposes: z >= sqrt(5) - tol, w >= 2,
/// y_n >= 9 and y_i >= y_{i+1}^2 / 3. Checked exactly (z via squares).
Verdict verify_ex3_necessary(const Rational& w, const std::vector<Rational>& y, const Rational& z,
                             const Rational& tol = Rational(0));
/// Exact copositivity of M_wyz itself: every 2 x 2 block copositive,
/// z >= 2 and w >= 2.
Verdict verify_ex3_cop(const Rational& w, const std::vector<Rational>& y, const Rational& z);
/// Smallest y_1 allowed by verify_ex3_necessary: y_n = 9 pushed through
/// y_i = y_{i+1}^2 / 3, which equals 3^(2^(n-1) + 1).
mpz_class ex3_y1_lower_bound(int n);

}  // namespace copos::pathology
