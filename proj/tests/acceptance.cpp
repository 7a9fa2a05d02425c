// Acceptance suite: one PASS/FAIL line per criterion, details indented.
// Exit status is 0 when every criterion passes, or when the failing set is
// contained in the list given with --known-failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "copos/certificate.hpp"
#include "copos/chromatic.hpp"
#include "copos/coeff_bounds.hpp"
#include "copos/membership.hpp"
#include "copos/pathology.hpp"
#include "copos/relaxation.hpp"
#include "copos/sqp.hpp"
#include "copos/stability.hpp"
#include "support.hpp"

using namespace copos;
using cones::ConeKind;

namespace {

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    details_.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { details_.push_back("     " + what); }
  bool ok() const { return ok_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  bool ok_ = true;
  std::vector<std::string> details_;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string verdict_name(cones::Verdict v) { return std::string(cones::to_string(v)); }

mpz_class pow_int(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

void stability_c5(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = apps::stability_bound(apps::Graph::cycle(5), 0, ConeKind::K);
  const double dt = seconds_since(t0);
  c.check(r.ok(), "solver status " + std::string(sdp::to_string(r.relaxation.status)));
  c.check(std::abs(r.value - std::sqrt(5.0)) <= 1e-3, fmt("theta^(0)(C5) = %.9f, sqrt(5) = %.9f", r.value, std::sqrt(5.0)));
  c.check(dt <= 10.0, fmt("runtime %.3f s <= 10 s", dt));
}

void exactness_escape(Criterion& c) {
  for (int r = 0; r <= 1; ++r) {
    const auto v = cones::decide_membership(cones::build_K_membership(pathology::c5_matrix(), r)).verdict;
    c.check(v == cones::Verdict::NotMember, fmt("2(A_C5 + I) - J, K, r=%d: ", r) + verdict_name(v));
  }
  for (int r = 0; r <= 1; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto problem = cones::build_K_membership(pathology::c5_padded_matrix(), r);
    const auto v = cones::decide_membership(problem).verdict;
    c.check(v == cones::Verdict::NotMember, fmt("padded M1 (6x6), K, r=%d: ", r) + verdict_name(v) +
                                                fmt(" (Gram side %d, %.2f s)", problem.layout.blocks[0].size,
                                                    seconds_since(t0)));
  }
  const auto prog = pathology::c5_padded_cp().program;
  for (int r = 0; r <= 1; ++r) {
    const int side = relax::build_cpk_sdp(prog, r, 10.0).sdp.blocks()[0].size;
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = relax::solve_relaxation(prog, r, ConeKind::K, 10.0, 1e-8);
    const double dt = seconds_since(t0);
    c.check(res.status == sdp::SolveStatus::PrimalInfeasible, fmt("padded program, K, r=%d, R=10: ", r) +
                                                                  std::string(sdp::to_string(res.status)) +
                                                                  fmt(" (Gram side %d, %.2f s)", side, dt));
    if (r == 1) c.check(dt <= 60.0, fmt("runtime at r=1 %.2f s <= 60 s", dt));
  }
  c.note("K^(1) membership of the unpadded matrix is expected to fail: it is the Horn matrix up to relabelling");
}

void sqp_closed_forms(Criterion& c) {
  for (int n = 2; n <= 6; ++n) {
    const auto r = apps::sqp_bound(SymMatrix::identity(n), 0, ConeKind::K);
    c.check(r.ok() && std::abs(r.value - 1.0 / n) <= 1e-5, fmt("p_K^(0)(I_%d) = %.9f, expected %.9f", n, r.value, 1.0 / n));
  }
  const auto j = apps::sqp_bound(SymMatrix::ones(4), 0, ConeKind::K);
  c.check(j.ok() && std::abs(j.value - 1.0) <= 1e-5, fmt("p_K^(0)(J_4) = %.9f, expected 1", j.value));
}

void reciprocal_identity(Criterion& c) {
  std::mt19937_64 rng(20240501);
  double worst = 0.0;
  int solved = 0;
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 5;
    const auto s = testing::planted_spn(rng, n, Rational(1 + t % 3, 2));
    for (auto kind : {ConeKind::K, ConeKind::Q}) {
      const auto p = apps::sqp_bound(s.m, 0, kind);
      const auto q = apps::sqp_reciprocal_bound(s.m, 0, kind);
      if (!p.ok() || !q || !q->ok()) {
        c.check(false, fmt("instance %d (n=%d, %s): no solution", t, n, kind == ConeKind::K ? "K" : "Q"));
        continue;
      }
      ++solved;
      worst = std::max(worst, std::abs(p.value * q->value - 1));
    }
  }
  c.check(solved == 100, fmt("%d of 100 (instance, kind) pairs solved", solved));
  c.check(worst <= 1e-3, fmt("max |q p - 1| = %.3g <= 1e-3", worst));
}

void sandwich_monotonicity(Criterion& c) {
  std::mt19937_64 rng(99);
  double kq0 = 0.0, q_below_k = 0.0, k_rise = 0.0;
  int solved = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 4;
    const SymMatrix m = testing::random_symmetric(rng, n, -4, 4);
    const auto prog = apps::sqp_program(m);
    const double box = to_double(apps::sqp_box(m));
    const auto k0 = relax::solve_relaxation(prog, 0, ConeKind::K, box, 1e-8);
    const auto q0 = relax::solve_relaxation(prog, 0, ConeKind::Q, box, 1e-8);
    const auto k1 = relax::solve_relaxation(prog, 1, ConeKind::K, box, 1e-8);
    const auto q1 = relax::solve_relaxation(prog, 1, ConeKind::Q, box, 1e-8);
    const bool ok = k0.status == sdp::SolveStatus::Optimal && q0.status == sdp::SolveStatus::Optimal &&
                    k1.status == sdp::SolveStatus::Optimal && q1.status == sdp::SolveStatus::Optimal;
    if (!ok) continue;
    ++solved;
    kq0 = std::max(kq0, std::abs(k0.value - q0.value));
    q_below_k = std::max({q_below_k, k0.value - q0.value, k1.value - q1.value});
    k_rise = std::max(k_rise, k1.value - k0.value);
  }
  c.check(solved == 100, fmt("%d of 100 boxed instances solved at both kinds and levels", solved));
  c.check(q_below_k <= 1e-6, fmt("max (p_K - p_Q) = %.3g <= 1e-6", q_below_k));
  c.check(k_rise <= 1e-6, fmt("max (p_K^(1) - p_K^(0)) = %.3g <= 1e-6", k_rise));
  c.check(kq0 <= 1e-5, fmt("max |p_K^(0) - p_Q^(0)| = %.3g <= 1e-5", kq0));
}

void value_preservation(Criterion& c) {
  std::vector<SymMatrix> corpus;
  for (int n = 2; n <= 5; ++n) corpus.push_back(SymMatrix::identity(n));
  corpus.push_back(SymMatrix::ones(3));
  corpus.push_back(testing::c5_adjacency_plus_identity());
  std::mt19937_64 rng(6);
  for (int t = 0; t < 14; ++t) corpus.push_back(testing::random_symmetric(rng, 2 + t % 3, -3, 3));
  double worst = 0.0;
  int solved = 0;
  for (const auto& m : corpus) {
    const auto prog = apps::sqp_program(m);
    // |lambda*| <= max |M_ij| < 2R, so the optimum lies inside the box
    const Rational r = apps::sqp_box(m);
    const double box = 2 * to_double(r);
    const auto direct = relax::solve_relaxation(prog, 0, ConeKind::K, box, 1e-8);
    const auto bounded = relax::solve_relaxation(relax::to_bounded(prog, r), 0, ConeKind::K, box, 1e-8);
    if (direct.status != sdp::SolveStatus::Optimal || bounded.status != sdp::SolveStatus::Optimal) continue;
    ++solved;
    worst = std::max(worst, std::abs(direct.value - bounded.value));
  }
  c.check(solved == static_cast<int>(corpus.size()), fmt("%d of %zu instances solved", solved, corpus.size()));
  c.check(worst <= 1e-4, fmt("max |bounded - direct| = %.3g <= 1e-4", worst));
}

void chromatic_soundness(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, apps::Graph>> graphs = {
      {"K2", apps::Graph::complete(2)}, {"K3", apps::Graph::complete(3)}, {"P3", apps::Graph::path(3)},
      {"C5", apps::Graph::cycle(5)}};
  for (const auto& [name, g] : graphs) {
    const int chi = apps::brute_chi(g);
    const auto r = apps::chromatic_bound(g, 0);
    c.check(r.ok() && r.value <= chi + 1e-6,
            fmt("%s: bound %.6f <= chi %d (%s)", name.c_str(), r.value, chi,
                std::string(sdp::to_string(r.relaxation.status)).c_str()));
    bool eq29 = true;
    for (int t = 1; t <= g.size(); ++t) {
      const Rational a = apps::brute_alpha(apps::product_graph(g, t));
      eq29 = eq29 && (t >= chi ? a == g.size() : a < g.size());
    }
    c.check(eq29, fmt("%s: alpha(G_t) = n exactly for t >= chi, t <= n", name.c_str()));
  }
  const double dt = seconds_since(t0);
  c.check(dt <= 300.0, fmt("runtime %.2f s <= 300 s", dt));
}

void pathology_recursion(Criterion& c) {
  std::vector<Rational> pattern = {16, 4, 2};
  c.check(pathology::verify_ex1_necessary(pattern).accepted, "EX1: (16, 4, 2) accepted");
  const auto rej = pathology::verify_ex1_necessary({15, 4, 2});
  c.check(!rej.accepted && rej.failing_block == 1, "EX1: (15, 4, 2) rejected at block 1");
  bool growth = true;
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 5; ++n) {
    std::vector<Rational> y(n);
    for (int i = 0; i < n; ++i) y[i] = pow_int(2, 1ul << (n - 1 - i));
    growth = growth && pathology::verify_ex1_necessary(y).accepted;
    for (int t = 0; t < 300; ++t) {
      y[n - 1] = Rational(18 + static_cast<long>(rng() % 5), 10);
      for (int i = n - 2; i >= 0; --i) {
        y[i] = y[i + 1] * y[i + 1] + Rational(static_cast<long>(rng() % 9) - 2, 8);
        y[i].canonicalize();
      }
      if (pathology::verify_ex1_necessary(y).accepted) growth = growth && y[0] >= pow_int(2, 1ul << (n - 1));
    }
  }
  c.check(growth, "EX1: every accepted y for n <= 5 has y1 >= 2^(2^(n-1))");

  const Rational root5 = rational_from_double(std::sqrt(5.0));
  for (int n = 2; n <= 4; ++n) {
    std::vector<Rational> y(n);
    y[n - 1] = 9;
    for (int i = n - 2; i >= 0; --i) y[i] = y[i + 1] * y[i + 1] / 3;
    c.check(pathology::verify_ex3_necessary(2, y, root5, Rational(1, 1000000000)).accepted &&
                !pathology::verify_ex3_necessary(2, y, 2).accepted &&
                !pathology::verify_ex3_necessary(2, y, Rational(2236, 1000)).accepted,
            fmt("EX3 n=%d: z >= sqrt(5) enforced", n));
    const mpz_class claim = pow_int(3, (1ul << n) - 1);
    c.check(pathology::ex3_y1_lower_bound(n) >= claim,
            fmt("EX3 n=%d: smallest accepted y1 = %s >= 3^(2^n - 1) = %s", n,
                pathology::ex3_y1_lower_bound(n).get_str().c_str(), claim.get_str().c_str()));
  }
  c.note("the stated conditions give y1 >= 3^(2^(n-1)+1); 3^(2^n-1) only matches at n = 2");
}

void certificate_soundness(Criterion& c) {
  std::mt19937_64 rng(777);
  int members = 0;
  double worst_res = 0.0, worst_log2 = -1e9;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 4;
    const auto s = testing::planted_spn(rng, n, Rational(t % 2, 2));
    const auto kind = t % 2 ? ConeKind::Q : ConeKind::K;
    const auto res = cones::decide_membership(cones::build_membership(kind, s.m, 0));
    if (res.verdict != cones::Verdict::Member) continue;
    ++members;
    const auto rep = cones::validate_certificate(s.m, *res.certificate, 1e-6);
    worst_res = std::max(worst_res, rep.residual);
    worst_log2 = std::max(worst_log2, rep.max_entry_log2);
  }
  c.check(members == 100, fmt("%d of 100 planted SPN matrices MEMBER", members));
  c.check(worst_res <= 1e-6, fmt("max exact re-expansion residual %.3g <= 1e-6", worst_res));
  c.check(worst_log2 <= 64.0, fmt("max certificate entry 2^%.2f <= 2^64", worst_log2));
}

void coefficient_bounds(Criterion& c) {
  int checked = 0, failed = 0;
  for (const Poly& p : testing::closed_form_corpus()) {
    ++checked;
    if (!(box_sup(p).exact && coeff_norm(p) <= korda_bound_rhs(p))) ++failed;
    for (const Rational& r : testing::scaled_bound_radii(p.nvars())) {
      ++checked;
      const Rational lhs = max_abs_coefficient(p);
      if (!(ball_sup_squared(p, r).exact && lhs * lhs <= scaled_bound_rhs_squared(p, r))) ++failed;
    }
  }
  c.check(failed == 0, fmt("%d of %d exact inequality checks hold", checked - failed, checked));
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.insert(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--known-failures" && i + 1 < argc) known = parse_list(argv[++i]);
  }

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"Stability bound on C5", stability_c5},
      {"Exactness escape on C5", exactness_escape},
      {"SQP closed forms", sqp_closed_forms},
      {"Reciprocal identity", reciprocal_identity},
      {"Cone sandwich and monotonicity", sandwich_monotonicity},
      {"Bounded-program value preservation", value_preservation},
      {"Chromatic soundness", chromatic_soundness},
      {"Pathology recursion", pathology_recursion},
      {"Certificate soundness", certificate_soundness},
      {"Coefficient-bound lemmas", coefficient_bounds},
  };

  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    const int id = static_cast<int>(k) + 1;
    std::printf("%s [%d] %s (%.2f s)\n", c.ok() ? "PASS" : "FAIL", id, criteria[k].first.c_str(), seconds_since(t0));
    for (const auto& d : c.details()) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
    if (!c.ok()) failed.insert(id);
  }

  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed.size(), criteria.size());
  bool unexpected = false;
  for (int id : failed)
    if (!known.count(id)) unexpected = true;
  if (!known.empty()) {
    for (int id : known)
      if (!failed.count(id)) std::printf("note: criterion %d was listed as a known failure but passed\n", id);
  }
  return unexpected ? 1 : 0;
}
