#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <random>
#include <sstream>

#include "copos/block_sdp.hpp"
#include "copos/sandwich.hpp"
#include "copos/solver.hpp"
#include "doctest.h"

using namespace copos::sdp;

namespace {

struct Planted {
  BlockSdp sdp;
  double value = 0.0;
};

Eigen::MatrixXd random_orthogonal(std::mt19937_64& rng, int k) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a(i, j) = g(rng);
  return Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
}

SparseSym to_entries(const BlockSdp& sdp, const BlockMatrix& m) {
  SparseSym out;
  for (std::size_t b = 0; b < sdp.blocks().size(); ++b) {
    const auto& blk = m.block(b);
    if (sdp.blocks()[b].kind == BlockKind::Nonneg) {
      for (int i = 0; i < blk.rows(); ++i) out.push_back({int(b), i, i, blk(i, 0)});
    } else {
      for (int i = 0; i < blk.rows(); ++i)
        for (int j = i; j < blk.cols(); ++j) out.push_back({int(b), i, j, blk(i, j)});
    }
  }
  return out;
}

/// Random block SDP with a planted strictly complementary optimal pair.
/// With `as_psd1`, every Nonneg(k) block is replaced by k PSD(1) blocks
/// carrying the same data, for the differential test.
Planted planted_sdp(std::uint64_t seed, bool with_nonneg, bool as_psd1 = false) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sz(1, 4), rank_pick(0, 4);
  std::uniform_real_distribution<double> pos(0.5, 2.0), coef(-1.0, 1.0);
  std::vector<BlockSpec> specs;
  const int nblocks = with_nonneg ? 3 : 2;
  for (int b = 0; b < nblocks; ++b)
    specs.push_back({with_nonneg && b == nblocks - 1 ? BlockKind::Nonneg : BlockKind::Psd, sz(rng) + 1});

  BlockMatrix x(specs), s(specs);
  for (std::size_t b = 0; b < specs.size(); ++b) {
    const int k = specs[b].size;
    const int split = 1 + rank_pick(rng) % k;  // eigenvalues < split belong to X
    if (specs[b].kind == BlockKind::Nonneg) {
      for (int i = 0; i < k; ++i) (i < split ? x : s).block(b)(i, 0) = pos(rng);
    } else {
      const Eigen::MatrixXd q = random_orthogonal(rng, k);
      Eigen::VectorXd dx = Eigen::VectorXd::Zero(k), ds = Eigen::VectorXd::Zero(k);
      for (int i = 0; i < k; ++i) (i < split ? dx : ds)(i) = pos(rng);
      x.block(b) = q * dx.asDiagonal() * q.transpose();
      s.block(b) = q * ds.asDiagonal() * q.transpose();
    }
  }

  std::vector<BlockSpec> final_specs;
  std::vector<std::pair<int, int>> where;  // (block, index) in the final layout
  for (std::size_t b = 0; b < specs.size(); ++b) {
    if (as_psd1 && specs[b].kind == BlockKind::Nonneg) {
      for (int i = 0; i < specs[b].size; ++i) final_specs.push_back({BlockKind::Psd, 1});
    } else {
      final_specs.push_back(specs[b]);
    }
  }
  auto remap = [&](const SparseSym& a) {
    SparseSym out;
    for (const auto& e : a) {
      int fb = 0;
      for (int b = 0; b < e.block; ++b) fb += (as_psd1 && specs[b].kind == BlockKind::Nonneg) ? specs[b].size : 1;
      if (as_psd1 && specs[e.block].kind == BlockKind::Nonneg)
        out.push_back({fb + e.row, 0, 0, e.value});
      else
        out.push_back({fb, e.row, e.col, e.value});
    }
    return out;
  };

  BlockSdp base;
  for (const auto& sp : specs) base.add_block(sp.kind, sp.size);
  Planted p;
  for (const auto& sp : final_specs) p.sdp.add_block(sp.kind, sp.size);

  const int degree = base.cone_degree();
  const int m = 2 + static_cast<int>(rng() % static_cast<unsigned>(degree));
  BlockMatrix c_dense = s;
  for (int i = 0; i < m; ++i) {
    SparseSym a;
    for (std::size_t b = 0; b < specs.size(); ++b)
      for (int r = 0; r < specs[b].size; ++r)
        for (int c = r; c < specs[b].size; ++c) {
          if (specs[b].kind == BlockKind::Nonneg && r != c) continue;
          if (rng() % 3 == 0) a.push_back({int(b), r, c, coef(rng)});
        }
    const double yi = coef(rng);
    c_dense += base.dense(a) * yi;
    p.sdp.add_constraint(remap(a), base.inner(a, x));
  }
  p.sdp.set_objective(remap(to_entries(base, c_dense)));
  p.value = inner(c_dense, x);
  return p;
}

}  // namespace

TEST_CASE("trivial programs") {
  SUBCASE("fixed scalar") {
    BlockSdp sdp;
    sdp.add_block(BlockKind::Psd, 1);
    sdp.add_constraint({{0, 0, 0, 1.0}}, 3.0);
    sdp.set_objective({{0, 0, 0, 1.0}});
    const auto sol = solve(sdp);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.primal_objective == doctest::Approx(3.0).epsilon(1e-7));
  }
  SUBCASE("negative scalar is infeasible") {
    BlockSdp sdp;
    sdp.add_block(BlockKind::Psd, 1);
    sdp.add_constraint({{0, 0, 0, 1.0}}, -1.0);
    const auto sol = solve(sdp);
    CHECK(sol.status == SolveStatus::PrimalInfeasible);
    CHECK(sol.ray_quality <= 1e-8);
  }
  SUBCASE("AM-GM") {
    BlockSdp sdp;
    sdp.add_block(BlockKind::Psd, 2);
    sdp.add_constraint({{0, 0, 1, 1.0}}, 2.0);
    sdp.set_objective({{0, 0, 0, 1.0}, {0, 1, 1, 1.0}});
    const auto sol = solve(sdp);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.primal_objective == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(sol.x.block(0)(0, 1) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(sol.x.block(0)(0, 0) == doctest::Approx(1.0).epsilon(1e-4));
  }
  SUBCASE("unbounded") {
    BlockSdp sdp;
    sdp.add_block(BlockKind::Nonneg, 2);
    sdp.add_constraint({{0, 1, 1, 1.0}}, 1.0);
    sdp.set_objective({{0, 0, 0, -1.0}});
    CHECK(solve(sdp).status == SolveStatus::DualInfeasibleOrUnbounded);
  }
  SUBCASE("iteration cap gives inconclusive, never a wrong status") {
    BlockSdp sdp;
    sdp.add_block(BlockKind::Psd, 2);
    sdp.add_constraint({{0, 0, 1, 1.0}}, 2.0);
    sdp.set_objective({{0, 0, 0, 1.0}, {0, 1, 1, 1.0}});
    CHECK(solve(sdp, 1e-8, 1).status == SolveStatus::Inconclusive);
  }
}

TEST_CASE("planted corpus") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    CAPTURE(seed);
    const Planted p = planted_sdp(seed, seed % 2 == 0);
    const auto sol = solve(p.sdp);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(std::abs(sol.primal_objective - p.value) <= 1e-6 * std::max(1.0, std::abs(p.value)));
    // weak duality, up to the solver's relative gap tolerance
    CHECK(sol.primal_objective >=
          sol.dual_objective - 1e-8 * (1 + std::abs(sol.primal_objective) + std::abs(sol.dual_objective)));
    for (std::size_t b = 0; b < sol.x.num_blocks(); ++b) {
      if (p.sdp.blocks()[b].kind == BlockKind::Psd)
        CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sol.x.block(b)).eigenvalues().minCoeff() >= -1e-8);
      else
        CHECK(sol.x.block(b).minCoeff() >= -1e-8);
    }
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("repeat solves agree") {
  const Planted p = planted_sdp(99, true);
  const auto a = solve(p.sdp), b = solve(p.sdp);
  REQUIRE(a.status == SolveStatus::Optimal);
  CHECK(std::abs(a.primal_objective - b.primal_objective) <= 2e-8);
}

TEST_CASE("nonneg blocks match PSD(1) blocks") {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    CAPTURE(seed);
    const Planted nn = planted_sdp(seed, true, false);
    const Planted p1 = planted_sdp(seed, true, true);
    CHECK(nn.value == doctest::Approx(p1.value));
    const auto a = solve(nn.sdp), b = solve(p1.sdp);
    REQUIRE(a.status == SolveStatus::Optimal);
    REQUIRE(b.status == SolveStatus::Optimal);
    CHECK(std::abs(a.primal_objective - b.primal_objective) <= 1e-6 * std::max(1.0, std::abs(nn.value)));
  }
}

TEST_CASE("validation") {
  BlockSdp sdp;
  sdp.add_block(BlockKind::Psd, 2);
  sdp.add_block(BlockKind::Nonneg, 2);
  sdp.add_constraint({{0, 0, 1, 1.0}, {1, 1, 1, 1.0}}, 1.0);
  CHECK_NOTHROW(sdp.validate());
  for (const Entry& bad : {Entry{0, 2, 2, 1.0}, Entry{0, 1, 0, 1.0}, Entry{1, 0, 1, 1.0}, Entry{2, 0, 0, 1.0}}) {
    BlockSdp copy = sdp;
    copy.add_constraint({bad}, 1.0);
    CHECK_THROWS_AS(copy.validate(), std::invalid_argument);
  }
  CHECK(sdp.cone_degree() == 4);
}

TEST_CASE("sparse text export round-trips") {
  const Planted p = planted_sdp(5, true);
  std::stringstream ss;
  p.sdp.write_sparse_text(ss);
  CHECK(ss.str().rfind("copos-sdp 1", 0) == 0);
  const BlockSdp back = BlockSdp::read_sparse_text(ss);
  REQUIRE(back.num_constraints() == p.sdp.num_constraints());
  REQUIRE(back.blocks().size() == p.sdp.blocks().size());
  const auto a = solve(p.sdp), b = solve(back);
  CHECK(a.primal_objective == doctest::Approx(b.primal_objective).epsilon(1e-8));
}

TEST_CASE("sandwich diagnostics") {
  BlockSdp sdp;
  sdp.add_block(BlockKind::Psd, 3);
  sdp.add_constraint({{0, 0, 0, 1.0}, {0, 1, 1, 1.0}, {0, 2, 2, 1.0}}, 3.0);
  BlockMatrix x0 = BlockMatrix::identity(sdp.blocks());
  auto rep = sandwich_diagnostics(sdp, x0, 0.5, 2.0);
  CHECK(rep.max_residual == doctest::Approx(0.0));
  CHECK(rep.margin == doctest::Approx(1.0));
  CHECK(rep.interior);
  CHECK(rep.log_radius_ratio == doctest::Approx(std::log(4.0)));

  x0.block(0)(0, 0) = 1.5;
  rep = sandwich_diagnostics(sdp, x0, 0.5, 2.0);
  CHECK(rep.max_residual == doctest::Approx(0.5));
  CHECK(rep.worst_row == 0);
  CHECK_FALSE(rep.interior);

  CHECK_THROWS_AS(sandwich_diagnostics(sdp, BlockMatrix({{BlockKind::Psd, 2}}), 0.5, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(sandwich_diagnostics(sdp, x0, 2.0, 1.0), std::invalid_argument);
}
