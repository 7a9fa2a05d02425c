#include "copos/block_sdp.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace copos::sdp {

BlockMatrix::BlockMatrix(const std::vector<BlockSpec>& blocks) {
  parts_.reserve(blocks.size());
  for (const auto& b : blocks) {
    if (b.kind == BlockKind::Psd)
      parts_.emplace_back(Eigen::MatrixXd::Zero(b.size, b.size));
    else
      parts_.emplace_back(Eigen::MatrixXd::Zero(b.size, 1));
  }
}

BlockMatrix BlockMatrix::identity(const std::vector<BlockSpec>& blocks) {
  BlockMatrix m(blocks);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].kind == BlockKind::Psd)
      m.parts_[b].setIdentity();
    else
      m.parts_[b].setOnes();
  }
  return m;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& o) {
  for (std::size_t b = 0; b < parts_.size(); ++b) parts_[b] += o.parts_[b];
  return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& o) {
  for (std::size_t b = 0; b < parts_.size(); ++b) parts_[b] -= o.parts_[b];
  return *this;
}

BlockMatrix& BlockMatrix::operator*=(double c) {
  for (auto& p : parts_) p *= c;
  return *this;
}

double BlockMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& p : parts_)
    if (p.size()) m = std::max(m, p.cwiseAbs().maxCoeff());
  return m;
}

double inner(const BlockMatrix& a, const BlockMatrix& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.num_blocks(); ++k) s += a.block(k).cwiseProduct(b.block(k)).sum();
  return s;
}

int BlockSdp::add_block(BlockKind kind, int size) {
  if (size <= 0) throw std::invalid_argument("BlockSdp: block size must be positive");
  blocks_.push_back({kind, size});
  return static_cast<int>(blocks_.size()) - 1;
}

int BlockSdp::add_constraint(SparseSym a, double rhs) {
  constraints_.push_back({std::move(a), rhs});
  return static_cast<int>(constraints_.size()) - 1;
}

int BlockSdp::cone_degree() const {
  int d = 0;
  for (const auto& b : blocks_) d += b.size;
  return d;
}

void BlockSdp::check_entries(const SparseSym& a) const {
  for (const auto& e : a) {
    if (e.block < 0 || e.block >= static_cast<int>(blocks_.size()))
      throw std::invalid_argument("BlockSdp: entry references missing block");
    const auto& spec = blocks_[e.block];
    if (e.row < 0 || e.col < e.row || e.col >= spec.size)
      throw std::invalid_argument("BlockSdp: entry index outside block or below diagonal");
    if (spec.kind == BlockKind::Nonneg && e.row != e.col)
      throw std::invalid_argument("BlockSdp: off-diagonal entry in a nonnegative block");
    if (!std::isfinite(e.value)) throw std::invalid_argument("BlockSdp: non-finite entry");
  }
}

void BlockSdp::validate() const {
  check_entries(objective_);
  for (const auto& c : constraints_) {
    check_entries(c.a);
    if (!std::isfinite(c.rhs)) throw std::invalid_argument("BlockSdp: non-finite right-hand side");
  }
}

double BlockSdp::inner(const SparseSym& a, const BlockMatrix& x) const {
  double s = 0.0;
  for (const auto& e : a) {
    if (blocks_[e.block].kind == BlockKind::Nonneg)
      s += e.value * x.block(e.block)(e.row, 0);
    else if (e.row == e.col)
      s += e.value * x.block(e.block)(e.row, e.row);
    else
      s += e.value * (x.block(e.block)(e.row, e.col) + x.block(e.block)(e.col, e.row));
  }
  return s;
}

BlockMatrix BlockSdp::dense(const SparseSym& a) const {
  BlockMatrix m(blocks_);
  for (const auto& e : a) {
    auto& blk = m.block(e.block);
    if (blocks_[e.block].kind == BlockKind::Nonneg) {
      blk(e.row, 0) += e.value;
    } else {
      blk(e.row, e.col) += e.value;
      if (e.row != e.col) blk(e.col, e.row) += e.value;
    }
  }
  return m;
}

bool BlockSdp::conforms(const BlockMatrix& x) const {
  if (x.num_blocks() != blocks_.size()) return false;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& blk = x.block(b);
    const int k = blocks_[b].size;
    if (blocks_[b].kind == BlockKind::Psd) {
      if (blk.rows() != k || blk.cols() != k) return false;
    } else if (blk.rows() != k || blk.cols() != 1) {
      return false;
    }
  }
  return true;
}

void BlockSdp::write_sparse_text(std::ostream& os) const {
  const auto old_prec = os.precision(std::numeric_limits<double>::max_digits10);
  os << "copos-sdp 1\n";
  os << "blocks " << blocks_.size() << "\n";
  for (const auto& b : blocks_) os << (b.kind == BlockKind::Psd ? "P " : "N ") << b.size << "\n";
  os << "constraints " << constraints_.size() << "\n";
  for (const auto& c : constraints_) os << c.rhs << "\n";
  os << "entries\n";
  auto dump = [&](int idx, const SparseSym& a) {
    for (const auto& e : a)
      if (e.value != 0.0)
        os << idx << " " << e.block + 1 << " " << e.row + 1 << " " << e.col + 1 << " " << e.value << "\n";
  };
  dump(0, objective_);
  for (std::size_t i = 0; i < constraints_.size(); ++i) dump(static_cast<int>(i) + 1, constraints_[i].a);
  os.precision(old_prec);
}

BlockSdp BlockSdp::read_sparse_text(std::istream& is) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("sparse SDP text: " + what); };
  std::string tag;
  int version = 0;
  if (!(is >> tag >> version) || tag != "copos-sdp" || version != 1) fail("bad header");
  std::size_t nb = 0;
  if (!(is >> tag >> nb) || tag != "blocks") fail("expected 'blocks'");
  BlockSdp sdp;
  for (std::size_t b = 0; b < nb; ++b) {
    std::string kind;
    int size = 0;
    if (!(is >> kind >> size)) fail("truncated block list");
    if (kind == "P")
      sdp.add_block(BlockKind::Psd, size);
    else if (kind == "N")
      sdp.add_block(BlockKind::Nonneg, size);
    else
      fail("unknown block kind '" + kind + "'");
  }
  std::size_t m = 0;
  if (!(is >> tag >> m) || tag != "constraints") fail("expected 'constraints'");
  for (std::size_t i = 0; i < m; ++i) {
    double rhs = 0.0;
    if (!(is >> rhs)) fail("truncated right-hand side list");
    sdp.add_constraint({}, rhs);
  }
  if (!(is >> tag) || tag != "entries") fail("expected 'entries'");
  int idx, blk, row, col;
  double v;
  while (is >> idx >> blk >> row >> col >> v) {
    Entry e{blk - 1, row - 1, col - 1, v};
    if (idx == 0)
      sdp.objective_.push_back(e);
    else if (idx >= 1 && static_cast<std::size_t>(idx) <= m)
      sdp.constraints_[idx - 1].a.push_back(e);
    else
      fail("constraint index out of range");
  }
  sdp.validate();
  return sdp;
}

}  // namespace copos::sdp
