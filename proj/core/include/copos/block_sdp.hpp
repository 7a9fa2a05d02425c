#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace copos::sdp {

enum class BlockKind { Psd, Nonneg };

struct BlockSpec {
  BlockKind kind;
  int size;
};

/// One stored entry of a block-structured symmetric matrix. For PSD
/// blocks the entry stands for both (row, col) and (col, row); callers
/// always store row <= col. Nonneg blocks are diagonal and use row == col.
struct Entry {
  int block;
  int row;
  int col;
  double value;
};

using SparseSym = std::vector<Entry>;

struct Constraint {
  SparseSym a;
  double rhs = 0.0;
};

/// Dense block-diagonal matrix. A PSD block of size k is a k x k matrix;
/// a Nonneg block of size k is stored as a k x 1 column.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  explicit BlockMatrix(const std::vector<BlockSpec>& blocks);
  static BlockMatrix identity(const std::vector<BlockSpec>& blocks);

  std::size_t num_blocks() const { return parts_.size(); }
  Eigen::MatrixXd& block(std::size_t b) { return parts_[b]; }
  const Eigen::MatrixXd& block(std::size_t b) const { return parts_[b]; }

  BlockMatrix& operator+=(const BlockMatrix& o);
  BlockMatrix& operator-=(const BlockMatrix& o);
  BlockMatrix& operator*=(double c);
  friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
  friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
  friend BlockMatrix operator*(BlockMatrix a, double c) { return a *= c; }

  double max_abs() const;

 private:
  std::vector<Eigen::MatrixXd> parts_;
};

/// Standard-form block SDP:
///   min <C, X>  s.t.  <A_i, X> = b_i,  X in the product of the blocks.
class BlockSdp {
 public:
  int add_block(BlockKind kind, int size);
  /// Returns the constraint index.
  int add_constraint(SparseSym a, double rhs);
  void set_objective(SparseSym c) { objective_ = std::move(c); }
  void add_objective_entry(const Entry& e) { objective_.push_back(e); }

  const std::vector<BlockSpec>& blocks() const { return blocks_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const SparseSym& objective() const { return objective_; }
  std::size_t num_constraints() const { return constraints_.size(); }
  /// Sum of block sizes (the barrier parameter of the cone).
  int cone_degree() const;

  /// Throws std::invalid_argument if an entry falls outside its block or
  /// breaks the storage convention.
  void validate() const;

  double inner(const SparseSym& a, const BlockMatrix& x) const;
  BlockMatrix dense(const SparseSym& a) const;
  bool conforms(const BlockMatrix& x) const;

  /// Plain-text sparse export, one line per nonzero (see README):
  ///   header "copos-sdp 1", then "blocks <k>" with one "<P|N> <size>" per
  ///   line, "constraints <m>" with one rhs per line, then "entries" and
  ///   lines "<constraint> <block> <row> <col> <value>". Constraint index 0
  ///   is the objective and constraint i >= 1 is row i - 1; all indices
  ///   are 1-based, row <= col.
  void write_sparse_text(std::ostream& os) const;
  static BlockSdp read_sparse_text(std::istream& is);

 private:
  void check_entries(const SparseSym& a) const;

  std::vector<BlockSpec> blocks_;
  SparseSym objective_;
  std::vector<Constraint> constraints_;
};

double inner(const BlockMatrix& a, const BlockMatrix& b);

}  // namespace copos::sdp
