#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "copos/block_sdp.hpp"
#include "copos/lifted_layout.hpp"
#include "copos/multi_index.hpp"
#include "copos/poly.hpp"
#include "copos/sym_matrix.hpp"

namespace copos::cones {

struct CertificateProvenance {
  double feas_tol = 0.0;
  double gap_tol = 0.0;
  int iterations = 0;
  std::string solver_status;
};

/// Gram data witnessing M in K^(r) or Q^(r).
///
/// K: gram[0] over gram_bases[0] (the degree-(r+2) monomials).
/// Q: gram[k] is the n x n Gram of sigma_beta for beta = multipliers[k],
///    gram_bases[k] is [x]_1; scalars pair with scalar_monomials.
struct SosCertificate {
  ConeKind kind = ConeKind::K;
  int level = 0;
  int n = 0;
  std::vector<MultiIndex> multipliers;
  std::vector<std::vector<MultiIndex>> gram_bases;
  std::vector<Eigen::MatrixXd> gram;
  std::vector<MultiIndex> scalar_monomials;
  std::vector<double> scalars;
  CertificateProvenance provenance;

  /// Exact expansion with every double read as the rational it encodes.
  Poly expand() const;
};

/// Reads the certificate for one cone constraint out of a block point;
/// `block_offset` is where the layout's blocks start in x.
SosCertificate extract_certificate(const LiftedLayout& layout, const sdp::BlockMatrix& x,
                                   int block_offset = 0);

struct CertificateReport {
  double residual = 0.0;  // coefficient norm of lift(M) - expansion
  double min_gram_eigenvalue = 0.0;
  double min_scalar = 0.0;  // +inf when there are no scalars
  double max_entry = 0.0;
  double max_entry_log2 = 0.0;
  bool valid = false;
};

/// Throws std::invalid_argument when the certificate's shape does not
/// match M and its own kind/level.
CertificateReport validate_certificate(const SymMatrix& m, const SosCertificate& cert, double tol);

/// JSON document (see README): kind, level, n, gram_blocks with basis and
/// row-major entries, scalars, provenance.
void write_certificate(std::ostream& os, const SosCertificate& cert);
SosCertificate read_certificate(std::istream& is);

}  // namespace copos::cones
