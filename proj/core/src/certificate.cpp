#include "copos/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "copos/coeff_bounds.hpp"
#include "copos/rational.hpp"

namespace copos::cones {

namespace {

using nlohmann::json;

std::vector<MultiIndex> unit_basis(int n) {
  std::vector<MultiIndex> out;
  for (int i = 0; i < n; ++i) out.push_back(MultiIndex::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
  return out;
}

void add_gram(Poly& p, const Eigen::MatrixXd& g, const std::vector<MultiIndex>& basis, const MultiIndex* shift) {
  const auto k = basis.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Rational v = rational_from_double(a == b ? g(a, a) : 0.5 * (g(a, b) + g(b, a)));
      if (v == 0) continue;
      if (a != b) v *= 2;
      MultiIndex gamma = basis[a] + basis[b];
      if (shift) gamma = gamma + *shift;
      p.add_term(gamma, v);
    }
}

json index_json(const MultiIndex& a) { return json(a.exponents()); }

MultiIndex index_from_json(const json& j, int n) {
  auto v = j.get<std::vector<int>>();
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("certificate: exponent vector of wrong length");
  for (int e : v)
    if (e < 0) throw std::invalid_argument("certificate: negative exponent");
  return MultiIndex(std::move(v));
}

}  // namespace

Poly SosCertificate::expand() const {
  Poly p(static_cast<std::size_t>(n));
  if (kind == ConeKind::K) {
    if (!gram.empty()) add_gram(p, gram[0], gram_bases[0], nullptr);
  } else {
    for (std::size_t k = 0; k < gram.size(); ++k) add_gram(p, gram[k], gram_bases[k], &multipliers[k]);
  }
  for (std::size_t s = 0; s < scalars.size(); ++s) {
    const Rational v = rational_from_double(scalars[s]);
    if (v != 0) p.add_term(scalar_monomials[s], v);
  }
  return p;
}

SosCertificate extract_certificate(const LiftedLayout& layout, const sdp::BlockMatrix& x, int block_offset) {
  SosCertificate cert;
  cert.kind = layout.kind;
  cert.level = layout.level;
  cert.n = layout.n;
  auto blk = [&](std::size_t i) -> const Eigen::MatrixXd& { return x.block(block_offset + i); };
  if (layout.kind == ConeKind::K) {
    cert.gram_bases.push_back(layout.gram_basis);
    cert.gram.push_back(blk(0));
    return cert;
  }
  cert.multipliers = layout.multipliers;
  const auto units = unit_basis(layout.n);
  for (std::size_t k = 0; k < layout.multipliers.size(); ++k) {
    cert.gram_bases.push_back(units);
    cert.gram.push_back(blk(k));
  }
  cert.scalar_monomials = layout.scalar_monomials;
  const Eigen::MatrixXd& c = blk(layout.multipliers.size());
  cert.scalars.assign(c.data(), c.data() + c.size());
  return cert;
}

CertificateReport validate_certificate(const SymMatrix& m, const SosCertificate& cert, double tol) {
  if (static_cast<int>(m.size()) != cert.n)
    throw std::invalid_argument("validate_certificate: matrix side does not match certificate");
  if (cert.level < 0) throw std::invalid_argument("validate_certificate: negative level");
  const auto layout = make_layout(cert.kind, cert.n, cert.level);
  const std::size_t expected_blocks = cert.kind == ConeKind::K ? 1 : layout.multipliers.size();
  if (cert.gram.size() != expected_blocks || cert.gram_bases.size() != expected_blocks)
    throw std::invalid_argument("validate_certificate: wrong number of Gram blocks");
  for (std::size_t k = 0; k < cert.gram.size(); ++k) {
    const auto side = static_cast<Eigen::Index>(cert.gram_bases[k].size());
    if (cert.gram[k].rows() != side || cert.gram[k].cols() != side)
      throw std::invalid_argument("validate_certificate: Gram block does not match its basis");
    const int want = cert.kind == ConeKind::K ? cert.level + 2 : 1;
    for (const auto& a : cert.gram_bases[k])
      if (static_cast<int>(a.nvars()) != cert.n || a.degree() != want)
        throw std::invalid_argument("validate_certificate: basis monomial has wrong shape");
  }
  if (cert.kind == ConeKind::Q) {
    if (cert.multipliers.size() != expected_blocks)
      throw std::invalid_argument("validate_certificate: multiplier list does not match Gram blocks");
    for (const auto& b : cert.multipliers)
      if (static_cast<int>(b.nvars()) != cert.n || b.degree() != cert.level)
        throw std::invalid_argument("validate_certificate: multiplier has wrong degree");
  }
  if (cert.scalars.size() != cert.scalar_monomials.size())
    throw std::invalid_argument("validate_certificate: scalar list does not match monomials");
  for (const auto& s : cert.scalar_monomials)
    if (static_cast<int>(s.nvars()) != cert.n || s.degree() != cert.level + 2)
      throw std::invalid_argument("validate_certificate: scalar monomial has wrong degree");

  CertificateReport rep;
  const Poly diff = lifted_polynomial(cert.kind, m, cert.level) - cert.expand();
  rep.residual = to_double(coeff_norm(diff));

  rep.min_gram_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& g : cert.gram) {
    const Eigen::MatrixXd sym = 0.5 * (g + g.transpose());
    if (sym.size() == 0) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    rep.min_gram_eigenvalue = std::min(rep.min_gram_eigenvalue, es.eigenvalues()(0));
    rep.max_entry = std::max(rep.max_entry, g.cwiseAbs().maxCoeff());
  }
  rep.min_scalar = std::numeric_limits<double>::infinity();
  for (double s : cert.scalars) {
    rep.min_scalar = std::min(rep.min_scalar, s);
    rep.max_entry = std::max(rep.max_entry, std::abs(s));
  }
  rep.max_entry_log2 = rep.max_entry > 0 ? std::log2(rep.max_entry) : -std::numeric_limits<double>::infinity();
  rep.valid = rep.residual <= tol && rep.min_gram_eigenvalue >= -tol && rep.min_scalar >= -tol;
  return rep;
}

void write_certificate(std::ostream& os, const SosCertificate& cert) {
  json j;
  j["format"] = "copos-certificate";
  j["version"] = 1;
  j["kind"] = std::string(to_string(cert.kind));
  j["level"] = cert.level;
  j["n"] = cert.n;
  json blocks = json::array();
  for (std::size_t k = 0; k < cert.gram.size(); ++k) {
    json b;
    if (cert.kind == ConeKind::Q) b["multiplier"] = index_json(cert.multipliers[k]);
    json basis = json::array();
    for (const auto& a : cert.gram_bases[k]) basis.push_back(index_json(a));
    b["basis"] = basis;
    const auto& g = cert.gram[k];
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(g.size()));
    for (Eigen::Index r = 0; r < g.rows(); ++r)
      for (Eigen::Index c = 0; c < g.cols(); ++c) entries.push_back(g(r, c));
    b["entries"] = entries;
    blocks.push_back(b);
  }
  j["gram_blocks"] = blocks;
  json scalars = json::array();
  for (std::size_t s = 0; s < cert.scalars.size(); ++s)
    scalars.push_back({{"monomial", index_json(cert.scalar_monomials[s])}, {"value", cert.scalars[s]}});
  j["scalars"] = scalars;
  j["provenance"] = {{"feas_tol", cert.provenance.feas_tol},
                     {"gap_tol", cert.provenance.gap_tol},
                     {"iterations", cert.provenance.iterations},
                     {"solver_status", cert.provenance.solver_status}};
  os << j.dump(1) << '\n';
}

SosCertificate read_certificate(std::istream& is) {
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("certificate: ") + e.what());
  }
  try {
    SosCertificate cert;
    cert.kind = parse_cone_kind(j.at("kind").get<std::string>());
    cert.level = j.at("level").get<int>();
    cert.n = j.at("n").get<int>();
    if (cert.n < 1 || cert.level < 0) throw std::invalid_argument("certificate: bad n or level");
    for (const auto& b : j.at("gram_blocks")) {
      if (cert.kind == ConeKind::Q) cert.multipliers.push_back(index_from_json(b.at("multiplier"), cert.n));
      std::vector<MultiIndex> basis;
      for (const auto& a : b.at("basis")) basis.push_back(index_from_json(a, cert.n));
      const auto entries = b.at("entries").get<std::vector<double>>();
      const auto k = static_cast<Eigen::Index>(basis.size());
      if (static_cast<Eigen::Index>(entries.size()) != k * k)
        throw std::invalid_argument("certificate: Gram entry count does not match basis");
      Eigen::MatrixXd g(k, k);
      for (Eigen::Index r = 0; r < k; ++r)
        for (Eigen::Index c = 0; c < k; ++c) g(r, c) = entries[static_cast<std::size_t>(r * k + c)];
      cert.gram_bases.push_back(std::move(basis));
      cert.gram.push_back(std::move(g));
    }
    if (j.contains("scalars"))
      for (const auto& s : j.at("scalars")) {
        cert.scalar_monomials.push_back(index_from_json(s.at("monomial"), cert.n));
        cert.scalars.push_back(s.at("value").get<double>());
      }
    if (j.contains("provenance")) {
      const auto& p = j.at("provenance");
      cert.provenance.feas_tol = p.value("feas_tol", 0.0);
      cert.provenance.gap_tol = p.value("gap_tol", 0.0);
      cert.provenance.iterations = p.value("iterations", 0);
      cert.provenance.solver_status = p.value("solver_status", std::string());
    }
    return cert;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("certificate: ") + e.what());
  }
}

}  // namespace copos::cones
