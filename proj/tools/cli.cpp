#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "copos/chromatic.hpp"
#include "copos/io.hpp"
#include "copos/membership.hpp"
#include "copos/pathology.hpp"
#include "copos/sqp.hpp"
#include "copos/stability.hpp"

namespace copos::cli {

namespace {

using cones::ConeKind;
using io::Report;

struct RunConfig {
  std::string input;
  std::string second_input;
  std::string output;
  std::string cone = "K";
  int level = 0;
  double eps = 0.0;  // 0 picks the command's default
  double box = 1e6;
  bool reciprocal = false;
  int example = 1;
  int n = 3;
  int samples = 0;
  unsigned long long seed = 1;
};

std::istringstream open_input(const std::string& path) { return std::istringstream(io::read_file(path)); }

ConeKind cone_of(const RunConfig& c) { return cones::parse_cone_kind(c.cone); }

void check_common(const RunConfig& c) {
  if (c.level < 0) throw std::invalid_argument("--level must be >= 0");
  if (c.eps < 0) throw std::invalid_argument("--eps must be positive");
  if (!(c.box > 0)) throw std::invalid_argument("--box must be positive");
}

int exit_for(sdp::SolveStatus s) {
  switch (s) {
    case sdp::SolveStatus::Optimal: return kSolved;
    case sdp::SolveStatus::PrimalInfeasible:
    case sdp::SolveStatus::DualInfeasibleOrUnbounded: return kInfeasible;
    case sdp::SolveStatus::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

void add_relaxation(Report& rep, const relax::RelaxationResult& r) {
  rep.add("status", std::string(sdp::to_string(r.status)));
  rep.add("iterations", r.iterations);
  rep.add("primal_residual", r.primal_residual);
  rep.add("dual_residual", r.dual_residual);
  rep.add("gap", r.gap);
  rep.add("max_iterate_magnitude", r.max_iterate_magnitude);
  if (r.status == sdp::SolveStatus::Optimal) {
    rep.add("certificates_valid", r.certificates_valid ? "true" : "false");
    double worst = 0.0, biggest = 0.0;
    for (const auto& c : r.reports) {
      worst = std::max(worst, c.residual);
      biggest = std::max(biggest, c.max_entry);
    }
    rep.add("certificate_residual", worst);
    rep.add("certificate_max_entry", biggest);
  } else {
    rep.add("ray_quality", r.ray_quality);
  }
  if (!r.message.empty()) rep.add("message", r.message);
}

void write_certificates(const std::string& prefix, const std::vector<cones::SosCertificate>& certs) {
  for (std::size_t k = 0; k < certs.size(); ++k) {
    const std::string path = certs.size() == 1 ? prefix : prefix + "." + std::to_string(k);
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write '" + path + "'");
    cones::write_certificate(f, certs[k]);
  }
}

int cmd_membership(const RunConfig& c, std::ostream& out) {
  check_common(c);
  auto in = open_input(c.input);
  const SymMatrix m = io::read_matrix(in);
  const double eps = c.eps > 0 ? c.eps : 1e-6;
  const auto problem = cones::build_membership(cone_of(c), m, c.level);
  const auto res = cones::decide_membership(problem, eps);
  Report rep;
  rep.add("command", "membership");
  rep.add("cone", std::string(cones::to_string(problem.kind)));
  rep.add("level", c.level);
  rep.add("n", static_cast<int>(m.size()));
  rep.add("verdict", std::string(cones::to_string(res.verdict)));
  rep.add("solver_status", std::string(sdp::to_string(res.solver_status)));
  rep.add("iterations", res.iterations);
  if (res.report) {
    rep.add("residual", res.report->residual);
    rep.add("min_gram_eigenvalue", res.report->min_gram_eigenvalue);
    rep.add("min_scalar", res.report->min_scalar);
    rep.add("max_entry", res.report->max_entry);
  }
  if (res.verdict == cones::Verdict::NotMember) rep.add("ray_quality", res.ray_quality);
  if (!res.message.empty()) rep.add("message", res.message);
  if (!c.output.empty() && res.certificate && res.verdict == cones::Verdict::Member) {
    write_certificates(c.output, {*res.certificate});
    rep.add("certificate_file", c.output);
  }
  rep.write(out);
  return res.verdict == cones::Verdict::Inconclusive ? kInconclusive : kSolved;
}

int cmd_relax(const RunConfig& c, std::ostream& out) {
  check_common(c);
  auto in = open_input(c.input);
  const auto prog = io::read_program(in);
  const auto res = relax::solve_relaxation(prog, c.level, cone_of(c), c.box, c.eps > 0 ? c.eps : 1e-8);
  Report rep;
  rep.add("command", "relax");
  rep.add("cone", c.cone);
  rep.add("level", c.level);
  rep.add("box", c.box);
  if (res.status == sdp::SolveStatus::Optimal) {
    rep.add("value", res.value);
    rep.add("y_star", res.y_star);
  }
  add_relaxation(rep, res);
  if (!c.output.empty() && res.status == sdp::SolveStatus::Optimal) {
    write_certificates(c.output, res.certificates);
    rep.add("certificate_file", c.output);
  }
  rep.write(out);
  return exit_for(res.status);
}

apps::Graph read_graph(const RunConfig& c) {
  auto in = open_input(c.input);
  apps::Graph g = apps::parse_graph(in);
  if (!c.second_input.empty()) {
    auto win = open_input(c.second_input);
    std::vector<Rational> w;
    std::string tok;
    while (win >> tok) w.push_back(parse_rational(tok));
    g.set_weights(std::move(w));
  }
  return g;
}

int cmd_alpha(const RunConfig& c, std::ostream& out) {
  check_common(c);
  const apps::Graph g = read_graph(c);
  const auto res = apps::stability_bound(g, c.level, cone_of(c), c.eps > 0 ? c.eps : 1e-8);
  Report rep;
  rep.add("command", "alpha");
  rep.add("cone", c.cone);
  rep.add("level", c.level);
  rep.add("n", g.size());
  if (res.ok()) rep.add(cone_of(c) == ConeKind::K ? "theta" : "nu", res.value);
  if (g.size() <= 20) rep.add("brute_alpha", to_string(apps::brute_alpha(g)));
  add_relaxation(rep, res.relaxation);
  rep.write(out);
  return exit_for(res.relaxation.status);
}

int cmd_chroma(const RunConfig& c, std::ostream& out) {
  check_common(c);
  const apps::Graph g = read_graph(c);
  const auto res = apps::chromatic_bound(g, c.level, cone_of(c), c.eps > 0 ? c.eps : 1e-8);
  Report rep;
  rep.add("command", "chroma");
  rep.add("cone", c.cone);
  rep.add("level", c.level);
  rep.add("n", g.size());
  if (res.ok()) rep.add("bound", res.value);
  if (g.size() <= 12) rep.add("brute_chi", apps::brute_chi(g));
  add_relaxation(rep, res.relaxation);
  rep.write(out);
  return exit_for(res.relaxation.status);
}

int cmd_sqp(const RunConfig& c, std::ostream& out) {
  check_common(c);
  auto in = open_input(c.input);
  const SymMatrix m = io::read_matrix(in);
  const double eps = c.eps > 0 ? c.eps : 1e-8;
  Report rep;
  rep.add("command", "sqp");
  rep.add("cone", c.cone);
  rep.add("level", c.level);
  rep.add("reciprocal", c.reciprocal ? "true" : "false");
  if (c.reciprocal) {
    const auto res = apps::sqp_reciprocal_bound(m, c.level, cone_of(c), eps);
    if (!res) {
      rep.add("status", "REFUSED");
      rep.add("message", "no interior SPN decomposition of M was found");
      rep.write(out);
      return kInfeasible;
    }
    if (res->ok()) rep.add("value", res->value);
    add_relaxation(rep, res->relaxation);
    rep.write(out);
    return exit_for(res->relaxation.status);
  }
  const auto res = apps::sqp_bound(m, c.level, cone_of(c), eps);
  if (res.ok()) rep.add("value", res.value);
  add_relaxation(rep, res.relaxation);
  rep.write(out);
  return exit_for(res.relaxation.status);
}

int cmd_pathology(const RunConfig& c, std::ostream& out) {
  pathology::PathologyInstance inst;
  switch (c.example) {
    case 1: inst = pathology::khachiyan_cp(c.n); break;
    case 2: inst = pathology::c5_padded_cp(); break;
    case 3: inst = pathology::ex3_cp(c.n); break;
    default: throw std::invalid_argument("--example must be 1, 2 or 3");
  }
  Report rep;
  rep.add("command", "pathology");
  rep.add("example", c.example);
  rep.add("n", inst.n);
  rep.add("m", inst.program.m);
  for (const auto& [k, v] : inst.facts) rep.add(k, v);
  if (c.samples > 0 && c.example == 2) {
    rep.add("screen_samples", c.samples);
    rep.add("screen_min", apps::sampled_simplex_min(pathology::c5_padded_matrix(), c.samples, c.seed));
  }
  std::ostringstream prog;
  io::write_program(prog, inst.program);
  if (!c.output.empty()) {
    std::ofstream f(c.output);
    if (!f) throw std::invalid_argument("cannot write '" + c.output + "'");
    f << prog.str();
    rep.add("program_file", c.output);
  } else {
    std::string line = prog.str();
    if (!line.empty() && line.back() == '\n') line.pop_back();
    rep.add("program", line);
  }
  rep.write(out);
  return kSolved;
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
  auto min = open_input(c.input);
  const SymMatrix m = io::read_matrix(min);
  auto cin = open_input(c.second_input);
  const auto cert = cones::read_certificate(cin);
  const double tol = c.eps > 0 ? c.eps : 1e-6;
  const auto rep_v = cones::validate_certificate(m, cert, tol);
  Report rep;
  rep.add("command", "certify");
  rep.add("cone", std::string(cones::to_string(cert.kind)));
  rep.add("level", cert.level);
  rep.add("n", cert.n);
  rep.add("residual", rep_v.residual);
  rep.add("min_gram_eigenvalue", rep_v.min_gram_eigenvalue);
  rep.add("min_scalar", rep_v.min_scalar);
  rep.add("max_entry", rep_v.max_entry);
  rep.add("max_entry_log2", rep_v.max_entry_log2);
  rep.add("valid", rep_v.valid ? "true" : "false");
  rep.write(out);
  return rep_v.valid ? kSolved : kInconclusive;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-of-squares relaxations of copositive programs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto cone_opt = [&](CLI::App* sub) {
    sub->add_option("--cone", cfg.cone, "Cone hierarchy: K or Q")->check(CLI::IsMember({"K", "Q", "k", "q"}));
    sub->add_option("--level", cfg.level, "Hierarchy level r")->check(CLI::NonNegativeNumber);
    sub->add_option("--eps", cfg.eps, "Tolerance (command-specific default)");
  };

  auto* membership = app.add_subcommand("membership", "Decide membership of a matrix in K^(r) or Q^(r)");
  membership->add_option("matrix", cfg.input, "Matrix file")->required();
  membership->add_option("--certificate", cfg.output, "Write the certificate here on MEMBER");
  cone_opt(membership);

  auto* relax_cmd = app.add_subcommand("relax", "Solve the CP-K / CP-Q relaxation of a program");
  relax_cmd->add_option("program", cfg.input, "Program file")->required();
  relax_cmd->add_option("--box", cfg.box, "Box bound R on |y_i| / 2");
  relax_cmd->add_option("--certificates", cfg.output, "Write certificates to this path (suffix .k per constraint)");
  cone_opt(relax_cmd);

  auto* alpha = app.add_subcommand("alpha", "Stability-number bound theta^(r) (K) or nu^(r) (Q)");
  alpha->add_option("graph", cfg.input, "Graph file (DIMACS or JSON)")->required();
  alpha->add_option("--weights", cfg.second_input, "Whitespace-separated vertex weights");
  cone_opt(alpha);

  auto* chroma = app.add_subcommand("chroma", "Chromatic-number relaxation bound");
  chroma->add_option("graph", cfg.input, "Graph file (DIMACS or JSON)")->required();
  cone_opt(chroma);

  auto* sqp = app.add_subcommand("sqp", "Standard quadratic program bound");
  sqp->add_option("matrix", cfg.input, "Matrix file")->required();
  sqp->add_flag("--reciprocal", cfg.reciprocal, "Bound 1/p_min instead");
  cone_opt(sqp);

  auto* path = app.add_subcommand("pathology", "Emit one of the pathological programs");
  path->add_option("--example", cfg.example, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  path->add_option("--n", cfg.n, "Size parameter (examples 1 and 3)")->check(CLI::Range(2, 64));
  path->add_option("--output", cfg.output, "Write the program file here instead of inline");
  path->add_option("--samples", cfg.samples, "Simplex samples for the copositivity screen (example 2)")
      ->check(CLI::NonNegativeNumber);
  path->add_option("--seed", cfg.seed, "Seed for the screen");

  auto* certify = app.add_subcommand("certify", "Validate a certificate against a matrix");
  certify->add_option("matrix", cfg.input, "Matrix file")->required();
  certify->add_option("certificate", cfg.second_input, "Certificate file")->required();
  certify->add_option("--eps", cfg.eps, "Validation tolerance (default 1e-6)");

  // The stream-based API keeps the CLI testable in-process.
  chroma->get_option("--cone")->default_str("Q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSolved;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSolved;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*membership) return cmd_membership(cfg, out);
    if (*relax_cmd) return cmd_relax(cfg, out);
    if (*alpha) return cmd_alpha(cfg, out);
    if (*chroma) {
      if (chroma->count("--cone") == 0) cfg.cone = "Q";
      return cmd_chroma(cfg, out);
    }
    if (*sqp) return cmd_sqp(cfg, out);
    if (*path) return cmd_pathology(cfg, out);
    if (*certify) return cmd_certify(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInconclusive;
  }
  return kInputError;
}

}  // namespace copos::cli
