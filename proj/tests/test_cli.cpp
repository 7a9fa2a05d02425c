#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "copos/io.hpp"
#include "copos/pathology.hpp"
#include "copos/sqp.hpp"
#include "doctest.h"

using namespace copos;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  std::map<std::string, std::string> report() const {
    std::istringstream is(out);
    return io::parse_report(is);
  }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "copos");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("copos_cli_" + std::to_string(counter_++) + "_" +
                                                std::to_string(reinterpret_cast<std::uintptr_t>(this)))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

std::string matrix_text(const SymMatrix& m) {
  std::ostringstream os;
  io::write_matrix(os, m);
  return os.str();
}

std::string program_text(const relax::ConicProgram& p) {
  std::ostringstream os;
  io::write_program(os, p);
  return os.str();
}

const char* kC5Dimacs = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

}  // namespace

TEST_CASE("io: matrices and programs") {
  std::istringstream is(R"({"n": 2, "data": [["1/2", 0.25], [0.25, "3"]]})");
  const SymMatrix m = io::read_matrix(is);
  CHECK(m(0, 0) == Rational(1, 2));
  CHECK(m(0, 1) == Rational(1, 4));
  std::istringstream again(matrix_text(m));
  CHECK(io::read_matrix(again) == m);

  const auto prog = apps::sqp_program(m);
  std::istringstream ps(program_text(prog));
  const auto back = io::read_program(ps);
  CHECK(back.m == prog.m);
  CHECK(back.b == prog.b);
  CHECK(back.constraints[0].c == prog.constraints[0].c);
  CHECK(back.constraints[0].a[0] == prog.constraints[0].a[0]);

  for (const char* bad : {R"({"n": 2, "data": [[1, 2], [3, 4]]})", R"({"n": 3, "data": [[1]]})", "not json",
                          R"({"n": 1, "data": [["x"]]})"}) {
    std::istringstream b(bad);
    CAPTURE(bad);
    CHECK_THROWS_AS(io::read_matrix(b), std::invalid_argument);
  }
  std::istringstream badprog(R"({"m": 1, "b": [1], "constraints": [{"n": 1, "C": [[0]], "A": []}]})");
  CHECK_THROWS_AS(io::read_program(badprog), std::invalid_argument);
  CHECK_THROWS_AS(io::read_file("/nonexistent/copos"), std::invalid_argument);
}

TEST_CASE("io: reports round-trip") {
  io::Report rep;
  rep.add("value", 0.1 + 0.2);
  rep.add("count", 7);
  rep.add("y", std::vector<double>{1.0 / 3, -2.5e-17, 1e300});
  rep.add("text", "hello world");
  rep.add("inf", std::numeric_limits<double>::infinity());
  std::ostringstream os;
  rep.write(os);
  std::istringstream is(os.str());
  const auto back = io::parse_report(is);
  CHECK(io::parse_double(back.at("value")) == 0.1 + 0.2);
  CHECK(back.at("count") == "7");
  CHECK(io::parse_double_list(back.at("y")) == std::vector<double>{1.0 / 3, -2.5e-17, 1e300});
  CHECK(back.at("text") == "hello world");
  CHECK(std::isinf(io::parse_double(back.at("inf"))));
}

TEST_CASE("cli: membership") {
  Scratch s;
  const auto id = s.file("id.json", matrix_text(SymMatrix::identity(5)));
  auto r = run({"membership", id, "--cone", "K", "--level", "0"});
  CHECK(r.code == 0);
  CHECK(r.report().at("verdict") == "MEMBER");

  const auto m1 = s.file("m1.json", matrix_text(pathology::c5_padded_matrix()));
  r = run({"membership", m1, "--cone", "K", "--level", "1"});
  CHECK(r.code == 0);
  CHECK(r.report().at("verdict") == "NOT_MEMBER");

  const auto asym = s.file("asym.json", R"({"n": 2, "data": [[1, 2], [0, 1]]})");
  r = run({"membership", asym});
  CHECK(r.code == 2);
  CHECK(r.err.find("symmetric") != std::string::npos);

  CHECK(run({"membership", id, "--cone", "X"}).code == 2);
  CHECK(run({"membership", id, "--level", "-1"}).code == 2);
  CHECK(run({"membership"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("cli: certificates through membership and certify") {
  Scratch s;
  const SymMatrix m = SymMatrix::identity(4) + SymMatrix::ones(4);
  const auto mf = s.file("m.json", matrix_text(m));
  const auto cert = s.path("cert.json");
  auto r = run({"membership", mf, "--cone", "Q", "--level", "1", "--certificate", cert});
  REQUIRE(r.code == 0);
  REQUIRE(fs::exists(cert));
  r = run({"certify", mf, cert});
  CHECK(r.code == 0);
  const auto rep = r.report();
  CHECK(rep.at("valid") == "true");
  CHECK(io::parse_double(rep.at("residual")) <= 1e-6);
  CHECK(rep.at("cone") == "Q");

  // the certificate does not fit a different matrix
  const auto other = s.file("o.json", matrix_text(SymMatrix::identity(3)));
  CHECK(run({"certify", other, cert}).code == 2);
  // a fitting shape with different data fails validation
  const auto shifted = s.file("s.json", matrix_text(m + SymMatrix::identity(4)));
  r = run({"certify", shifted, cert});
  CHECK(r.code == 3);
  CHECK(r.report().at("valid") == "false");
}

TEST_CASE("cli: relax") {
  Scratch s;
  const auto sqp = s.file("sqp.json", program_text(apps::sqp_program(SymMatrix::identity(2))));
  auto r = run({"relax", sqp, "--cone", "K", "--level", "0", "--box", "10"});
  CHECK(r.code == 0);
  auto rep = r.report();
  CHECK(rep.at("status") == "OPTIMAL");
  CHECK(io::parse_double(rep.at("value")) == doctest::Approx(-0.5).epsilon(1e-6));
  CHECK(io::parse_double_list(rep.at("y_star")).size() == 1);

  const auto ex2 = s.file("ex2.json", program_text(pathology::c5_padded_cp().program));
  r = run({"relax", ex2, "--level", "0", "--box", "10"});
  CHECK(r.code == 1);
  CHECK(r.report().at("status") == "PRIMAL_INFEASIBLE");

  CHECK(run({"relax", s.path("missing.json")}).code == 2);
  CHECK(run({"relax", sqp, "--box", "0"}).code == 2);
}

TEST_CASE("cli: graph commands") {
  Scratch s;
  const auto c5 = s.file("c5.dimacs", kC5Dimacs);
  auto r = run({"alpha", c5, "--level", "0", "--cone", "K"});
  CHECK(r.code == 0);
  auto rep = r.report();
  CHECK(std::abs(io::parse_double(rep.at("theta")) - std::sqrt(5.0)) <= 1e-3);
  CHECK(rep.at("brute_alpha") == "2");

  const auto w = s.file("w.txt", "1 2 1 3 1/2\n");
  r = run({"alpha", c5, "--weights", w, "--cone", "Q"});
  CHECK(r.code == 0);
  rep = r.report();
  CHECK(rep.at("brute_alpha") == "5");
  CHECK(io::parse_double(rep.at("nu")) >= 5 - 1e-6);
  CHECK(run({"alpha", c5, "--weights", s.file("bad.txt", "1 2")}).code == 2);

  const auto k3 = s.file("k3.json", R"({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})");
  r = run({"chroma", k3, "--level", "0"});
  CHECK(r.code == 0);
  rep = r.report();
  CHECK(rep.at("cone") == "Q");
  CHECK(io::parse_double(rep.at("bound")) <= 3 + 1e-6);
  CHECK(rep.at("brute_chi") == "3");
}

TEST_CASE("cli: sqp") {
  Scratch s;
  const auto id = s.file("i3.json", matrix_text(SymMatrix::identity(3)));
  auto r = run({"sqp", id});
  CHECK(r.code == 0);
  CHECK(io::parse_double(r.report().at("value")) == doctest::Approx(1.0 / 3).epsilon(1e-6));
  r = run({"sqp", id, "--reciprocal"});
  CHECK(r.code == 0);
  CHECK(io::parse_double(r.report().at("value")) == doctest::Approx(3.0).epsilon(1e-5));

  SymMatrix off(2);
  off.set(0, 1, -1);
  r = run({"sqp", s.file("off.json", matrix_text(off)), "--reciprocal"});
  CHECK(r.code == 1);
  CHECK(r.report().at("status") == "REFUSED");
}

TEST_CASE("cli: pathology emits a readable program") {
  Scratch s;
  auto r = run({"pathology", "--example", "1", "--n", "3"});
  CHECK(r.code == 0);
  auto rep = r.report();
  CHECK(rep.at("optimal_value") == "2");
  std::istringstream prog(rep.at("program"));
  const auto p = io::read_program(prog);
  CHECK(p.constraints[0].side() == 5);

  const auto out = s.path("ex3.json");
  r = run({"pathology", "--example", "3", "--n", "2", "--output", out});
  CHECK(r.code == 0);
  std::istringstream f(io::read_file(out));
  CHECK(io::read_program(f).constraints[0].side() == 10);

  const auto a = run({"pathology", "--example", "2", "--samples", "500", "--seed", "4"});
  const auto b = run({"pathology", "--example", "2", "--samples", "500", "--seed", "4"});
  CHECK(a.out == b.out);
  CHECK(io::parse_double(a.report().at("screen_min")) >= -1e-12);

  CHECK(run({"pathology", "--example", "4"}).code == 2);
  CHECK(run({"pathology"}).code == 2);
}

TEST_CASE("cli: help") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("membership") != std::string::npos);
}
