#include "copos/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace copos::io {

namespace {

using nlohmann::json;

Rational rational_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  if (v.is_number_float()) {
    if (!std::isfinite(v.get<double>())) throw std::invalid_argument("non-finite number");
    // The shortest round-trip text is what the author wrote in practice.
    return parse_rational(v.dump());
  }
  throw std::invalid_argument("expected a number or a rational string, got " + v.dump());
}

SymMatrix matrix_of(const json& rows, std::size_t n, const std::string& what) {
  if (!rows.is_array() || rows.size() != n)
    throw std::invalid_argument(what + ": expected " + std::to_string(n) + " rows");
  std::vector<std::vector<Rational>> data;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument(what + ": every row needs " + std::to_string(n) + " entries");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_of(v));
    data.push_back(std::move(r));
  }
  try {
    return SymMatrix(data);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(what + ": " + e.what());
  }
}

json json_of(const SymMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json parse_json(std::istream& is, const std::string& what) {
  try {
    json j;
    is >> j;
    return j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(what + ": " + e.what());
  }
}

int count_of(const json& j, const char* key, const std::string& what) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long>() < 0)
    throw std::invalid_argument(what + ": '" + key + "' must be a nonnegative integer");
  return v.get<int>();
}

}  // namespace

SymMatrix read_matrix(std::istream& is) {
  const json j = parse_json(is, "matrix");
  try {
    const int n = count_of(j, "n", "matrix");
    if (n == 0) throw std::invalid_argument("matrix: n must be positive");
    return matrix_of(j.at("data"), static_cast<std::size_t>(n), "matrix");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("matrix: ") + e.what());
  }
}

void write_matrix(std::ostream& os, const SymMatrix& m) {
  json j;
  j["n"] = m.size();
  j["data"] = json_of(m);
  os << j.dump(1) << '\n';
}

relax::ConicProgram read_program(std::istream& is) {
  const json j = parse_json(is, "program");
  try {
    relax::ConicProgram p;
    p.m = count_of(j, "m", "program");
    for (const auto& v : j.at("b")) p.b.push_back(rational_of(v));
    const auto& cons = j.at("constraints");
    if (!cons.is_array()) throw std::invalid_argument("program: 'constraints' must be a list");
    for (std::size_t k = 0; k < cons.size(); ++k) {
      const std::string what = "program constraint " + std::to_string(k);
      const auto& c = cons[k];
      const int n = count_of(c, "n", what);
      if (n == 0) throw std::invalid_argument(what + ": n must be positive");
      relax::ConeConstraint con;
      con.c = matrix_of(c.at("C"), static_cast<std::size_t>(n), what + " C");
      const auto& as = c.at("A");
      if (!as.is_array()) throw std::invalid_argument(what + ": 'A' must be a list of matrices");
      for (std::size_t i = 0; i < as.size(); ++i)
        con.a.push_back(matrix_of(as[i], static_cast<std::size_t>(n), what + " A[" + std::to_string(i) + "]"));
      p.constraints.push_back(std::move(con));
    }
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("program: ") + e.what());
  }
}

void write_program(std::ostream& os, const relax::ConicProgram& p) {
  json j;
  j["m"] = p.m;
  json b = json::array();
  for (const auto& v : p.b) b.push_back(to_string(v));
  j["b"] = b;
  json cons = json::array();
  for (const auto& con : p.constraints) {
    json c;
    c["n"] = con.side();
    c["C"] = json_of(con.c);
    json as = json::array();
    for (const auto& a : con.a) as.push_back(json_of(a));
    c["A"] = as;
    cons.push_back(c);
  }
  j["constraints"] = cons;
  os << j.dump() << '\n';
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Report::add(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
void Report::add(const std::string& key, double value) { add(key, format_double(value)); }
void Report::add(const std::string& key, int value) { add(key, std::to_string(value)); }

void Report::add(const std::string& key, const std::vector<double>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += format_double(values[i]);
  }
  add(key, s + "]");
}

void Report::write(std::ostream& os) const {
  for (const auto& [k, v] : entries_) os << k << ": " << v << '\n';
}

std::map<std::string, std::string> parse_report(std::istream& is) {
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(is, line)) {
    const auto colon = line.find(": ");
    if (colon == std::string::npos || colon == 0) continue;
    out[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return out;
}

double parse_double(const std::string& text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_double_list(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("not a list: '" + text + "'");
  std::istringstream ss(text.substr(1, text.size() - 2));
  std::vector<double> out;
  std::string tok;
  while (ss >> tok) out.push_back(parse_double(tok));
  return out;
}

}  // namespace copos::io
