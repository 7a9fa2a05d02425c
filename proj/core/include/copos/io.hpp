#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "copos/conic_program.hpp"
#include "copos/sym_matrix.hpp"

namespace copos::io {

/// {"n": int, "data": [[rat]]}; entries are JSON numbers or strings holding
/// "p/q" or decimal text, all read exactly.
SymMatrix read_matrix(std::istream& is);
void write_matrix(std::ostream& os, const SymMatrix& m);

/// {"m": int, "b": [rat], "constraints": [{"n": int, "C": [[rat]], "A": [[[rat]]]}]}
relax::ConicProgram read_program(std::istream& is);
void write_program(std::ostream& os, const relax::ConicProgram& p);

/// Opens `path` or throws std::invalid_argument naming it.
std::string read_file(const std::filesystem::path& path);

/// Line-oriented "key: value" report. Numbers are printed with 17
/// significant digits so they parse back to the same double.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, double value);
  void add(const std::string& key, int value);
  void add(const std::string& key, const std::vector<double>& values);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  void write(std::ostream& os) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string format_double(double v);
/// Parses the lines written by Report::write (later keys win).
std::map<std::string, std::string> parse_report(std::istream& is);
double parse_double(const std::string& text);
/// "[a b c]" -> {a, b, c}
std::vector<double> parse_double_list(const std::string& text);

}  // namespace copos::io
