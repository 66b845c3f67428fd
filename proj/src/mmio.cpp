// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "exactcur/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace exactcur {

namespace {

constexpr const char* kBanner = "%%MatrixMarket matrix array real general";

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "matrix market line " + std::to_string(line) + ": " + msg);
}

}  // namespace

DenseMatrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) parse_fail(1, "empty input");
  ++lineno;
  {
    std::istringstream banner(lower(line));
    std::string tag, object, format, field, symmetry;
    banner >> tag >> object >> format >> field >> symmetry;
    if (tag != "%%matrixmarket" || object != "matrix")
      parse_fail(lineno, "missing %%MatrixMarket banner");
    if (format != "array" || field != "real" || symmetry != "general")
      parse_fail(lineno, "only 'array real general' is supported");
  }

  long long rows = -1, cols = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream dims(line);
    if (!(dims >> rows >> cols) || rows < 1 || cols < 1) parse_fail(lineno, "bad size line");
    break;
  }
  if (rows < 1) parse_fail(lineno, "missing size line");

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(rows * cols));
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream entry(line);
    double v = 0.0;
    if (!(entry >> v)) parse_fail(lineno, "bad entry '" + line + "'");
    values.push_back(v);
  }
  if (values.size() != static_cast<std::size_t>(rows * cols))
    parse_fail(lineno, "expected " + std::to_string(rows * cols) + " entries, found " +
                           std::to_string(values.size()));
  return DenseMatrix::from_col_major(rows, cols, values);
}

DenseMatrix read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const DenseMatrix& a) {
  out << kBanner << '\n' << a.rows() << ' ' << a.cols() << '\n';
  char buf[64];
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
      out << buf << '\n';
    }
  }
}

void write_matrix_market(const std::string& path, const DenseMatrix& a) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  write_matrix_market(out, a);
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace exactcur
