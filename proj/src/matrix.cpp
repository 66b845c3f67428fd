// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "exactcur/matrix.hpp"

#include <string>

namespace exactcur {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ZeroProbabilityDraw: return "ZeroProbabilityDraw";
    case ErrorCode::NoiseDominates: return "NoiseDominates";
    case ErrorCode::DivisionByZeroWeight: return "DivisionByZeroWeight";
    case ErrorCode::SingularInterpolation: return "SingularInterpolation";
    case ErrorCode::TooManyClusters: return "TooManyClusters";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

const char* to_string(Axis axis) noexcept { return axis == Axis::Rows ? "rows" : "cols"; }

DenseMatrix::DenseMatrix(Index rows, Index cols) {
  if (rows < 1 || cols < 1)
    throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be >= 1");
  m_ = Matrix::Zero(rows, cols);
}

DenseMatrix::DenseMatrix(Matrix values) : m_(std::move(values)) {
  if (m_.rows() < 1 || m_.cols() < 1)
    throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be >= 1");
  if (!m_.allFinite())
    throw Error(ErrorCode::InvalidArgument, "matrix entries must be finite");
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto m = static_cast<Index>(rows.size());
  const auto n = m > 0 ? static_cast<Index>(rows.begin()->size()) : 0;
  Matrix values(m, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n)
      throw Error(ErrorCode::InvalidArgument, "ragged row literal");
    Index j = 0;
    for (double v : row) values(i, j++) = v;
    ++i;
  }
  return DenseMatrix(std::move(values));
}

DenseMatrix DenseMatrix::from_col_major(Index rows, Index cols, const std::vector<double>& values) {
  if (rows < 0 || cols < 0 || static_cast<std::size_t>(rows * cols) != values.size())
    throw Error(ErrorCode::InvalidArgument, "entry count does not match dimensions");
  return DenseMatrix(Eigen::Map<const Matrix>(values.data(), rows, cols));
}

void check_indices(const IndexSet& set, Index dim) {
  for (Index idx : set.indices) {
    if (idx < 0 || idx >= dim)
      throw Error(ErrorCode::IndexOutOfRange,
                  std::string("index ") + std::to_string(idx) + " out of range for " +
                      to_string(set.axis) + " of size " + std::to_string(dim));
  }
}

}  // namespace exactcur
