// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_MATRIX_HPP
#define EXACTCUR_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "exactcur/error.hpp"

namespace exactcur {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;  // column-major
using Vector = Eigen::VectorXd;

enum class Axis { Rows, Cols };

const char* to_string(Axis axis) noexcept;

//
// Immutable real dense matrix. Storage is Eigen's default column-major
// layout; entries are guaranteed finite and both dimensions are >= 1.
//
class DenseMatrix {
 public:
  /// Zero matrix of the given shape.
  DenseMatrix(Index rows, Index cols);
  explicit DenseMatrix(Matrix values);

  /// Row-wise literal, e.g. `DenseMatrix::from_rows({{1, 2}, {3, 4}})`.
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  /// `values` holds rows*cols entries in column-major order.
  static DenseMatrix from_col_major(Index rows, Index cols, const std::vector<double>& values);

  Index rows() const noexcept { return m_.rows(); }
  Index cols() const noexcept { return m_.cols(); }
  Index dim(Axis axis) const noexcept { return axis == Axis::Rows ? rows() : cols(); }
  double operator()(Index i, Index j) const { return m_(i, j); }

  const Matrix& eigen() const noexcept { return m_; }

 private:
  Matrix m_;
};

/// Ordered list of row or column indices; repeats are allowed.
struct IndexSet {
  std::vector<Index> indices;
  Axis axis = Axis::Rows;

  std::size_t size() const noexcept { return indices.size(); }
  bool empty() const noexcept { return indices.empty(); }
};

/// Throws IndexOutOfRange unless every index lies in [0, dim).
void check_indices(const IndexSet& set, Index dim);

}  // namespace exactcur

#endif
