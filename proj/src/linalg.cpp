// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "exactcur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace exactcur {

namespace detail {

Vector singular_values(const Matrix& a) {
  if (a.size() == 0) return Vector();
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

double default_rank_tol(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return exactcur::default_rank_tol(a.rows(), a.cols(), spectral_norm(a));
}

Index numerical_rank(const Matrix& a, double tol) {
  const Vector s = singular_values(a);
  return static_cast<Index>((s.array() > tol).count());
}

SvdFactors svd(const Matrix& a, std::optional<double> tol) {
  Eigen::JacobiSVD<Matrix> dec(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SvdFactors out;
  out.spectrum = dec.singularValues();
  const double sigma_max = out.spectrum.size() > 0 ? out.spectrum(0) : 0.0;
  out.tolerance_used = tol.value_or(exactcur::default_rank_tol(a.rows(), a.cols(), sigma_max));
  out.numerical_rank = static_cast<Index>((out.spectrum.array() > out.tolerance_used).count());

  const Index k = out.numerical_rank;
  out.left = dec.matrixU().leftCols(k);
  out.right = dec.matrixV().leftCols(k);
  out.singular_values = out.spectrum.head(k);

  for (Index c = 0; c < k; ++c) {
    Index pivot = 0;
    out.left.col(c).cwiseAbs().maxCoeff(&pivot);  // first maximal entry
    if (out.left(pivot, c) < 0.0) {
      out.left.col(c) *= -1.0;
      out.right.col(c) *= -1.0;
    }
  }
  return out;
}

Matrix pseudoinverse(const Matrix& a, double tol) {
  if (a.size() == 0) return Matrix::Zero(a.cols(), a.rows());
  const SvdFactors f = svd(a, tol);
  if (f.numerical_rank == 0) return Matrix::Zero(a.cols(), a.rows());
  return f.right * f.singular_values.cwiseInverse().asDiagonal() * f.left.transpose();
}

Matrix rows_of(const Matrix& a, const std::vector<Index>& rows) {
  Matrix out(static_cast<Index>(rows.size()), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = a.row(rows[i]);
  return out;
}

Matrix cols_of(const Matrix& a, const std::vector<Index>& cols) {
  Matrix out(a.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = a.col(cols[j]);
  return out;
}

}  // namespace detail

double default_rank_tol(Index rows, Index cols, double sigma_max) noexcept {
  return static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon() *
         sigma_max;
}

SvdFactors compact_svd(const DenseMatrix& a, std::optional<double> tol) {
  SvdFactors f = detail::svd(a.eigen(), tol);
  if (f.numerical_rank == 0)
    throw Error(ErrorCode::ZeroMatrix, "compact_svd: matrix has numerical rank 0");
  return f;
}

Index numerical_rank(const DenseMatrix& a, std::optional<double> tol) {
  const Vector s = detail::singular_values(a.eigen());
  const double t = tol.value_or(default_rank_tol(a.rows(), a.cols(), s(0)));
  return static_cast<Index>((s.array() > t).count());
}

DenseMatrix pseudoinverse(const DenseMatrix& a, std::optional<double> tol) {
  const double t = tol.value_or(detail::default_rank_tol(a.eigen()));
  return DenseMatrix(detail::pseudoinverse(a.eigen(), t));
}

double stable_rank(const DenseMatrix& a) {
  const double fro = a.eigen().norm();
  if (fro == 0.0) throw Error(ErrorCode::ZeroMatrix, "stable_rank of the zero matrix");
  const double two = detail::spectral_norm(a.eigen());
  return (fro * fro) / (two * two);
}

double condition_number(const DenseMatrix& a, std::optional<double> tol) {
  const SvdFactors f = compact_svd(a, tol);
  return f.singular_values(0) / f.singular_values(f.numerical_rank - 1);
}

DenseMatrix submatrix(const DenseMatrix& a, const IndexSet& set) {
  if (set.empty()) throw Error(ErrorCode::InvalidArgument, "submatrix: empty index set");
  check_indices(set, a.dim(set.axis));
  return DenseMatrix(set.axis == Axis::Rows ? detail::rows_of(a.eigen(), set.indices)
                                            : detail::cols_of(a.eigen(), set.indices));
}

DenseMatrix submatrix(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.axis != Axis::Rows || cols.axis != Axis::Cols)
    throw Error(ErrorCode::InvalidArgument, "submatrix: expected a row set and a column set");
  if (rows.empty() || cols.empty())
    throw Error(ErrorCode::InvalidArgument, "submatrix: empty index set");
  check_indices(rows, a.rows());
  check_indices(cols, a.cols());
  return DenseMatrix(detail::cols_of(detail::rows_of(a.eigen(), rows.indices), cols.indices));
}

double spectral_norm(const DenseMatrix& a) { return detail::spectral_norm(a.eigen()); }

double frobenius_norm(const DenseMatrix& a) noexcept { return a.eigen().norm(); }

StableRankBounds stable_rank_perturbation_bounds(const DenseMatrix& a, const DenseMatrix& e) {
  if (a.rows() != e.rows() || a.cols() != e.cols())
    throw Error(ErrorCode::InvalidArgument, "stable_rank_perturbation_bounds: shape mismatch");
  const double a_fro = frobenius_norm(a);
  if (a_fro == 0.0) throw Error(ErrorCode::ZeroMatrix, "stable_rank_perturbation_bounds: A = 0");
  const double a_two = spectral_norm(a);
  const double e_fro = frobenius_norm(e);
  const double e_two = spectral_norm(e);
  if (e_fro >= a_fro)
    throw Error(ErrorCode::DomainError, "stable_rank_perturbation_bounds: requires |E|_F < |A|_F");

  const double r = (a_fro * a_fro) / (a_two * a_two);
  const double lo = (1.0 - e_fro / a_fro) / (1.0 + e_two / a_fro);
  StableRankBounds b;
  b.lower = r * lo * lo;
  if (e_two >= a_two) {
    b.upper = std::numeric_limits<double>::infinity();
  } else {
    const double hi = (1.0 + e_fro / a_fro) / (1.0 - e_two / a_two);
    b.upper = r * hi * hi;
  }
  return b;
}

}  // namespace exactcur
