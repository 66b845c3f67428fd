// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_LINALG_HPP
#define EXACTCUR_LINALG_HPP

#include <optional>

#include "exactcur/matrix.hpp"

namespace exactcur {

//
// Compact SVD A = left * diag(singular_values) * right^T truncated to the
// numerical rank. `spectrum` keeps all min(m, n) singular values.
//
// Sign convention: in every left singular vector the entry of largest
// magnitude (first one on ties) is nonnegative; the matching right vector is
// flipped with it.
//
struct SvdFactors {
  Matrix left;
  Vector singular_values;
  Matrix right;
  Vector spectrum;
  Index numerical_rank = 0;
  double tolerance_used = 0.0;
};

/// max(m, n) * machine epsilon * sigma_1.
double default_rank_tol(Index rows, Index cols, double sigma_max) noexcept;

SvdFactors compact_svd(const DenseMatrix& a, std::optional<double> tol = {});

/// Number of singular values strictly above `tol` (default tolerance if unset).
Index numerical_rank(const DenseMatrix& a, std::optional<double> tol = {});

/// Moore-Penrose pseudoinverse through the truncated SVD. The zero matrix maps
/// to the zero matrix of transposed shape.
DenseMatrix pseudoinverse(const DenseMatrix& a, std::optional<double> tol = {});

/// ||A||_F^2 / ||A||_2^2.
double stable_rank(const DenseMatrix& a);

/// sigma_max / sigma_min over the singular values above the rank tolerance.
double condition_number(const DenseMatrix& a, std::optional<double> tol = {});

/// A(I,:) or A(:,J) depending on the axis of `set`; order and repeats kept.
DenseMatrix submatrix(const DenseMatrix& a, const IndexSet& set);
/// A(I,J).
DenseMatrix submatrix(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols);

double spectral_norm(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a) noexcept;

/// Two-sided estimate of st.rank(A + E) from st.rank(A) and the relative sizes
/// of E:
///   lower = st.rank(A) * ((1 - |E|_F/|A|_F) / (1 + |E|_2/|A|_F))^2
///   upper = st.rank(A) * ((1 + |E|_F/|A|_F) / (1 - |E|_2/|A|_2))^2
/// Requires |E|_F < |A|_F; `upper` is +inf when |E|_2 >= |A|_2.
struct StableRankBounds {
  double lower = 0.0;
  double upper = 0.0;
};

StableRankBounds stable_rank_perturbation_bounds(const DenseMatrix& a, const DenseMatrix& e);

namespace detail {

// Eigen-level kernels shared by the other modules. They skip the
// DenseMatrix validation and accept empty or non-finite-free inputs as-is.

Vector singular_values(const Matrix& a);
double spectral_norm(const Matrix& a);
/// Default tolerance for `a` (0 for an empty matrix).
double default_rank_tol(const Matrix& a);
Index numerical_rank(const Matrix& a, double tol);
Matrix pseudoinverse(const Matrix& a, double tol);
SvdFactors svd(const Matrix& a, std::optional<double> tol);
Matrix rows_of(const Matrix& a, const std::vector<Index>& rows);
Matrix cols_of(const Matrix& a, const std::vector<Index>& cols);

}  // namespace detail

}  // namespace exactcur

#endif
