// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_DEIM_HPP
#define EXACTCUR_DEIM_HPP

#include <optional>
#include <vector>

#include "exactcur/cur.hpp"
#include "exactcur/matrix.hpp"

namespace exactcur {

struct DeimSelection {
  IndexSet indices;
  /// |r_j(p_j)| at each step.
  std::vector<double> residual_maxima;
  /// The n x ell block of basis vectors the selection was run on.
  Matrix source_basis;
};

//
// Discrete empirical interpolation on the first `ell` columns of `basis`
// (n x ell', orthonormal columns expected, ell <= ell'):
//   p_1 = argmax |v_1|
//   r_j = v_j - V_{j-1} (V_{j-1}(p,:))^{-1} v_j(p),  p_j = argmax |r_j|
// Ties go to the smallest index. The interpolation system is re-solved with
// partial pivoting at every step; SingularInterpolation if it degenerates.
//
DeimSelection deim_select(const Matrix& basis, Index ell, Axis axis = Axis::Cols);

/// Columns from DEIM on V_k, rows from DEIM on W_k, then build_cur. Exact
/// when rank(A) = k. RankDeficient if the numerical rank is below k.
CurFactors deim_cur(const DenseMatrix& a, Index k, std::optional<double> rank_tol = {});

/// sqrt(n ell / 3) 2^ell, the growth bound for ||(V(p,:))^{-1}||_2.
double deim_growth_bound(Index n, Index ell) noexcept;

/// ||(basis(p,:))^{-1}||_2 for the selected rows of the leading ell columns.
double deim_interpolation_norm(const Matrix& basis, const DeimSelection& sel);

struct DeimCertificate {
  bool holds = false;
  /// sigma_k(A~) - E_bound, a lower bound for sigma_k(A) by Weyl.
  double sigma_k_lower = 0.0;
  /// (1 + 2^k sqrt(max(n k, m k) / 3)) E_bound.
  double threshold = 0.0;
  double margin = 0.0;
};

/// Sufficient condition for DEIM indices computed on A~ = A + E, with
/// ||E||_2 <= e_bound and rank(A) = k, to give an exact CUR of A.
DeimCertificate deim_noise_certificate(const DenseMatrix& a_tilde, Index k, double e_bound);

}  // namespace exactcur

#endif
