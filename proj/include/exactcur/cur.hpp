// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_CUR_HPP
#define EXACTCUR_CUR_HPP

#include <optional>
#include <string>

#include "exactcur/matrix.hpp"
#include "exactcur/rng.hpp"
#include "exactcur/sampling.hpp"

namespace exactcur {

/// Relative Frobenius tolerance at which A = C U^+ R counts as exact.
inline constexpr double kExactTol = 1e-8;

//
// C = A(:,J), U = A(I,J), R = A(I,:) and the pseudoinverse of U. Entries are
// copied verbatim from the source matrix.
//
struct CurFactors {
  IndexSet rows;
  IndexSet cols;
  Matrix c;
  Matrix u;
  Matrix r;
  Matrix u_pinv;
  /// Absolute singular-value cutoff used for U^+.
  double rank_tol = 0.0;
  std::string scheme_tag;

  Matrix product() const { return c * u_pinv * r; }
};

/// `rank_tol` defaults to the rank tolerance of A itself.
CurFactors build_cur(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols,
                     std::optional<double> rank_tol = {});

//
// Numerical check of the five equivalent conditions for an exact CUR:
//   (i)   rank U = rank A
//   (ii)  A = C U^+ R
//   (iii) A = C C^+ A R^+ R
//   (iv)  A^+ = R^+ U C^+
//   (v)   rank C = rank R = rank A
// All ranks and pseudoinverses use the rank tolerance of A. Identities are
// tested at relative Frobenius tolerance `tol`. When all five hold, the
// report also checks U^+ = C^+ A R^+.
//
struct CharacterizationReport {
  Index rank_a = 0;
  Index rank_c = 0;
  Index rank_r = 0;
  Index rank_u = 0;
  bool holds_i = false;
  bool holds_ii = false;
  bool holds_iii = false;
  bool holds_iv = false;
  bool holds_v = false;
  bool u_pinv_identity = false;
  double residual_ii = 0.0;
  double residual_iii = 0.0;
  double residual_iv = 0.0;
  double residual_u_pinv = 0.0;
  double tol = kExactTol;
  double rank_tol = 0.0;

  bool all_hold() const noexcept { return holds_i && holds_ii && holds_iii && holds_iv && holds_v; }
  bool none_hold() const noexcept {
    return !holds_i && !holds_ii && !holds_iii && !holds_iv && !holds_v;
  }
  bool unanimous() const noexcept { return all_hold() || none_hold(); }
};

CharacterizationReport verify_characterization(const DenseMatrix& a, const IndexSet& rows,
                                               const IndexSet& cols, double tol = kExactTol,
                                               std::optional<double> rank_tol = {});

/// Draws d1 rows from `row_dist` and d2 columns from `col_dist`. Rows use the
/// substream rng.split(0) and columns rng.split(1), so each index set depends
/// only on its own stream. `dedup` drops repeated indices after drawing.
CurFactors randomized_cur(const DenseMatrix& a, const ProbDist& row_dist, const ProbDist& col_dist,
                          Index d1, Index d2, const RandomStream& rng, bool dedup = false,
                          std::optional<double> rank_tol = {});

enum class Norm { Spectral, Frobenius };

/// ||A - C U^+ R|| in the requested norm.
double approx_error(const DenseMatrix& a, const CurFactors& f, Norm norm);

/// approx_error relative to ||A|| in the same norm.
double relative_error(const DenseMatrix& a, const CurFactors& f, Norm norm);

/// relative Frobenius error <= tol.
bool is_exact(const DenseMatrix& a, const CurFactors& f, double tol = kExactTol);

}  // namespace exactcur

#endif
