// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "exactcur/cur.hpp"

#include "exactcur/linalg.hpp"

namespace exactcur {

namespace {

void require_axes(const IndexSet& rows, const IndexSet& cols) {
  if (rows.axis != Axis::Rows || cols.axis != Axis::Cols)
    throw Error(ErrorCode::InvalidArgument, "expected a row index set and a column index set");
  if (rows.empty() || cols.empty())
    throw Error(ErrorCode::InvalidArgument, "CUR index sets must be nonempty");
}

// ||x|| <= tol * ||ref||, with a zero reference demanding an exact zero.
bool within(double residual_norm, double ref_norm, double tol) {
  return residual_norm <= tol * ref_norm;
}

double ratio(double num, double den) { return den > 0.0 ? num / den : num; }

}  // namespace

CurFactors build_cur(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols,
                     std::optional<double> rank_tol) {
  require_axes(rows, cols);
  check_indices(rows, a.rows());
  check_indices(cols, a.cols());

  CurFactors f;
  f.rows = rows;
  f.cols = cols;
  f.c = detail::cols_of(a.eigen(), cols.indices);
  f.r = detail::rows_of(a.eigen(), rows.indices);
  f.u = detail::cols_of(f.r, cols.indices);
  f.rank_tol = rank_tol.value_or(detail::default_rank_tol(a.eigen()));
  f.u_pinv = detail::pseudoinverse(f.u, f.rank_tol);
  f.scheme_tag = "explicit";
  return f;
}

CharacterizationReport verify_characterization(const DenseMatrix& a, const IndexSet& rows,
                                               const IndexSet& cols, double tol,
                                               std::optional<double> rank_tol) {
  require_axes(rows, cols);
  check_indices(rows, a.rows());
  check_indices(cols, a.cols());

  const Matrix& am = a.eigen();
  CharacterizationReport rep;
  rep.tol = tol;
  rep.rank_tol = rank_tol.value_or(detail::default_rank_tol(am));
  const double t = rep.rank_tol;

  const Matrix c = detail::cols_of(am, cols.indices);
  const Matrix r = detail::rows_of(am, rows.indices);
  const Matrix u = detail::cols_of(r, cols.indices);

  rep.rank_a = detail::numerical_rank(am, t);
  rep.rank_c = detail::numerical_rank(c, t);
  rep.rank_r = detail::numerical_rank(r, t);
  rep.rank_u = detail::numerical_rank(u, t);

  const Matrix a_pinv = detail::pseudoinverse(am, t);
  const Matrix c_pinv = detail::pseudoinverse(c, t);
  const Matrix r_pinv = detail::pseudoinverse(r, t);
  const Matrix u_pinv = detail::pseudoinverse(u, t);

  const double a_norm = am.norm();
  const double a_pinv_norm = a_pinv.norm();

  const double res_ii = (am - c * u_pinv * r).norm();
  const double res_iii = (am - c * (c_pinv * am * r_pinv) * r).norm();
  const double res_iv = (a_pinv - r_pinv * u * c_pinv).norm();

  rep.residual_ii = ratio(res_ii, a_norm);
  rep.residual_iii = ratio(res_iii, a_norm);
  rep.residual_iv = ratio(res_iv, a_pinv_norm);

  rep.holds_i = rep.rank_u == rep.rank_a;
  rep.holds_ii = within(res_ii, a_norm, tol);
  rep.holds_iii = within(res_iii, a_norm, tol);
  rep.holds_iv = within(res_iv, a_pinv_norm, tol);
  rep.holds_v = rep.rank_c == rep.rank_a && rep.rank_r == rep.rank_a;

  if (rep.all_hold()) {
    const double res_u = (u_pinv - c_pinv * am * r_pinv).norm();
    rep.residual_u_pinv = ratio(res_u, u_pinv.norm());
    rep.u_pinv_identity = within(res_u, u_pinv.norm(), tol);
  }
  return rep;
}

CurFactors randomized_cur(const DenseMatrix& a, const ProbDist& row_dist, const ProbDist& col_dist,
                          Index d1, Index d2, const RandomStream& rng, bool dedup,
                          std::optional<double> rank_tol) {
  if (row_dist.axis() != Axis::Rows || col_dist.axis() != Axis::Cols)
    throw Error(ErrorCode::InvalidArgument, "randomized_cur: distributions on the wrong axes");
  if (row_dist.size() != a.rows() || col_dist.size() != a.cols())
    throw Error(ErrorCode::InvalidArgument, "randomized_cur: distribution length mismatch");

  RandomStream row_stream = rng.split(0);
  RandomStream col_stream = rng.split(1);
  IndexSet rows = draw_with_replacement(row_dist, d1, row_stream);
  IndexSet cols = draw_with_replacement(col_dist, d2, col_stream);
  if (dedup) {
    rows = dedup_indices(rows);
    cols = dedup_indices(cols);
  }
  CurFactors f = build_cur(a, rows, cols, rank_tol);
  f.scheme_tag = std::string(to_string(row_dist.scheme())) + "/" + to_string(col_dist.scheme());
  if (dedup) f.scheme_tag += "+dedup";
  return f;
}

double approx_error(const DenseMatrix& a, const CurFactors& f, Norm norm) {
  if (f.c.rows() != a.rows() || f.r.cols() != a.cols())
    throw Error(ErrorCode::InvalidArgument, "approx_error: factor shapes do not match A");
  const Matrix diff = a.eigen() - f.product();
  return norm == Norm::Frobenius ? diff.norm() : detail::spectral_norm(diff);
}

double relative_error(const DenseMatrix& a, const CurFactors& f, Norm norm) {
  const double ref = norm == Norm::Frobenius ? a.eigen().norm() : spectral_norm(a);
  return ratio(approx_error(a, f, norm), ref);
}

bool is_exact(const DenseMatrix& a, const CurFactors& f, double tol) {
  return within(approx_error(a, f, Norm::Frobenius), a.eigen().norm(), tol);
}

}  // namespace exactcur
