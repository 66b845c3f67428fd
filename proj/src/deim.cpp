// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "exactcur/deim.hpp"

#include <cmath>
#include <limits>

#include "exactcur/linalg.hpp"

namespace exactcur {

namespace {

Index argmax_abs(const Vector& v) {
  Index best = 0;
  double best_val = std::abs(v(0));
  for (Index i = 1; i < v.size(); ++i) {
    if (std::abs(v(i)) > best_val) {
      best_val = std::abs(v(i));
      best = i;
    }
  }
  return best;
}

}  // namespace

DeimSelection deim_select(const Matrix& basis, Index ell, Axis axis) {
  if (ell < 1 || ell > basis.cols())
    throw Error(ErrorCode::InvalidArgument, "deim_select: ell must lie in [1, basis columns]");
  if (basis.rows() < ell)
    throw Error(ErrorCode::InvalidArgument, "deim_select: basis has fewer rows than ell");

  DeimSelection sel;
  sel.indices.axis = axis;
  sel.source_basis = basis.leftCols(ell);

  Vector residual = basis.col(0);
  for (Index j = 0; j < ell; ++j) {
    if (j > 0) {
      const Matrix block = basis.leftCols(j);
      const Matrix interp = detail::rows_of(block, sel.indices.indices);
      Vector rhs(j);
      for (Index t = 0; t < j; ++t) rhs(t) = basis(sel.indices.indices[t], j);
      const Eigen::PartialPivLU<Matrix> lu(interp);
      if (!(lu.rcond() > std::numeric_limits<double>::epsilon()))
        throw Error(ErrorCode::SingularInterpolation,
                    "deim_select: interpolation matrix singular at step " + std::to_string(j));
      residual = basis.col(j) - block * lu.solve(rhs);
    }
    const Index p = argmax_abs(residual);
    sel.indices.indices.push_back(p);
    sel.residual_maxima.push_back(std::abs(residual(p)));
  }
  return sel;
}

CurFactors deim_cur(const DenseMatrix& a, Index k, std::optional<double> rank_tol) {
  if (k < 1) throw Error(ErrorCode::DomainError, "deim_cur: k must be >= 1");
  const SvdFactors f = detail::svd(a.eigen(), rank_tol);
  if (f.numerical_rank < k)
    throw Error(ErrorCode::RankDeficient, "deim_cur: numerical rank " +
                                              std::to_string(f.numerical_rank) + " < k = " +
                                              std::to_string(k));
  const DeimSelection cols = deim_select(f.right, k, Axis::Cols);
  const DeimSelection rows = deim_select(f.left, k, Axis::Rows);
  CurFactors out = build_cur(a, rows.indices, cols.indices, f.tolerance_used);
  out.scheme_tag = "deim";
  return out;
}

double deim_growth_bound(Index n, Index ell) noexcept {
  return std::sqrt(static_cast<double>(n * ell) / 3.0) * std::ldexp(1.0, static_cast<int>(ell));
}

double deim_interpolation_norm(const Matrix& basis, const DeimSelection& sel) {
  const auto ell = static_cast<Index>(sel.indices.size());
  const Matrix block = detail::rows_of(basis.leftCols(ell), sel.indices.indices);
  const Vector s = detail::singular_values(block);
  const double smallest = s(s.size() - 1);
  return smallest > 0.0 ? 1.0 / smallest : std::numeric_limits<double>::infinity();
}

DeimCertificate deim_noise_certificate(const DenseMatrix& a_tilde, Index k, double e_bound) {
  if (k < 1) throw Error(ErrorCode::DomainError, "deim_noise_certificate: k must be >= 1");
  if (!(e_bound >= 0.0))
    throw Error(ErrorCode::DomainError, "deim_noise_certificate: E bound must be >= 0");

  const Vector s = detail::singular_values(a_tilde.eigen());
  const double sigma_k = k <= s.size() ? s(k - 1) : 0.0;
  const auto m = static_cast<double>(a_tilde.rows());
  const auto n = static_cast<double>(a_tilde.cols());
  const auto kd = static_cast<double>(k);

  DeimCertificate cert;
  cert.sigma_k_lower = sigma_k - e_bound;
  cert.threshold =
      (1.0 + std::ldexp(1.0, static_cast<int>(k)) * std::sqrt(std::max(n * kd, m * kd) / 3.0)) *
      e_bound;
  cert.margin = cert.sigma_k_lower - cert.threshold;
  cert.holds = cert.sigma_k_lower > 0.0 && cert.margin >= 0.0;
  return cert;
}

}  // namespace exactcur
