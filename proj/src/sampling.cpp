// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "exactcur/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "exactcur/linalg.hpp"

namespace exactcur {

namespace {

void require_open_unit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0))
    throw Error(ErrorCode::DomainError, std::string(name) + " must lie in (0, 1)");
}

// Squared norms of the rows (or columns) of A.
Vector squared_norms(const Matrix& a, Axis axis) {
  return axis == Axis::Rows ? Vector(a.rowwise().squaredNorm())
                            : Vector(a.colwise().squaredNorm().transpose());
}

std::int64_t checked_ceil(double value) {
  if (!std::isfinite(value) || value > 9.0e18)
    throw Error(ErrorCode::DomainError, "sample size overflows");
  return static_cast<std::int64_t>(std::ceil(value));
}

}  // namespace

const char* to_string(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::Uniform: return "uniform";
    case Scheme::Length: return "length";
    case Scheme::Leverage: return "leverage";
  }
  return "unknown";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "uniform") return Scheme::Uniform;
  if (name == "length") return Scheme::Length;
  if (name == "leverage") return Scheme::Leverage;
  throw Error(ErrorCode::InvalidArgument, "unknown sampling scheme '" + name + "'");
}

ProbDist::ProbDist(std::vector<double> weights, Axis axis, Scheme scheme, Index rank)
    : weights_(std::move(weights)), axis_(axis), scheme_(scheme), rank_(rank) {
  if (weights_.empty()) throw Error(ErrorCode::InvalidArgument, "empty distribution");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw Error(ErrorCode::InvalidArgument, "distribution weights must be finite and >= 0");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "distribution weights must sum to 1");
}

ProbDist uniform_dist(Index n, Axis axis) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "uniform_dist: n must be >= 1");
  return ProbDist(std::vector<double>(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n)),
                  axis, Scheme::Uniform);
}

ProbDist length_dist(const DenseMatrix& a, Axis axis) {
  const Vector norms = squared_norms(a.eigen(), axis);
  const double total = norms.sum();
  if (total == 0.0) throw Error(ErrorCode::ZeroMatrix, "length_dist of the zero matrix");
  std::vector<double> w(static_cast<std::size_t>(norms.size()));
  for (Index i = 0; i < norms.size(); ++i) w[static_cast<std::size_t>(i)] = norms(i) / total;
  return ProbDist(std::move(w), axis, Scheme::Length);
}

ProbDist leverage_dist(const DenseMatrix& a, Index k, Axis axis, std::optional<double> tol) {
  if (k < 1) throw Error(ErrorCode::DomainError, "leverage_dist: k must be >= 1");
  const SvdFactors f = compact_svd(a, tol);
  if (k > f.numerical_rank)
    throw Error(ErrorCode::RankDeficient, "leverage_dist: k = " + std::to_string(k) +
                                              " exceeds numerical rank " +
                                              std::to_string(f.numerical_rank));
  const Matrix& basis = axis == Axis::Cols ? f.right : f.left;
  const Vector lev = basis.leftCols(k).rowwise().squaredNorm() / static_cast<double>(k);
  return ProbDist(std::vector<double>(lev.data(), lev.data() + lev.size()), axis,
                  Scheme::Leverage, k);
}

ProbDist make_dist(const DenseMatrix& a, Scheme scheme, Axis axis, Index k) {
  switch (scheme) {
    case Scheme::Uniform: return uniform_dist(a.dim(axis), axis);
    case Scheme::Length: return length_dist(a, axis);
    case Scheme::Leverage: return leverage_dist(a, k, axis);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown scheme");
}

IndexSet draw_with_replacement(const ProbDist& dist, Index d, RandomStream& rng) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "draw_with_replacement: d must be >= 1");
  const auto& w = dist.weights();
  std::vector<double> cumulative(w.size());
  std::partial_sum(w.begin(), w.end(), cumulative.begin());
  const double total = cumulative.back();
  // Last index with positive weight, for the rare u*total == total rounding.
  std::size_t last_positive = w.size() - 1;
  while (last_positive > 0 && w[last_positive] == 0.0) --last_positive;

  IndexSet out;
  out.axis = dist.axis();
  out.indices.reserve(static_cast<std::size_t>(d));
  for (Index t = 0; t < d; ++t) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx >= w.size()) idx = last_positive;
    out.indices.push_back(static_cast<Index>(idx));
  }
  return out;
}

IndexSet dedup_indices(const IndexSet& set) {
  IndexSet out;
  out.axis = set.axis;
  std::unordered_set<Index> seen;
  for (Index i : set.indices)
    if (seen.insert(i).second) out.indices.push_back(i);
  return out;
}

DenseMatrix rescaled_submatrix(const DenseMatrix& a, const IndexSet& drawn, const ProbDist& dist,
                               Index d) {
  if (drawn.axis != dist.axis())
    throw Error(ErrorCode::InvalidArgument, "rescaled_submatrix: axis mismatch");
  if (dist.size() != a.dim(dist.axis()))
    throw Error(ErrorCode::InvalidArgument, "rescaled_submatrix: distribution length mismatch");
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "rescaled_submatrix: d must be >= 1");
  if (drawn.empty()) throw Error(ErrorCode::InvalidArgument, "rescaled_submatrix: no draws");
  check_indices(drawn, a.dim(drawn.axis));

  const bool rows = drawn.axis == Axis::Rows;
  Matrix out = rows ? detail::rows_of(a.eigen(), drawn.indices)
                    : detail::cols_of(a.eigen(), drawn.indices);
  for (std::size_t t = 0; t < drawn.size(); ++t) {
    const double p = dist[drawn.indices[t]];
    if (p <= 0.0)
      throw Error(ErrorCode::ZeroProbabilityDraw,
                  "rescaled_submatrix: index " + std::to_string(drawn.indices[t]) +
                      " has zero probability");
    const double scale = 1.0 / std::sqrt(static_cast<double>(d) * p);
    if (rows)
      out.row(static_cast<Index>(t)) *= scale;
    else
      out.col(static_cast<Index>(t)) *= scale;
  }
  return DenseMatrix(std::move(out));
}

std::int64_t min_sample_size_rv(double r, double eps, double delta, double big_c) {
  require_open_unit(eps, "eps");
  require_open_unit(delta, "delta");
  if (!(r >= 1.0)) throw Error(ErrorCode::DomainError, "stable rank r must be >= 1");
  if (!(big_c > 0.0)) throw Error(ErrorCode::DomainError, "leading constant must be > 0");
  const double x = r / (std::pow(eps, 4) * delta);
  const double lx = std::log(x);
  std::int64_t d = checked_ceil(big_c * x * lx);
  if (lx < 1.0) d = std::max(d, checked_ceil(x));
  return std::max<std::int64_t>(d, 1);
}

SampleSizeSpec make_sample_size_spec(double r, Index k, double eps, double delta, double big_c) {
  SampleSizeSpec s{r, k, eps, delta, big_c, 0, 0};
  s.d1 = s.d2 = min_sample_size_rv(r, eps, delta, big_c);
  return s;
}

std::int64_t sample_size_leverage(Index k, double beta, double delta) {
  if (k < 1) throw Error(ErrorCode::DomainError, "k must be >= 1");
  if (!(beta > 0.0 && beta <= 1.0)) throw Error(ErrorCode::DomainError, "beta must lie in (0, 1]");
  require_open_unit(delta, "delta");
  const auto kd = static_cast<double>(k);
  return checked_ceil((8.0 / beta) * (std::log(2.0 * kd) + 1.0 / delta) * kd);
}

std::int64_t sample_size_length_via_lev(double r, double kappa, Index k, double delta) {
  if (!(r >= 1.0)) throw Error(ErrorCode::DomainError, "stable rank r must be >= 1");
  if (!(kappa >= 1.0)) throw Error(ErrorCode::DomainError, "kappa must be >= 1");
  if (k < 1) throw Error(ErrorCode::DomainError, "k must be >= 1");
  require_open_unit(delta, "delta");
  return checked_ceil(8.0 * r * kappa * kappa *
                      (std::log(2.0 * static_cast<double>(k)) + 1.0 / delta));
}

namespace {

void finish_aggregates(StabilityParams& p) {
  p.alpha = *std::min_element(p.alpha_per_col.begin(), p.alpha_per_col.end());
  p.beta = *std::min_element(p.beta_per_row.begin(), p.beta_per_row.end());
  p.gamma = std::min(p.alpha, p.beta);
}

}  // namespace

StabilityParams uniform_stability_floor(const DenseMatrix& a) {
  const double fro2 = a.eigen().squaredNorm();
  if (fro2 == 0.0) throw Error(ErrorCode::ZeroMatrix, "uniform_stability_floor: A = 0");

  auto floors = [&](Axis axis) {
    const Vector norms = squared_norms(a.eigen(), axis);
    const auto count = static_cast<double>(norms.size());
    std::vector<double> out(static_cast<std::size_t>(norms.size()), 1.0);
    for (Index i = 0; i < norms.size(); ++i)
      if (norms(i) > 0.0) out[static_cast<std::size_t>(i)] = std::sqrt(fro2 / (count * norms(i)));
    return out;
  };

  StabilityParams p;
  p.alpha_per_col = floors(Axis::Cols);
  p.beta_per_row = floors(Axis::Rows);
  finish_aggregates(p);
  if (!certifies(p, a, uniform_dist(a.cols(), Axis::Cols), uniform_dist(a.rows(), Axis::Rows)))
    throw Error(ErrorCode::DomainError, "uniform_stability_floor: certification failed");
  return p;
}

StabilityParams noisy_stability_floor(const DenseMatrix& a, const DenseMatrix& e) {
  if (a.rows() != e.rows() || a.cols() != e.cols())
    throw Error(ErrorCode::InvalidArgument, "noisy_stability_floor: shape mismatch");
  const double a_fro = a.eigen().norm();
  if (a_fro == 0.0) throw Error(ErrorCode::ZeroMatrix, "noisy_stability_floor: A = 0");
  const double denom = 1.0 + e.eigen().norm() / a_fro;

  auto floors = [&](Axis axis) {
    const Vector a_norms = squared_norms(a.eigen(), axis).cwiseSqrt();
    const Vector e_norms = squared_norms(e.eigen(), axis).cwiseSqrt();
    std::vector<double> out(static_cast<std::size_t>(a_norms.size()), 1.0);
    for (Index i = 0; i < a_norms.size(); ++i) {
      if (a_norms(i) == 0.0) continue;
      const double numer = 1.0 - e_norms(i) / a_norms(i);
      if (numer <= 0.0)
        throw NoiseDominatesError(static_cast<std::size_t>(i), axis == Axis::Rows,
                                  std::string("noise dominates ") +
                                      (axis == Axis::Rows ? "row " : "column ") +
                                      std::to_string(i));
      out[static_cast<std::size_t>(i)] = numer / denom;
    }
    return out;
  };

  StabilityParams p;
  p.alpha_per_col = floors(Axis::Cols);
  p.beta_per_row = floors(Axis::Rows);
  finish_aggregates(p);

  const DenseMatrix noisy(a.eigen() + e.eigen());
  if (noisy.eigen().squaredNorm() > 0.0 &&
      !certifies(p, a, length_dist(noisy, Axis::Cols), length_dist(noisy, Axis::Rows), 1e-10))
    throw Error(ErrorCode::DomainError, "noisy_stability_floor: certification failed");
  return p;
}

bool certifies(const StabilityParams& params, const DenseMatrix& a, const ProbDist& p_cols,
               const ProbDist& q_rows, double slack) {
  if (p_cols.size() != a.cols() || q_rows.size() != a.rows()) return false;
  if (static_cast<Index>(params.alpha_per_col.size()) != a.cols() ||
      static_cast<Index>(params.beta_per_row.size()) != a.rows())
    return false;
  const ProbDist p_col = length_dist(a, Axis::Cols);
  const ProbDist q_row = length_dist(a, Axis::Rows);
  for (Index j = 0; j < a.cols(); ++j) {
    const double alpha = params.alpha_per_col[static_cast<std::size_t>(j)];
    const double bound = alpha * alpha * p_col[j];
    if (p_cols[j] < bound * (1.0 - slack)) return false;
  }
  for (Index i = 0; i < a.rows(); ++i) {
    const double beta = params.beta_per_row[static_cast<std::size_t>(i)];
    const double bound = beta * beta * q_row[i];
    if (q_rows[i] < bound * (1.0 - slack)) return false;
  }
  return true;
}

double epsilon_ceiling(const DenseMatrix& a, const std::optional<StabilityParams>& params,
                       double delta) {
  const double inv_kappa = 1.0 / condition_number(a);
  if (!params) return inv_kappa;
  require_open_unit(delta, "delta");
  return std::min(inv_kappa, std::pow(delta, -0.25) * std::sqrt(2.0 * params->gamma));
}

double leverage_dominance_ratio(const ProbDist& p_tilde, const ProbDist& p_lev) {
  if (p_tilde.size() != p_lev.size() || p_tilde.axis() != p_lev.axis())
    throw Error(ErrorCode::InvalidArgument, "leverage_dominance_ratio: mismatched distributions");
  double c = 0.0;
  for (Index j = 0; j < p_lev.size(); ++j) {
    if (p_lev[j] == 0.0) continue;
    if (p_tilde[j] == 0.0)
      throw Error(ErrorCode::DivisionByZeroWeight,
                  "leverage_dominance_ratio: p~ vanishes at index " + std::to_string(j));
    c = std::max(c, p_lev[j] / p_tilde[j]);
  }
  return c;
}

}  // namespace exactcur
