// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_SAMPLING_HPP
#define EXACTCUR_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exactcur/matrix.hpp"
#include "exactcur/rng.hpp"

namespace exactcur {

enum class Scheme { Uniform, Length, Leverage };

const char* to_string(Scheme scheme) noexcept;
/// Accepts "uniform", "length", "leverage"; throws InvalidArgument otherwise.
Scheme parse_scheme(const std::string& name);

//
// Probability vector over the rows or the columns of a matrix. Weights are
// nonnegative and sum to 1 within 1e-12.
//
class ProbDist {
 public:
  ProbDist(std::vector<double> weights, Axis axis, Scheme scheme, Index rank = 0);

  const std::vector<double>& weights() const noexcept { return weights_; }
  double operator[](Index i) const { return weights_[static_cast<std::size_t>(i)]; }
  Index size() const noexcept { return static_cast<Index>(weights_.size()); }
  Axis axis() const noexcept { return axis_; }
  Scheme scheme() const noexcept { return scheme_; }
  /// Target rank k for leverage distributions, 0 otherwise.
  Index rank() const noexcept { return rank_; }

 private:
  std::vector<double> weights_;
  Axis axis_;
  Scheme scheme_;
  Index rank_;
};

ProbDist uniform_dist(Index n, Axis axis);

/// Squared row or column norms over ||A||_F^2; zero rows/columns get exactly 0.
ProbDist length_dist(const DenseMatrix& a, Axis axis);

/// Rank-k leverage scores: (1/k)||V_k(j,:)||^2 for columns, W_k for rows.
/// RankDeficient if k exceeds the numerical rank at `tol`.
ProbDist leverage_dist(const DenseMatrix& a, Index k, Axis axis, std::optional<double> tol = {});

/// Distribution of `scheme` for the given axis (k only matters for leverage).
ProbDist make_dist(const DenseMatrix& a, Scheme scheme, Axis axis, Index k = 0);

/// d i.i.d. draws by inverse CDF (binary search over cumulative weights).
/// Indices with zero weight are never returned.
IndexSet draw_with_replacement(const ProbDist& dist, Index d, RandomStream& rng);

/// Removes repeats, keeping first occurrences in order.
IndexSet dedup_indices(const IndexSet& set);

/// Drawn rows (or columns) of A scaled by 1/sqrt(d * p_i); the Gram matrix of
/// the result is an unbiased estimate of A^T A (or A A^T for columns).
/// ZeroProbabilityDraw if some drawn index has weight 0.
DenseMatrix rescaled_submatrix(const DenseMatrix& a, const IndexSet& drawn, const ProbDist& dist,
                               Index d);

//
// Sample-size formulas. `log` is the natural logarithm throughout.
//

/// Sample-size parameters for stable-rank driven sampling; the leading
/// constant `big_c` is a free parameter.
struct SampleSizeSpec {
  double r = 1.0;
  Index k = 1;
  double eps = 0.5;
  double delta = 0.5;
  double big_c = 1.0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
};

/// ceil(big_c * x log x) with x = r/(eps^4 delta); ceil(x) when log x < 1.
std::int64_t min_sample_size_rv(double r, double eps, double delta, double big_c = 1.0);

/// Fills d1 = d2 from min_sample_size_rv.
SampleSizeSpec make_sample_size_spec(double r, Index k, double eps, double delta,
                                     double big_c = 1.0);

/// ceil((8/beta)(log(2k) + 1/delta) k).
std::int64_t sample_size_leverage(Index k, double beta, double delta);

/// ceil(8 r kappa^2 (log(2k) + 1/delta)).
std::int64_t sample_size_length_via_lev(double r, double kappa, Index k, double delta);

//
// Per-index stability floors. alpha_per_col[j] and beta_per_row[i] satisfy
// p~_j >= alpha_j^2 p_j^col and q~_i >= beta_i^2 q_i^row for the
// distributions they were built for. Zero rows/columns carry floor 1.
//
struct StabilityParams {
  std::vector<double> alpha_per_col;
  std::vector<double> beta_per_row;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
};

/// Floors certifying uniform sampling against length sampling:
/// alpha_j^2 = ||A||_F^2 / (n ||A(:,j)||^2), beta_i^2 = ||A||_F^2 / (m ||A(i,:)||^2).
StabilityParams uniform_stability_floor(const DenseMatrix& a);

/// Floors certifying length sampling of A + E against length sampling of A:
///   beta_i = (1 - |E(i,:)|/|A(i,:)|) / (1 + |E|_F/|A|_F), alpha_j likewise.
/// Throws NoiseDominatesError when a floor would be <= 0.
StabilityParams noisy_stability_floor(const DenseMatrix& a, const DenseMatrix& e);

/// True when p~ >= alpha_j^2 p^col(A) and q~ >= beta_i^2 q^row(A) for every
/// index, up to a relative slack.
bool certifies(const StabilityParams& params, const DenseMatrix& a, const ProbDist& p_cols,
               const ProbDist& q_rows, double slack = 1e-12);

/// min(kappa(A)^-1, delta^(-1/4) sqrt(2 gamma)); kappa(A)^-1 alone without params.
double epsilon_ceiling(const DenseMatrix& a, const std::optional<StabilityParams>& params,
                       double delta);

/// c(p~) = max_j p_lev_j / p~_j.
double leverage_dominance_ratio(const ProbDist& p_tilde, const ProbDist& p_lev);

}  // namespace exactcur

#endif
