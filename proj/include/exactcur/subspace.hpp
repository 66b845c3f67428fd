// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_SUBSPACE_HPP
#define EXACTCUR_SUBSPACE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exactcur/cur.hpp"
#include "exactcur/matrix.hpp"
#include "exactcur/rng.hpp"

namespace exactcur {

/// Parameters of a synthetic union-of-subspaces data set.
struct SubspaceModelSpec {
  Index ambient_dim = 0;
  std::vector<Index> dims;
  /// Points per subspace; a single entry applies to every subspace.
  std::vector<Index> points;
  std::uint64_t seed = 0;
};

/// Parses `key=value` lines: ambient_dim, dims (comma list), points (comma
/// list or single count), seed. Blank lines and `#` comments are ignored.
SubspaceModelSpec parse_model_spec(const std::string& text);

struct SubspaceModel {
  Index ambient_dim = 0;
  std::vector<Index> subspace_dims;
  /// Orthonormal ambient_dim x d_i basis per subspace.
  std::vector<Matrix> bases;
  std::vector<Index> points_per_subspace;
  /// Subspace of each data column.
  std::vector<int> ground_truth;

  Index d_max() const;
};

/// Each basis is an orthonormalized Gaussian block, so the subspaces are
/// independent (and the points generic) with probability one. Points are
/// basis * Gaussian coefficients; columns are shuffled. Draws are repeated
/// in the measure-zero event that a rank check fails.
std::pair<DenseMatrix, SubspaceModel> generate_union_of_subspaces(const SubspaceModelSpec& spec,
                                                                  RandomStream& rng);

/// 0/1 matrix; W(i,j) = 1 iff points i and j are linked.
using Pattern = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Support of Q^{d_max} for Q = |Y^T Y|, Y = U^+ R, computed over the boolean
/// semiring: entries of Q at or below zero_tol * max|Q| are dropped, then
/// W(i,j) = 1 iff a walk of length <= d_max joins i and j. Diagonal is 1.
Pattern clustering_matrix(const CurFactors& factors, Index d_max, double zero_tol = 1e-10);

/// |Y^T Y| for Y = U^+ R.
Matrix shape_interaction(const CurFactors& factors);

struct ClusterLabels {
  std::vector<int> labels;
  int num_clusters = 0;
};

ClusterLabels make_labels(std::vector<int> raw);

/// Connected components of W, numbered in order of first appearance.
ClusterLabels labels_from_clustering_matrix(const Pattern& w);

/// Best agreement fraction over relabelings of `pred` (exhaustive; at most 8
/// labels, else TooManyClusters).
double clustering_accuracy(const ClusterLabels& pred, const ClusterLabels& truth);

}  // namespace exactcur

#endif
