// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "exactcur/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "exactcur/linalg.hpp"
#include "kv.hpp"

namespace exactcur {

SubspaceModelSpec parse_model_spec(const std::string& text) {
  SubspaceModelSpec spec;
  bool have_dim = false, have_dims = false, have_points = false;
  for (const auto& entry : kv::parse(text)) {
    if (entry.key == "ambient_dim") {
      spec.ambient_dim = kv::to_count(entry);
      have_dim = true;
    } else if (entry.key == "dims") {
      for (auto v : kv::to_count_list(entry)) spec.dims.push_back(v);
      have_dims = true;
    } else if (entry.key == "points") {
      for (auto v : kv::to_count_list(entry)) spec.points.push_back(v);
      have_points = true;
    } else if (entry.key == "seed") {
      spec.seed = kv::to_u64(entry);
    } else {
      throw ConfigError(entry.line, entry.key, "line " + std::to_string(entry.line) +
                                                   ": unknown model key '" + entry.key + "'");
    }
  }
  if (!have_dim) throw ConfigError(0, "ambient_dim", "model spec: missing ambient_dim");
  if (!have_dims) throw ConfigError(0, "dims", "model spec: missing dims");
  if (!have_points) throw ConfigError(0, "points", "model spec: missing points");
  return spec;
}

Index SubspaceModel::d_max() const {
  return subspace_dims.empty() ? 0 : *std::max_element(subspace_dims.begin(), subspace_dims.end());
}

std::pair<DenseMatrix, SubspaceModel> generate_union_of_subspaces(const SubspaceModelSpec& spec,
                                                                  RandomStream& rng) {
  const std::size_t count = spec.dims.size();
  if (count == 0) throw Error(ErrorCode::DomainError, "union of subspaces: no subspaces");
  if (spec.ambient_dim < 1) throw Error(ErrorCode::DomainError, "ambient_dim must be >= 1");
  std::vector<Index> points = spec.points;
  if (points.size() == 1) points.assign(count, points[0]);
  if (points.size() != count)
    throw Error(ErrorCode::DomainError, "points list length must match dims");

  Index total_dim = 0, total_points = 0;
  for (std::size_t s = 0; s < count; ++s) {
    if (spec.dims[s] < 1) throw Error(ErrorCode::DomainError, "subspace dims must be >= 1");
    if (points[s] < spec.dims[s])
      throw Error(ErrorCode::DomainError,
                  "each subspace needs at least as many points as its dimension");
    total_dim += spec.dims[s];
    total_points += points[s];
  }
  if (total_dim > spec.ambient_dim)
    throw Error(ErrorCode::DomainError, "sum of subspace dims exceeds ambient_dim");

  const Index m = spec.ambient_dim;
  for (int attempt = 0;; ++attempt) {
    SubspaceModel model;
    model.ambient_dim = m;
    model.subspace_dims = spec.dims;
    model.points_per_subspace = points;

    Matrix data(m, total_points);
    std::vector<int> truth(static_cast<std::size_t>(total_points));
    Matrix all_bases(m, total_dim);
    Index col = 0, basis_col = 0;
    bool generic = true;
    for (std::size_t s = 0; s < count; ++s) {
      const Index d = spec.dims[s];
      Matrix g(m, d);
      for (Index j = 0; j < d; ++j)
        for (Index i = 0; i < m; ++i) g(i, j) = rng.normal();
      Eigen::HouseholderQR<Matrix> qr(g);
      Matrix basis = qr.householderQ() * Matrix::Identity(m, d);
      all_bases.middleCols(basis_col, d) = basis;
      basis_col += d;

      Matrix coeffs(d, points[s]);
      for (Index j = 0; j < points[s]; ++j)
        for (Index i = 0; i < d; ++i) coeffs(i, j) = rng.normal();
      if (detail::numerical_rank(coeffs, detail::default_rank_tol(coeffs) * 1e3) != d)
        generic = false;
      data.middleCols(col, points[s]) = basis * coeffs;
      std::fill_n(truth.begin() + col, points[s], static_cast<int>(s));
      col += points[s];
      model.bases.push_back(std::move(basis));
    }
    const bool independent =
        detail::numerical_rank(all_bases, detail::default_rank_tol(all_bases) * 1e3) == total_dim;
    if ((!independent || !generic) && attempt < 16) continue;
    if (!independent || !generic)
      throw Error(ErrorCode::DomainError, "union of subspaces: degenerate draws");

    // Fisher-Yates shuffle of the columns.
    std::vector<Index> perm(static_cast<std::size_t>(total_points));
    std::iota(perm.begin(), perm.end(), Index{0});
    for (Index i = total_points - 1; i > 0; --i) {
      const auto j = static_cast<Index>(rng.uniform() * static_cast<double>(i + 1));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(std::min(j, i))]);
    }
    Matrix shuffled(m, total_points);
    model.ground_truth.resize(static_cast<std::size_t>(total_points));
    for (Index j = 0; j < total_points; ++j) {
      const Index src = perm[static_cast<std::size_t>(j)];
      shuffled.col(j) = data.col(src);
      model.ground_truth[static_cast<std::size_t>(j)] = truth[static_cast<std::size_t>(src)];
    }
    return {DenseMatrix(std::move(shuffled)), std::move(model)};
  }
}

Matrix shape_interaction(const CurFactors& factors) {
  const Matrix y = factors.u_pinv * factors.r;
  return (y.transpose() * y).cwiseAbs();
}

Pattern clustering_matrix(const CurFactors& factors, Index d_max, double zero_tol) {
  if (d_max < 1) throw Error(ErrorCode::DomainError, "clustering_matrix: d_max must be >= 1");
  const Matrix q = shape_interaction(factors);
  const Index n = q.rows();
  const double cutoff = zero_tol * q.maxCoeff();

  Pattern step(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) step(i, j) = (i == j || q(i, j) > cutoff) ? 1 : 0;

  // Boolean powers: walk lengths up to d_max (the forced diagonal pads shorter walks).
  Pattern w = step;
  for (Index p = 1; p < d_max; ++p) {
    Pattern next = Pattern::Zero(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index t = 0; t < n; ++t) {
        if (!step(t, j)) continue;
        for (Index i = 0; i < n; ++i)
          if (w(i, t)) next(i, j) = 1;
      }
    if (next == w) break;
    w = std::move(next);
  }
  return w;
}

ClusterLabels make_labels(std::vector<int> raw) {
  ClusterLabels out;
  std::unordered_map<int, int> rename;
  out.labels.reserve(raw.size());
  for (int v : raw) {
    auto [it, fresh] = rename.try_emplace(v, static_cast<int>(rename.size()));
    out.labels.push_back(it->second);
  }
  out.num_clusters = static_cast<int>(rename.size());
  return out;
}

ClusterLabels labels_from_clustering_matrix(const Pattern& w) {
  const auto n = static_cast<std::size_t>(w.rows());
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Index j = 0; j < w.cols(); ++j)
    for (Index i = 0; i < w.rows(); ++i)
      if (w(i, j)) {
        const auto a = find(static_cast<std::size_t>(i));
        const auto b = find(static_cast<std::size_t>(j));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<int> raw(n);
  for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<int>(find(i));
  return make_labels(std::move(raw));
}

double clustering_accuracy(const ClusterLabels& pred, const ClusterLabels& truth) {
  if (pred.labels.size() != truth.labels.size())
    throw Error(ErrorCode::InvalidArgument, "clustering_accuracy: length mismatch");
  if (pred.labels.empty()) return 1.0;
  const ClusterLabels p = make_labels(pred.labels);
  const ClusterLabels t = make_labels(truth.labels);
  const int width = std::max(p.num_clusters, t.num_clusters);
  if (width > 8)
    throw Error(ErrorCode::TooManyClusters, "clustering_accuracy: more than 8 clusters");

  // Contingency counts, then the best assignment over all permutations.
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(width),
                                       std::vector<int>(static_cast<std::size_t>(width), 0));
  for (std::size_t i = 0; i < p.labels.size(); ++i)
    ++counts[static_cast<std::size_t>(p.labels[i])][static_cast<std::size_t>(t.labels[i])];

  std::vector<int> perm(static_cast<std::size_t>(width));
  std::iota(perm.begin(), perm.end(), 0);
  int best = 0;
  do {
    int agree = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      agree += counts[a][static_cast<std::size_t>(perm[a])];
    best = std::max(best, agree);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(p.labels.size());
}

}  // namespace exactcur
