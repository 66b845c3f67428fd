// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_TESTS_SUPPORT_HPP
#define EXACTCUR_TESTS_SUPPORT_HPP

#include <cstdint>

#include "exactcur/matrix.hpp"
#include "exactcur/rng.hpp"

namespace testing {

using exactcur::DenseMatrix;
using exactcur::Index;
using exactcur::Matrix;
using exactcur::RandomStream;

inline Matrix gaussian(Index m, Index n, RandomStream& rng) {
  Matrix g(m, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i) g(i, j) = rng.normal();
  return g;
}

/// Product of Gaussian m x k and k x n factors: rank k almost surely.
inline DenseMatrix random_rank(Index m, Index n, Index k, RandomStream& rng) {
  const Matrix left = gaussian(m, k, rng);
  const Matrix right = gaussian(k, n, rng);
  return DenseMatrix(left * right);
}

inline DenseMatrix random_rank(Index m, Index n, Index k, std::uint64_t seed) {
  RandomStream rng(seed);
  return random_rank(m, n, k, rng);
}

inline Index uniform_int(RandomStream& rng, Index lo, Index hi) {
  return lo + static_cast<Index>(rng.uniform() * static_cast<double>(hi - lo + 1));
}

inline double rel_diff(const Matrix& a, const Matrix& b) {
  const double ref = b.norm();
  return ref > 0.0 ? (a - b).norm() / ref : (a - b).norm();
}

}  // namespace testing

#endif
