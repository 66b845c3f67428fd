// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <sstream>

#include <doctest.h>

#include "exactcur/linalg.hpp"
#include "exactcur/mmio.hpp"
#include "support.hpp"

using namespace exactcur;
using testing::random_rank;
using testing::rel_diff;

namespace {

// Penrose identities, each relative to the size of the matrix it should equal.
void check_penrose(const Matrix& a, const Matrix& p, double tol) {
  CHECK(rel_diff(a * p * a, a) <= tol);
  CHECK(rel_diff(p * a * p, p) <= tol);
  CHECK(rel_diff((a * p).transpose(), a * p) <= tol);
  CHECK(rel_diff((p * a).transpose(), p * a) <= tol);
}

}  // namespace

TEST_CASE("compact_svd of small fixed matrices") {
  SUBCASE("diagonal") {
    const SvdFactors f = compact_svd(DenseMatrix::from_rows({{3, 0}, {0, 4}}));
    REQUIRE(f.numerical_rank == 2);
    CHECK(f.singular_values(0) == doctest::Approx(4.0));
    CHECK(f.singular_values(1) == doctest::Approx(3.0));
  }
  SUBCASE("rank one outer product") {
    const SvdFactors f = compact_svd(DenseMatrix::from_rows({{1, 1}, {2, 2}}));
    REQUIRE(f.numerical_rank == 1);
    CHECK(f.singular_values(0) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));
  }
  SUBCASE("zero matrix has no compact svd") {
    CHECK_THROWS_AS(compact_svd(DenseMatrix(3, 2)), Error);
    CHECK(numerical_rank(DenseMatrix(3, 2)) == 0);
  }
}

TEST_CASE("compact_svd reconstructs a rank-3 product and keeps orthonormal factors") {
  const DenseMatrix a = random_rank(8, 6, 3, 11);
  const SvdFactors f = compact_svd(a);
  REQUIRE(f.numerical_rank == 3);
  const Matrix rebuilt = f.left * f.singular_values.asDiagonal() * f.right.transpose();
  CHECK(rel_diff(rebuilt, a.eigen()) <= 1e-10);
  const Matrix i3 = Matrix::Identity(3, 3);
  CHECK((f.left.transpose() * f.left - i3).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK((f.right.transpose() * f.right - i3).cwiseAbs().maxCoeff() <= 1e-10);
  for (Index i = 0; i < f.numerical_rank; ++i) CHECK(f.singular_values(i) > f.tolerance_used);
  CHECK(f.spectrum.size() == 6);
}

TEST_CASE("singular vectors follow the sign convention and are deterministic") {
  const DenseMatrix a = random_rank(9, 7, 4, 5);
  const SvdFactors f = compact_svd(a);
  for (Index c = 0; c < f.numerical_rank; ++c) {
    Index pivot = 0;
    f.left.col(c).cwiseAbs().maxCoeff(&pivot);
    CHECK(f.left(pivot, c) >= 0.0);
  }
  const SvdFactors again = compact_svd(a);
  CHECK(again.left == f.left);
  CHECK(again.right == f.right);
  CHECK(-a.eigen() != a.eigen());
  // Negating A flips the singular vectors back onto the same convention.
  const SvdFactors neg = compact_svd(DenseMatrix(-a.eigen()));
  CHECK((neg.left - f.left).norm() <= 1e-10);
  CHECK((neg.right + f.right).norm() <= 1e-10);
}

TEST_CASE("pseudoinverse examples") {
  const DenseMatrix d = pseudoinverse(DenseMatrix::from_rows({{2, 0}, {0, 0}}));
  CHECK(d(0, 0) == doctest::Approx(0.5));
  CHECK(d(0, 1) == 0.0);
  CHECK(d(1, 0) == 0.0);
  CHECK(d(1, 1) == 0.0);

  const DenseMatrix col = pseudoinverse(DenseMatrix::from_rows({{1}, {1}}));
  REQUIRE(col.rows() == 1);
  REQUIRE(col.cols() == 2);
  CHECK(col(0, 0) == doctest::Approx(0.5));
  CHECK(col(0, 1) == doctest::Approx(0.5));

  const DenseMatrix z = pseudoinverse(DenseMatrix(2, 3));
  CHECK(z.rows() == 3);
  CHECK(z.cols() == 2);
  CHECK(z.eigen().norm() == 0.0);

  const DenseMatrix a = random_rank(5, 4, 2, 21);
  const DenseMatrix p = pseudoinverse(a);
  CHECK(rel_diff(a.eigen() * p.eigen() * a.eigen(), a.eigen()) <= 1e-8);
}

TEST_CASE("Penrose identities on random matrices up to 50x50") {
  RandomStream rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const Index m = testing::uniform_int(rng, 1, 50);
    const Index n = testing::uniform_int(rng, 1, 50);
    const Index k = testing::uniform_int(rng, 1, std::min(m, n));
    const DenseMatrix a = random_rank(m, n, k, rng);
    check_penrose(a.eigen(), pseudoinverse(a).eigen(), 1e-8);
  }
}

TEST_CASE("stable_rank") {
  CHECK(stable_rank(DenseMatrix(Matrix::Identity(5, 5))) == doctest::Approx(5.0));
  CHECK(stable_rank(DenseMatrix::from_rows({{1, 2, 3}, {2, 4, 6}})) == doctest::Approx(1.0));
  CHECK(stable_rank(DenseMatrix::from_rows({{2, 0}, {0, 1}})) == doctest::Approx(1.25));
  CHECK_THROWS_AS(stable_rank(DenseMatrix(2, 2)), Error);

  RandomStream rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Index m = testing::uniform_int(rng, 1, 12);
    const Index n = testing::uniform_int(rng, 1, 12);
    const Index k = testing::uniform_int(rng, 1, std::min(m, n));
    const DenseMatrix a = random_rank(m, n, k, rng);
    const double r = stable_rank(a);
    CHECK(r >= 1.0 - 1e-12);
    CHECK(r <= static_cast<double>(numerical_rank(a)) + 1e-9);
  }
}

TEST_CASE("condition_number uses the smallest nonzero singular value") {
  RandomStream rng(3);
  const Matrix q = Eigen::HouseholderQR<Matrix>(testing::gaussian(4, 4, rng)).householderQ();
  CHECK(condition_number(DenseMatrix(q)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(condition_number(DenseMatrix::from_rows({{4, 0}, {0, 1}})) == doctest::Approx(4.0));
  CHECK(condition_number(DenseMatrix::from_rows({{5, 0, 0}, {0, 2, 0}, {0, 0, 0}}), 1.0) ==
        doctest::Approx(2.5));
  CHECK_THROWS_AS(condition_number(DenseMatrix(2, 2)), Error);

  const DenseMatrix a = random_rank(7, 6, 3, 8);
  const double via_norms = spectral_norm(a) * spectral_norm(pseudoinverse(a));
  CHECK(condition_number(a) == doctest::Approx(via_norms).epsilon(1e-8));
}

TEST_CASE("submatrix extraction") {
  const DenseMatrix a = DenseMatrix::from_rows({{1, 2}, {3, 4}});
  const DenseMatrix r1 = submatrix(a, IndexSet{{1}, Axis::Rows});
  CHECK(r1.eigen() == DenseMatrix::from_rows({{3, 4}}).eigen());
  const DenseMatrix dup = submatrix(a, IndexSet{{0, 0}, Axis::Rows});
  CHECK(dup.eigen() == DenseMatrix::from_rows({{1, 2}, {1, 2}}).eigen());
  const DenseMatrix swapped = submatrix(a, IndexSet{{1, 0}, Axis::Cols});
  CHECK(swapped.eigen() == DenseMatrix::from_rows({{2, 1}, {4, 3}}).eigen());

  CHECK_THROWS_AS(submatrix(a, IndexSet{{2}, Axis::Rows}), Error);
  try {
    submatrix(a, IndexSet{{-1}, Axis::Cols});
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("submatrix composes: A(I,J) == (A(I,:))(:,J)") {
  RandomStream rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const Index m = testing::uniform_int(rng, 1, 9);
    const Index n = testing::uniform_int(rng, 1, 9);
    const DenseMatrix a(testing::gaussian(m, n, rng));
    IndexSet rows{{}, Axis::Rows}, cols{{}, Axis::Cols};
    const Index nr = testing::uniform_int(rng, 1, 12);
    const Index nc = testing::uniform_int(rng, 1, 12);
    for (Index t = 0; t < nr; ++t) rows.indices.push_back(testing::uniform_int(rng, 0, m - 1));
    for (Index t = 0; t < nc; ++t) cols.indices.push_back(testing::uniform_int(rng, 0, n - 1));
    CHECK(submatrix(a, rows, cols).eigen() == submatrix(submatrix(a, rows), cols).eigen());
  }
}

TEST_CASE("DenseMatrix rejects non-finite entries and empty shapes") {
  Matrix bad = Matrix::Ones(2, 2);
  bad(1, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(DenseMatrix{bad}, Error);
  bad(1, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(DenseMatrix{bad}, Error);
  CHECK_THROWS_AS(DenseMatrix(0, 3), Error);
}

TEST_CASE("stable-rank perturbation bounds on random pairs") {
  RandomStream rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index m = testing::uniform_int(rng, 2, 15);
    const Index n = testing::uniform_int(rng, 2, 15);
    const Index k = testing::uniform_int(rng, 1, std::min(m, n));
    const DenseMatrix a = random_rank(m, n, k, rng);
    Matrix e = testing::gaussian(m, n, rng);
    e *= 0.5 * rng.uniform() * a.eigen().norm() / e.norm();
    const DenseMatrix ed(e);
    const StableRankBounds b = stable_rank_perturbation_bounds(a, ed);
    const double perturbed = stable_rank(DenseMatrix(a.eigen() + e));
    CHECK(b.lower <= perturbed * (1 + 1e-12));
    CHECK(perturbed <= b.upper * (1 + 1e-12));
    ++checked;
  }
  CHECK(checked == 200);
  CHECK_THROWS_AS(stable_rank_perturbation_bounds(DenseMatrix(Matrix::Identity(2, 2)),
                                                  DenseMatrix(Matrix::Identity(2, 2) * 2.0)),
                  Error);
}

TEST_CASE("matrix market round trip and errors") {
  RandomStream rng(5);
  const DenseMatrix a(testing::gaussian(4, 3, rng));
  std::stringstream buf;
  write_matrix_market(buf, a);
  const std::string text = buf.str();
  CHECK(text.rfind("%%MatrixMarket matrix array real general\n4 3\n", 0) == 0);
  CHECK(read_matrix_market(buf).eigen() == a.eigen());

  std::istringstream with_comments(
      "%%MatrixMarket matrix array real general\n% comment\n2 2\n1\n3\n2\n4\n");
  CHECK(read_matrix_market(with_comments).eigen() ==
        DenseMatrix::from_rows({{1, 2}, {3, 4}}).eigen());

  std::istringstream coordinate("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 1\n");
  CHECK_THROWS_AS(read_matrix_market(coordinate), Error);
  std::istringstream short_body("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n");
  CHECK_THROWS_AS(read_matrix_market(short_body), Error);
  CHECK_THROWS_AS(read_matrix_market(std::string("/nonexistent/file.mtx")), Error);
}
