// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include <doctest.h>

#include "exactcur/exactcur.h"

namespace {

struct MatrixHandle {
  ecur_matrix* ptr = nullptr;
  ~MatrixHandle() { ecur_matrix_free(ptr); }
};

struct CurHandle {
  ecur_cur* ptr = nullptr;
  ~CurHandle() { ecur_cur_free(ptr); }
};

// Column-major rank-2 6x5 matrix built from integer outer products.
std::vector<double> rank_two_data() {
  const double u1[6] = {1, 2, 0, -1, 3, 1}, v1[5] = {2, 0, 1, 1, -1};
  const double u2[6] = {0, 1, 1, 2, -1, 4}, v2[5] = {1, 3, -2, 0, 1};
  std::vector<double> d(30);
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 6; ++i) d[static_cast<std::size_t>(j * 6 + i)] = u1[i] * v1[j] + u2[i] * v2[j];
  return d;
}

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(ecur_status_string(ECUR_OK)) == "ok");
  CHECK(std::strlen(ecur_status_string(ECUR_ERR_CONFIG)) > 0);
  CHECK(std::string(ecur_version()) == "1.0.0");
}

TEST_CASE("matrix lifecycle") {
  MatrixHandle m;
  const std::vector<double> data = rank_two_data();
  REQUIRE(ecur_matrix_create(6, 5, data.data(), &m.ptr) == ECUR_OK);
  CHECK(ecur_matrix_rows(m.ptr) == 6);
  CHECK(ecur_matrix_cols(m.ptr) == 5);
  std::vector<double> back(30);
  CHECK(ecur_matrix_copy_data(m.ptr, back.data(), back.size()) == ECUR_OK);
  CHECK(back == data);
  CHECK(ecur_matrix_copy_data(m.ptr, back.data(), 29) == ECUR_ERR_BUFFER_TOO_SMALL);

  ecur_matrix* bad = nullptr;
  const double nan_entry[1] = {NAN};
  CHECK(ecur_matrix_create(1, 1, nan_entry, &bad) == ECUR_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::strlen(ecur_last_error()) > 0);
  CHECK(ecur_matrix_create(0, 1, data.data(), &bad) != ECUR_OK);
  CHECK(ecur_matrix_create(1, 1, nullptr, &bad) == ECUR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("matrix market round trip") {
  MatrixHandle m, back;
  const std::vector<double> data = rank_two_data();
  REQUIRE(ecur_matrix_create(6, 5, data.data(), &m.ptr) == ECUR_OK);
  const std::string path = (std::filesystem::temp_directory_path() / "exactcur_capi.mtx").string();
  CHECK(ecur_matrix_write_mm(m.ptr, path.c_str()) == ECUR_OK);
  REQUIRE(ecur_matrix_read_mm(path.c_str(), &back.ptr) == ECUR_OK);
  std::vector<double> got(30);
  ecur_matrix_copy_data(back.ptr, got.data(), got.size());
  CHECK(got == data);
  std::remove(path.c_str());
  ecur_matrix* missing = nullptr;
  CHECK(ecur_matrix_read_mm("/nonexistent/file.mtx", &missing) == ECUR_ERR_IO);
}

TEST_CASE("spectral quantities") {
  MatrixHandle m;
  const double diag[4] = {3, 0, 0, 4};
  REQUIRE(ecur_matrix_create(2, 2, diag, &m.ptr) == ECUR_OK);
  double sigma[2];
  size_t count = 0, rank = 0;
  double tol_used = 0;
  CHECK(ecur_svd(m.ptr, 0.0, sigma, 2, &count, &rank, &tol_used) == ECUR_OK);
  CHECK(count == 2);
  CHECK(rank == 2);
  CHECK(sigma[0] == doctest::Approx(4.0));
  CHECK(sigma[1] == doctest::Approx(3.0));
  CHECK(ecur_svd(m.ptr, 3.5, sigma, 2, &count, &rank, &tol_used) == ECUR_OK);
  CHECK(rank == 1);
  CHECK(tol_used == 3.5);
  CHECK(ecur_svd(m.ptr, 0.0, sigma, 1, &count, &rank, &tol_used) == ECUR_ERR_BUFFER_TOO_SMALL);

  double sr = 0, kappa = 0;
  CHECK(ecur_stable_rank(m.ptr, &sr) == ECUR_OK);
  CHECK(sr == doctest::Approx(25.0 / 16.0));
  CHECK(ecur_condition_number(m.ptr, 0.0, &kappa) == ECUR_OK);
  CHECK(kappa == doctest::Approx(4.0 / 3.0));

  MatrixHandle pinv;
  REQUIRE(ecur_pseudoinverse(m.ptr, 0.0, &pinv.ptr) == ECUR_OK);
  double p[4];
  ecur_matrix_copy_data(pinv.ptr, p, 4);
  CHECK(p[0] == doctest::Approx(1.0 / 3.0));
  CHECK(p[3] == doctest::Approx(0.25));

  MatrixHandle zero;
  const double z[4] = {0, 0, 0, 0};
  REQUIRE(ecur_matrix_create(2, 2, z, &zero.ptr) == ECUR_OK);
  CHECK(ecur_stable_rank(zero.ptr, &sr) == ECUR_ERR_ZERO_MATRIX);
}

TEST_CASE("cur build, verify and errors") {
  MatrixHandle a;
  const std::vector<double> data = rank_two_data();
  REQUIRE(ecur_matrix_create(6, 5, data.data(), &a.ptr) == ECUR_OK);
  const size_t rows[2] = {0, 1}, cols[2] = {0, 1};
  CurHandle f;
  REQUIRE(ecur_cur_build(a.ptr, rows, 2, cols, 2, 0.0, &f.ptr) == ECUR_OK);
  CHECK(ecur_cur_row_count(f.ptr) == 2);
  size_t got[2];
  CHECK(ecur_cur_col_indices(f.ptr, got, 2) == ECUR_OK);
  CHECK(got[1] == 1);
  double err = 1;
  CHECK(ecur_cur_relative_error(a.ptr, f.ptr, ECUR_NORM_FROBENIUS, &err) == ECUR_OK);
  CHECK(err <= 1e-12);

  ecur_report rep;
  CHECK(ecur_verify(a.ptr, rows, 2, cols, 2, 0.0, &rep) == ECUR_OK);
  for (int c = 0; c < 5; ++c) CHECK(rep.holds[c] == 1);
  CHECK(rep.u_pinv_identity == 1);
  CHECK(rep.rank_a == 2);
  CHECK(ecur_verify(a.ptr, rows, 1, cols, 1, 0.0, &rep) == ECUR_OK);
  for (int c = 0; c < 5; ++c) CHECK(rep.holds[c] == 0);

  const size_t bad_rows[1] = {6};
  ecur_cur* none = nullptr;
  CHECK(ecur_cur_build(a.ptr, bad_rows, 1, cols, 2, 0.0, &none) == ECUR_ERR_INDEX_OUT_OF_RANGE);
  CHECK(none == nullptr);
  CHECK(ecur_cur_build(nullptr, rows, 2, cols, 2, 0.0, &none) == ECUR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("randomized and deim cur") {
  MatrixHandle a;
  const std::vector<double> data = rank_two_data();
  REQUIRE(ecur_matrix_create(6, 5, data.data(), &a.ptr) == ECUR_OK);

  CurHandle d;
  REQUIRE(ecur_cur_deim(a.ptr, 2, 0.0, &d.ptr) == ECUR_OK);
  CHECK(ecur_cur_row_count(d.ptr) == 2);
  double err = 1;
  ecur_cur_relative_error(a.ptr, d.ptr, ECUR_NORM_SPECTRAL, &err);
  CHECK(err <= 1e-8);
  ecur_cur* deficient = nullptr;
  CHECK(ecur_cur_deim(a.ptr, 3, 0.0, &deficient) == ECUR_ERR_RANK_DEFICIENT);

  CurHandle r1, r2;
  REQUIRE(ecur_cur_randomized(a.ptr, ECUR_SCHEME_LEVERAGE, 2, 6, 6, 77, 0, &r1.ptr) == ECUR_OK);
  REQUIRE(ecur_cur_randomized(a.ptr, ECUR_SCHEME_LEVERAGE, 2, 6, 6, 77, 1, &r2.ptr) == ECUR_OK);
  CHECK(ecur_cur_row_count(r1.ptr) == 6);
  CHECK(ecur_cur_row_count(r2.ptr) <= 6);
  size_t i1[6], i2[6];
  ecur_cur_row_indices(r1.ptr, i1, 6);
  ecur_cur_row_indices(r2.ptr, i2, 6);
  CHECK(i1[0] == i2[0]);
  CHECK(ecur_cur_row_indices(r1.ptr, i1, 5) == ECUR_ERR_BUFFER_TOO_SMALL);
}

TEST_CASE("sample sizes") {
  int64_t d = 0;
  CHECK(ecur_sample_size_rv(5, 0.5, 0.5, 1, &d) == ECUR_OK);
  CHECK(d == 813);
  CHECK(ecur_sample_size_leverage(10, 1.0, 0.5, &d) == ECUR_OK);
  CHECK(d == 400);
  CHECK(ecur_sample_size_length_via_lev(3, 5, 3, 0.5, &d) == ECUR_OK);
  CHECK(d == 2276);
  CHECK(ecur_sample_size_rv(5, 1.5, 0.5, 1, &d) == ECUR_ERR_DOMAIN);
}

TEST_CASE("experiment and clustering runners") {
  char* csv = nullptr;
  const char* cfg = "m = 12\nn = 10\nk = 2\nd = 6\ntrials = 3\nseed = 4\n";
  REQUIRE(ecur_experiment_run(cfg, nullptr, &csv) == ECUR_OK);
  const std::string first(csv);
  ecur_string_free(csv);
  CHECK(first.rfind("trial,scheme,d1,d2,success,rel_err_2,rel_err_F,ms\n", 0) == 0);
  REQUIRE(ecur_experiment_run(cfg, nullptr, &csv) == ECUR_OK);
  CHECK(first == csv);
  ecur_string_free(csv);

  csv = nullptr;
  CHECK(ecur_experiment_run("trials = -3\n", nullptr, &csv) == ECUR_ERR_CONFIG);
  CHECK(std::string(ecur_last_error()).find("trials") != std::string::npos);
  CHECK(csv == nullptr);

  int labels[30];
  size_t count = 0;
  int exact = 0;
  double acc = 0;
  REQUIRE(ecur_cluster_run("ambient_dim = 20\ndims = 2,3,4\npoints = 10\nseed = 3\n", ECUR_SCHEME_LENGTH, 80,
                           11, labels, 30, &count, &exact, &acc) == ECUR_OK);
  CHECK(count == 30);
  if (exact) CHECK(acc == 1.0);
  CHECK(ecur_cluster_run("ambient_dim = 20\ndims = 2,3,4\npoints = 10\n", ECUR_SCHEME_LENGTH, 80, 11, labels,
                         10, &count, &exact, &acc) == ECUR_ERR_BUFFER_TOO_SMALL);
}
