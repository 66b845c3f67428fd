// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "exactcur/exactcur.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "exactcur/cur.hpp"
#include "exactcur/deim.hpp"
#include "exactcur/harness.hpp"
#include "exactcur/linalg.hpp"
#include "exactcur/mmio.hpp"
#include "exactcur/subspace.hpp"

struct ecur_matrix {
  exactcur::DenseMatrix value;
};

struct ecur_cur {
  exactcur::CurFactors value;
};

namespace {

using namespace exactcur;

thread_local std::string last_error;

ecur_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroMatrix: return ECUR_ERR_ZERO_MATRIX;
    case ErrorCode::IndexOutOfRange: return ECUR_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::RankDeficient: return ECUR_ERR_RANK_DEFICIENT;
    case ErrorCode::DomainError: return ECUR_ERR_DOMAIN;
    case ErrorCode::ZeroProbabilityDraw: return ECUR_ERR_ZERO_PROBABILITY_DRAW;
    case ErrorCode::NoiseDominates: return ECUR_ERR_NOISE_DOMINATES;
    case ErrorCode::DivisionByZeroWeight: return ECUR_ERR_DIVISION_BY_ZERO_WEIGHT;
    case ErrorCode::SingularInterpolation: return ECUR_ERR_SINGULAR_INTERPOLATION;
    case ErrorCode::TooManyClusters: return ECUR_ERR_TOO_MANY_CLUSTERS;
    case ErrorCode::InvalidArgument: return ECUR_ERR_INVALID_ARGUMENT;
    case ErrorCode::IoError: return ECUR_ERR_IO;
    case ErrorCode::ParseError: return ECUR_ERR_PARSE;
    case ErrorCode::ConfigError: return ECUR_ERR_CONFIG;
  }
  return ECUR_ERR_INTERNAL;
}

ecur_status fail(ecur_status status, std::string msg) {
  last_error = std::move(msg);
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <class Fn>
ecur_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ECUR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ECUR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ECUR_ERR_INTERNAL, "unknown error");
  }
}

std::optional<double> opt_tol(double tol) {
  return tol > 0.0 ? std::optional<double>(tol) : std::nullopt;
}

IndexSet to_index_set(const size_t* idx, size_t count, Axis axis) {
  if (count > 0 && idx == nullptr) throw Error(ErrorCode::InvalidArgument, "null index array");
  IndexSet set;
  set.axis = axis;
  set.indices.reserve(count);
  for (size_t i = 0; i < count; ++i) set.indices.push_back(static_cast<Index>(idx[i]));
  return set;
}

ecur_status copy_indices(const IndexSet& set, size_t* out, size_t capacity) {
  if (capacity < set.size())
    return fail(ECUR_ERR_BUFFER_TOO_SMALL, "index buffer too small");
  if (out == nullptr && set.size() > 0) return fail(ECUR_ERR_INVALID_ARGUMENT, "null output");
  for (size_t i = 0; i < set.size(); ++i) out[i] = static_cast<size_t>(set.indices[i]);
  return ECUR_OK;
}

Scheme to_scheme(ecur_scheme s) {
  switch (s) {
    case ECUR_SCHEME_UNIFORM: return Scheme::Uniform;
    case ECUR_SCHEME_LENGTH: return Scheme::Length;
    case ECUR_SCHEME_LEVERAGE: return Scheme::Leverage;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown scheme");
}

#define ECUR_REQUIRE(cond, msg) \
  do {                          \
    if (!(cond)) return fail(ECUR_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

}  // namespace

extern "C" {

const char* ecur_status_string(ecur_status status) {
  switch (status) {
    case ECUR_OK: return "ok";
    case ECUR_ERR_ZERO_MATRIX: return "zero matrix";
    case ECUR_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case ECUR_ERR_RANK_DEFICIENT: return "rank deficient";
    case ECUR_ERR_DOMAIN: return "domain error";
    case ECUR_ERR_ZERO_PROBABILITY_DRAW: return "zero probability draw";
    case ECUR_ERR_NOISE_DOMINATES: return "noise dominates";
    case ECUR_ERR_DIVISION_BY_ZERO_WEIGHT: return "division by zero weight";
    case ECUR_ERR_SINGULAR_INTERPOLATION: return "singular interpolation";
    case ECUR_ERR_TOO_MANY_CLUSTERS: return "too many clusters";
    case ECUR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ECUR_ERR_IO: return "i/o error";
    case ECUR_ERR_PARSE: return "parse error";
    case ECUR_ERR_CONFIG: return "configuration error";
    case ECUR_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case ECUR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ecur_last_error(void) { return last_error.c_str(); }

const char* ecur_version(void) { return "1.0.0"; }

ecur_status ecur_matrix_create(size_t rows, size_t cols, const double* col_major,
                               ecur_matrix** out) {
  ECUR_REQUIRE(out != nullptr, "null output handle");
  ECUR_REQUIRE(col_major != nullptr, "null data");
  return guarded([&] {
    const std::vector<double> values(col_major, col_major + rows * cols);
    *out = new ecur_matrix{DenseMatrix::from_col_major(static_cast<Index>(rows),
                                                       static_cast<Index>(cols), values)};
    return ECUR_OK;
  });
}

void ecur_matrix_free(ecur_matrix* m) { delete m; }

size_t ecur_matrix_rows(const ecur_matrix* m) {
  return m ? static_cast<size_t>(m->value.rows()) : 0;
}

size_t ecur_matrix_cols(const ecur_matrix* m) {
  return m ? static_cast<size_t>(m->value.cols()) : 0;
}

ecur_status ecur_matrix_copy_data(const ecur_matrix* m, double* out, size_t capacity) {
  ECUR_REQUIRE(m != nullptr && out != nullptr, "null argument");
  const auto size = static_cast<size_t>(m->value.eigen().size());
  if (capacity < size) return fail(ECUR_ERR_BUFFER_TOO_SMALL, "data buffer too small");
  std::memcpy(out, m->value.eigen().data(), size * sizeof(double));
  return ECUR_OK;
}

ecur_status ecur_matrix_read_mm(const char* path, ecur_matrix** out) {
  ECUR_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new ecur_matrix{read_matrix_market(std::string(path))};
    return ECUR_OK;
  });
}

ecur_status ecur_matrix_write_mm(const ecur_matrix* m, const char* path) {
  ECUR_REQUIRE(m != nullptr && path != nullptr, "null argument");
  return guarded([&] {
    write_matrix_market(std::string(path), m->value);
    return ECUR_OK;
  });
}

ecur_status ecur_svd(const ecur_matrix* m, double tol, double* sigma, size_t capacity,
                     size_t* count, size_t* rank, double* tol_used) {
  ECUR_REQUIRE(m != nullptr, "null matrix");
  return guarded([&] {
    const SvdFactors f = detail::svd(m->value.eigen(), opt_tol(tol));
    const auto n = static_cast<size_t>(f.spectrum.size());
    if (count) *count = n;
    if (rank) *rank = static_cast<size_t>(f.numerical_rank);
    if (tol_used) *tol_used = f.tolerance_used;
    if (sigma) {
      if (capacity < n) return fail(ECUR_ERR_BUFFER_TOO_SMALL, "sigma buffer too small");
      for (size_t i = 0; i < n; ++i) sigma[i] = f.spectrum(static_cast<Index>(i));
    }
    return ECUR_OK;
  });
}

ecur_status ecur_pseudoinverse(const ecur_matrix* m, double tol, ecur_matrix** out) {
  ECUR_REQUIRE(m != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new ecur_matrix{pseudoinverse(m->value, opt_tol(tol))};
    return ECUR_OK;
  });
}

ecur_status ecur_stable_rank(const ecur_matrix* m, double* out) {
  ECUR_REQUIRE(m != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = stable_rank(m->value);
    return ECUR_OK;
  });
}

ecur_status ecur_condition_number(const ecur_matrix* m, double tol, double* out) {
  ECUR_REQUIRE(m != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = condition_number(m->value, opt_tol(tol));
    return ECUR_OK;
  });
}

ecur_status ecur_cur_build(const ecur_matrix* a, const size_t* rows, size_t nrows,
                           const size_t* cols, size_t ncols, double tol, ecur_cur** out) {
  ECUR_REQUIRE(a != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new ecur_cur{build_cur(a->value, to_index_set(rows, nrows, Axis::Rows),
                                  to_index_set(cols, ncols, Axis::Cols), opt_tol(tol))};
    return ECUR_OK;
  });
}

ecur_status ecur_cur_randomized(const ecur_matrix* a, ecur_scheme scheme, size_t k, size_t d1,
                                size_t d2, uint64_t seed, int dedup, ecur_cur** out) {
  ECUR_REQUIRE(a != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const Scheme s = to_scheme(scheme);
    const auto rank = static_cast<Index>(k);
    const ProbDist rows = make_dist(a->value, s, Axis::Rows, rank);
    const ProbDist cols = make_dist(a->value, s, Axis::Cols, rank);
    *out = new ecur_cur{randomized_cur(a->value, rows, cols, static_cast<Index>(d1),
                                       static_cast<Index>(d2), RandomStream(seed), dedup != 0)};
    return ECUR_OK;
  });
}

ecur_status ecur_cur_deim(const ecur_matrix* a, size_t k, double tol, ecur_cur** out) {
  ECUR_REQUIRE(a != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new ecur_cur{deim_cur(a->value, static_cast<Index>(k), opt_tol(tol))};
    return ECUR_OK;
  });
}

void ecur_cur_free(ecur_cur* f) { delete f; }

size_t ecur_cur_row_count(const ecur_cur* f) { return f ? f->value.rows.size() : 0; }

size_t ecur_cur_col_count(const ecur_cur* f) { return f ? f->value.cols.size() : 0; }

ecur_status ecur_cur_row_indices(const ecur_cur* f, size_t* out, size_t capacity) {
  ECUR_REQUIRE(f != nullptr, "null factors");
  return copy_indices(f->value.rows, out, capacity);
}

ecur_status ecur_cur_col_indices(const ecur_cur* f, size_t* out, size_t capacity) {
  ECUR_REQUIRE(f != nullptr, "null factors");
  return copy_indices(f->value.cols, out, capacity);
}

ecur_status ecur_cur_relative_error(const ecur_matrix* a, const ecur_cur* f, ecur_norm norm,
                                    double* out) {
  ECUR_REQUIRE(a != nullptr && f != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = relative_error(a->value, f->value,
                          norm == ECUR_NORM_SPECTRAL ? Norm::Spectral : Norm::Frobenius);
    return ECUR_OK;
  });
}

ecur_status ecur_verify(const ecur_matrix* a, const size_t* rows, size_t nrows, const size_t* cols,
                        size_t ncols, double tol, ecur_report* out) {
  ECUR_REQUIRE(a != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const CharacterizationReport r =
        verify_characterization(a->value, to_index_set(rows, nrows, Axis::Rows),
                                to_index_set(cols, ncols, Axis::Cols),
                                tol > 0.0 ? tol : kExactTol);
    out->rank_a = static_cast<size_t>(r.rank_a);
    out->rank_c = static_cast<size_t>(r.rank_c);
    out->rank_r = static_cast<size_t>(r.rank_r);
    out->rank_u = static_cast<size_t>(r.rank_u);
    out->holds[0] = r.holds_i;
    out->holds[1] = r.holds_ii;
    out->holds[2] = r.holds_iii;
    out->holds[3] = r.holds_iv;
    out->holds[4] = r.holds_v;
    out->u_pinv_identity = r.u_pinv_identity;
    out->residual_ii = r.residual_ii;
    out->residual_iii = r.residual_iii;
    out->residual_iv = r.residual_iv;
    out->residual_u_pinv = r.residual_u_pinv;
    return ECUR_OK;
  });
}

ecur_status ecur_sample_size_rv(double r, double eps, double delta, double big_c, int64_t* out) {
  ECUR_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    *out = min_sample_size_rv(r, eps, delta, big_c);
    return ECUR_OK;
  });
}

ecur_status ecur_sample_size_leverage(size_t k, double beta, double delta, int64_t* out) {
  ECUR_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    *out = sample_size_leverage(static_cast<Index>(k), beta, delta);
    return ECUR_OK;
  });
}

ecur_status ecur_sample_size_length_via_lev(double r, double kappa, size_t k, double delta,
                                            int64_t* out) {
  ECUR_REQUIRE(out != nullptr, "null output");
  return guarded([&] {
    *out = sample_size_length_via_lev(r, kappa, static_cast<Index>(k), delta);
    return ECUR_OK;
  });
}

ecur_status ecur_experiment_run(const char* config_text, const char* out_path, char** csv_out) {
  ECUR_REQUIRE(config_text != nullptr, "null config");
  return guarded([&] {
    const ExperimentConfig cfg = parse_experiment_config(config_text);
    const ExperimentResult result = run_experiment(cfg);
    const std::string csv = format_csv(result);
    const std::string path = out_path ? std::string(out_path) : cfg.out_path;
    if (!path.empty()) emit_csv(result, path);
    if (csv_out) {
      auto* buf = static_cast<char*>(std::malloc(csv.size() + 1));
      if (!buf) throw std::bad_alloc();
      std::memcpy(buf, csv.c_str(), csv.size() + 1);
      *csv_out = buf;
    }
    return ECUR_OK;
  });
}

ecur_status ecur_cluster_run(const char* model_text, ecur_scheme scheme, size_t d, uint64_t seed,
                             int* labels, size_t capacity, size_t* count, int* exact,
                             double* accuracy) {
  ECUR_REQUIRE(model_text != nullptr, "null model spec");
  ECUR_REQUIRE(d >= 1, "d must be >= 1");
  return guarded([&] {
    const SubspaceModelSpec spec = parse_model_spec(model_text);
    RandomStream model_rng(spec.seed);
    const auto [a, model] = generate_union_of_subspaces(spec, model_rng);
    Index k = 0;
    for (Index dim : model.subspace_dims) k += dim;
    const Scheme s = to_scheme(scheme);
    const CurFactors f =
        randomized_cur(a, make_dist(a, s, Axis::Rows, k), make_dist(a, s, Axis::Cols, k),
                       static_cast<Index>(d), static_cast<Index>(d), RandomStream(seed));
    const ClusterLabels pred =
        labels_from_clustering_matrix(clustering_matrix(f, model.d_max()));
    if (count) *count = pred.labels.size();
    if (exact) *exact = is_exact(a, f) ? 1 : 0;
    if (accuracy) *accuracy = clustering_accuracy(pred, make_labels(model.ground_truth));
    if (labels) {
      if (capacity < pred.labels.size())
        return fail(ECUR_ERR_BUFFER_TOO_SMALL, "label buffer too small");
      for (size_t i = 0; i < pred.labels.size(); ++i) labels[i] = pred.labels[i];
    }
    return ECUR_OK;
  });
}

void ecur_string_free(char* s) { std::free(s); }

}  // extern "C"
