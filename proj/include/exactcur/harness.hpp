// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_HARNESS_HPP
#define EXACTCUR_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactcur/matrix.hpp"
#include "exactcur/rng.hpp"
#include "exactcur/sampling.hpp"
#include "exactcur/subspace.hpp"

namespace exactcur {

enum class ExperimentKind { SuccessProbability, NoiseStability, DeimCheck, Clustering };

const char* to_string(ExperimentKind kind) noexcept;

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::SuccessProbability;
  Index m = 50;
  Index n = 40;
  Index k = 4;
  /// Trial t uses ranks[t % ranks.size()]; empty means {k}.
  std::vector<Index> ranks;
  double sigma = 0.0;
  std::vector<Scheme> schemes{Scheme::Length};
  /// d1 = d2 = d for each grid value. When empty, (eps, delta, big_c) give d
  /// per trial through min_sample_size_rv on the trial matrix.
  std::vector<Index> d_grid;
  std::optional<double> eps;
  std::optional<double> delta;
  double big_c = 1.0;
  Index trials = 100;
  std::uint64_t master_seed = 0;
  std::string out_path;
  std::optional<double> kappa;
  double sparsity = 0.0;
  double exact_tol = 1e-8;
  bool dedup = false;
  bool record_timing = false;
  unsigned threads = 1;
  SubspaceModelSpec model;
  std::optional<Index> d_max;
  double zero_tol = 1e-10;

  Index rank_for_trial(Index trial) const;
};

/// Parses a key=value config; unknown keys and bad values raise ConfigError
/// naming the line and field.
ExperimentConfig parse_experiment_config(const std::string& text);

/// Throws ConfigError on an inconsistent configuration.
void validate(const ExperimentConfig& cfg);

struct TrialRecord {
  Index trial_index = 0;
  std::string scheme;
  Index d1 = 0;
  Index d2 = 0;
  bool success = false;
  double rel_error_spectral = 0.0;
  double rel_error_frobenius = 0.0;
  double wall_time_ms = 0.0;
};

/// Aggregate over one (scheme, grid point).
struct GroupSummary {
  std::string scheme;
  std::string d_label;
  Index trials = 0;
  Index successes = 0;
  std::vector<std::pair<std::string, double>> extras;

  double fraction() const { return trials > 0 ? static_cast<double>(successes) / trials : 0.0; }
  std::optional<double> extra(const std::string& name) const;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  std::vector<GroupSummary> groups;
  /// Free-form per-trial lines written after the group summaries.
  std::vector<std::string> notes;
  bool record_timing = false;

  const GroupSummary* group(const std::string& scheme, const std::string& d_label) const;
};

/// G1 G2^T with i.i.d. standard Gaussian G1 (m x k), G2 (n x k). With
/// `kappa` the singular values are reset to the geometric sequence from 1
/// down to 1/kappa; with `sparsity` a fraction of columns is zeroed.
DenseMatrix gaussian_low_rank(Index m, Index n, Index k, std::optional<double> kappa,
                              double sparsity, RandomStream& rng);

ExperimentResult run_success_probability_experiment(const ExperimentConfig& cfg);
ExperimentResult run_noise_experiment(const ExperimentConfig& cfg);
ExperimentResult run_deim_experiment(const ExperimentConfig& cfg);
ExperimentResult run_clustering_experiment(const ExperimentConfig& cfg);
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Header `trial,scheme,d1,d2,success,rel_err_2,rel_err_F,ms`, one row per
/// record, then `# summary` comment lines. Reals use %.17g.
std::string format_csv(const ExperimentResult& result);
void emit_csv(const ExperimentResult& result, const std::string& path);

}  // namespace exactcur

#endif
