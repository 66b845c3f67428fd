// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gates 1-10. Prints one PASS/FAIL line per gate and exits
// nonzero if any gate fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "exactcur/cur.hpp"
#include "exactcur/deim.hpp"
#include "exactcur/harness.hpp"
#include "exactcur/linalg.hpp"
#include "exactcur/sampling.hpp"
#include "support.hpp"

using namespace exactcur;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Gate {
  int id;
  const char* name;
  double time_limit_s;  // <= 0 means no limit
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Index ceil_k_ln_k(double factor, Index k) {
  return static_cast<Index>(std::ceil(factor * static_cast<double>(k) * std::log(static_cast<double>(k))));
}

Outcome characterization_equivalence() {
  const DenseMatrix a = testing::random_rank(5, 5, 2, 20240601);
  int pairs = 0, disagreements = 0, identity_failures = 0, exact = 0;
  for (unsigned mi = 1; mi < 32; ++mi) {
    for (unsigned mj = 1; mj < 32; ++mj) {
      IndexSet rows{{}, Axis::Rows}, cols{{}, Axis::Cols};
      for (Index i = 0; i < 5; ++i) {
        if (mi & (1u << i)) rows.indices.push_back(i);
        if (mj & (1u << i)) cols.indices.push_back(i);
      }
      const CharacterizationReport rep = verify_characterization(a, rows, cols);
      ++pairs;
      if (!rep.unanimous()) ++disagreements;
      if (rep.all_hold()) {
        ++exact;
        if (!rep.u_pinv_identity) ++identity_failures;
      }
    }
  }
  return {pairs == 961 && disagreements == 0 && identity_failures == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(exact) + " exact, " +
              std::to_string(disagreements) + " non-unanimous, " + std::to_string(identity_failures) +
              " U+ identity failures"};
}

ExperimentConfig recovery_config() {
  ExperimentConfig cfg;
  cfg.m = 50;
  cfg.n = 40;
  cfg.k = 4;
  cfg.d_grid = {ceil_k_ln_k(2.0, 4) + 4};
  cfg.trials = 500;
  cfg.master_seed = 42;
  return cfg;
}

Outcome length_recovery() {
  ExperimentConfig cfg = recovery_config();
  cfg.schemes = {Scheme::Length};
  const ExperimentResult res = run_success_probability_experiment(cfg);
  const double f = res.groups.at(0).fraction();
  return {cfg.d_grid[0] == 16 && f >= 0.99, "d=" + std::to_string(cfg.d_grid[0]) + " success " + fmt("%.3f", f) + " (>= 0.99)"};
}

Outcome uniform_recovery() {
  ExperimentConfig cfg = recovery_config();
  cfg.schemes = {Scheme::Uniform};
  const double dense = run_success_probability_experiment(cfg).groups.at(0).fraction();
  cfg.sparsity = 0.8;
  cfg.schemes = {Scheme::Uniform, Scheme::Length};
  const ExperimentResult sparse = run_success_probability_experiment(cfg);
  const std::string d = std::to_string(cfg.d_grid[0]);
  const double uni = sparse.group("uniform", d)->fraction();
  const double len = sparse.group("length", d)->fraction();
  return {dense >= 0.95 && len - uni >= 0.05,
          "dense uniform " + fmt("%.3f", dense) + " (>= 0.95); 80% zero columns: uniform " + fmt("%.3f", uni) +
              ", length " + fmt("%.3f", len) + " (gap >= 0.05)"};
}

Outcome deim_exactness() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::DeimCheck;
  cfg.m = 40;
  cfg.n = 33;
  cfg.ranks = {1, 2, 3, 4, 5, 6};
  cfg.trials = 100;
  cfg.master_seed = 7;
  const ExperimentResult res = run_deim_experiment(cfg);
  double worst = 0.0;
  for (const auto& r : res.records) worst = std::max(worst, r.rel_error_frobenius);
  const Index ok = res.groups.at(0).successes;
  return {ok == 100, std::to_string(ok) + "/100 exact, worst residual " + fmt("%.2e", worst)};
}

Outcome distribution_inequalities() {
  RandomStream rng(5054);
  int violations = 0, checked = 0;
  for (int t = 0; t < 200; ++t) {
    const Index m = testing::uniform_int(rng, 4, 30);
    const Index n = testing::uniform_int(rng, 4, 30);
    const Index k = testing::uniform_int(rng, 1, std::min<Index>({m, n, 8}));
    const DenseMatrix a = testing::random_rank(m, n, k, rng);
    const double r = stable_rank(a);
    const double kappa = condition_number(a);
    for (Axis axis : {Axis::Cols, Axis::Rows}) {
      const ProbDist lev = leverage_dist(a, k, axis);
      const ProbDist len = length_dist(a, axis);
      for (Index j = 0; j < lev.size(); ++j) {
        checked += 2;
        if (lev[j] < (r / k) * len[j] - 1e-10) ++violations;
        if (len[j] < (k / (r * kappa * kappa)) * lev[j] - 1e-10) ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(checked) + " inequalities, " + std::to_string(violations) + " violations"};
}

Outcome spectral_concentration() {
  RandomStream mat(86);
  const DenseMatrix a(testing::gaussian(8, 6, mat));
  const ProbDist p = length_dist(a, Axis::Rows);
  const Matrix gram = a.eigen().transpose() * a.eigen();
  const double bound = 0.1 * std::pow(spectral_norm(a), 2);
  const RandomStream root(8601);
  int good = 0;
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    RandomStream s = root.split(static_cast<std::uint64_t>(rep));
    const Matrix rhat = rescaled_submatrix(a, draw_with_replacement(p, 2000, s), p, 2000).eigen();
    const double gap = detail::spectral_norm(gram - rhat.transpose() * rhat);
    worst = std::max(worst, 0.1 * gap / bound);
    good += gap <= bound ? 1 : 0;
  }
  return {good >= 95, std::to_string(good) + "/100 within 0.1 ||A||_2^2 (worst gap " + fmt("%.4f", worst) + " ||A||_2^2)"};
}

Outcome noisy_recovery() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::NoiseStability;
  cfg.m = 50;
  cfg.n = 40;
  cfg.k = 5;
  cfg.sigma = 1e-4;
  cfg.d_grid = {ceil_k_ln_k(4.0, 5)};
  cfg.trials = 200;
  cfg.master_seed = 56;
  cfg.threads = 4;
  const ExperimentResult res = run_noise_experiment(cfg);
  const GroupSummary& g = res.groups.at(0);
  const double median = g.extra("median_noise_ratio").value_or(INFINITY);
  return {g.fraction() >= 0.95 && median <= 100.0,
          "d=" + std::to_string(cfg.d_grid[0]) + " exact-on-A " + fmt("%.3f", g.fraction()) + " (>= 0.95), median ratio " +
              fmt("%.3g", median) + " (<= 100)"};
}

Outcome clustering() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::Clustering;
  cfg.model.ambient_dim = 20;
  cfg.model.dims = {2, 3, 4};
  cfg.model.points = {10};
  cfg.d_grid = {ceil_k_ln_k(4.0, 9)};
  cfg.trials = 200;
  cfg.master_seed = 72;
  cfg.threads = 4;
  const ExperimentResult res = run_clustering_experiment(cfg);
  const GroupSummary& g = res.groups.at(0);
  const double perfect = g.extra("perfect").value_or(0.0);
  const double bad = g.extra("exact_but_imperfect").value_or(1.0);
  return {bad == 0.0 && perfect >= 0.99 * 200,
          "d=" + std::to_string(cfg.d_grid[0]) + " exact " + std::to_string(g.successes) + "/200, perfect " +
              fmt("%.0f", perfect) + "/200, exact-but-imperfect " + fmt("%.0f", bad)};
}

Outcome stable_rank_sandwich() {
  RandomStream rng(9009);
  int lower_bad = 0, upper_bad = 0;
  for (int t = 0; t < 500; ++t) {
    const Index m = testing::uniform_int(rng, 2, 30);
    const Index n = testing::uniform_int(rng, 2, 30);
    const Index k = testing::uniform_int(rng, 1, std::min(m, n));
    const DenseMatrix a = testing::random_rank(m, n, k, rng);
    Matrix e = testing::gaussian(m, n, rng);
    e *= 0.5 * rng.uniform() * frobenius_norm(a) / e.norm();
    const StableRankBounds b = stable_rank_perturbation_bounds(a, DenseMatrix(e));
    const double actual = stable_rank(DenseMatrix(a.eigen() + e));
    if (actual < b.lower * (1 - 1e-12)) ++lower_bad;
    if (actual > b.upper * (1 + 1e-12)) ++upper_bad;
  }
  return {lower_bad == 0 && upper_bad == 0, "500 pairs, lower violations " + std::to_string(lower_bad) +
                                                ", upper violations " + std::to_string(upper_bad)};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Outcome determinism() {
  std::vector<ExperimentConfig> cfgs(4);
  cfgs[0].d_grid = {8, 16};
  cfgs[0].schemes = {Scheme::Uniform, Scheme::Length, Scheme::Leverage};
  cfgs[1].kind = ExperimentKind::NoiseStability;
  cfgs[1].sigma = 1e-3;
  cfgs[1].d_grid = {16};
  cfgs[2].kind = ExperimentKind::DeimCheck;
  cfgs[2].ranks = {1, 2, 3, 4};
  cfgs[3].kind = ExperimentKind::Clustering;
  cfgs[3].model.ambient_dim = 20;
  cfgs[3].model.dims = {2, 3, 4};
  cfgs[3].model.points = {10};
  cfgs[3].d_grid = {80};
  int mismatches = 0;
  for (auto& c : cfgs) {
    c.trials = 40;
    c.master_seed = 1234;
    const std::string first = format_csv(run_experiment(c));
    c.threads = 3;
    const std::string second = format_csv(run_experiment(c));
    if (fnv1a(first) != fnv1a(second) || first != second) ++mismatches;
  }
  return {mismatches == 0, "4 experiment kinds rerun (1 vs 3 threads), " + std::to_string(mismatches) + " hash mismatches"};
}

}  // namespace

int main() {
  const std::vector<Gate> gates = {
      {1, "characterization equivalence", 5.0, characterization_equivalence},
      {2, "length-sampling recovery", 60.0, length_recovery},
      {3, "uniform-sampling recovery", 0.0, uniform_recovery},
      {4, "DEIM exactness", 10.0, deim_exactness},
      {5, "leverage/length inequalities", 0.0, distribution_inequalities},
      {6, "rescaled-row spectral concentration", 0.0, spectral_concentration},
      {7, "noisy recovery", 0.0, noisy_recovery},
      {8, "subspace clustering", 0.0, clustering},
      {9, "stable-rank sandwich", 0.0, stable_rank_sandwich},
      {10, "seeded determinism", 0.0, determinism},
  };
  int failures = 0;
  for (const Gate& g : gates) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = g.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt("%.2fs", secs);
    if (g.time_limit_s > 0.0) {
      timing += fmt(" < %.0fs", g.time_limit_s);
      if (secs >= g.time_limit_s) {
        out.pass = false;
        timing += " EXCEEDED";
      }
    }
    failures += out.pass ? 0 : 1;
    std::printf("%s criterion %d (%s): %s [%s]\n", out.pass ? "PASS" : "FAIL", g.id, g.name, out.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(gates.size()) - failures, gates.size());
  return failures == 0 ? 0 : 1;
}
