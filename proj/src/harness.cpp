// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "exactcur/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "exactcur/cur.hpp"
#include "exactcur/deim.hpp"
#include "exactcur/linalg.hpp"
#include "kv.hpp"

namespace exactcur {

namespace {

constexpr std::uint64_t kMatrixStream = 0;
constexpr std::uint64_t kNoiseStream = 1;
constexpr std::uint64_t kSampleStreamBase = 100;

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Output of one trial: its records (all schemes and grid points) and notes.
struct TrialOutput {
  std::vector<TrialRecord> records;
  std::vector<std::string> notes;
  // Per record, named values folded into the group summaries.
  std::vector<std::vector<std::pair<std::string, double>>> extras;
};

// Runs trial bodies on `threads` workers; results are kept in trial order.
std::vector<TrialOutput> run_trials(const ExperimentConfig& cfg,
                                    const std::function<TrialOutput(Index)>& body) {
  const auto count = static_cast<std::size_t>(cfg.trials);
  std::vector<TrialOutput> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < count; t = next++) {
      try {
        out[t] = body(static_cast<Index>(t));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string grid_label(const ExperimentConfig& cfg, std::size_t g) {
  if (!cfg.d_grid.empty()) return std::to_string(cfg.d_grid[g]);
  return "auto";
}

std::size_t grid_size(const ExperimentConfig& cfg) {
  return cfg.d_grid.empty() ? 1 : cfg.d_grid.size();
}

Index grid_d(const ExperimentConfig& cfg, std::size_t g, const DenseMatrix& a) {
  if (!cfg.d_grid.empty()) return cfg.d_grid[g];
  return static_cast<Index>(min_sample_size_rv(stable_rank(a), *cfg.eps, *cfg.delta, cfg.big_c));
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

// Folds trial outputs into an ExperimentResult with one group per
// (scheme, d label), in first-seen order. Extras named "median:<x>" are
// reduced by median, everything else by sum.
ExperimentResult collect(const ExperimentConfig& cfg, std::vector<TrialOutput> trials,
                         const std::vector<std::string>& labels_in_order) {
  ExperimentResult res;
  res.record_timing = cfg.record_timing;
  struct Acc {
    GroupSummary summary;
    std::vector<std::pair<std::string, std::vector<double>>> values;
  };
  std::vector<Acc> accs;
  auto find_acc = [&](const std::string& scheme, const std::string& label) -> Acc& {
    for (auto& a : accs)
      if (a.summary.scheme == scheme && a.summary.d_label == label) return a;
    accs.push_back(Acc{GroupSummary{scheme, label, 0, 0, {}}, {}});
    return accs.back();
  };

  for (auto& trial : trials) {
    for (std::size_t r = 0; r < trial.records.size(); ++r) {
      const TrialRecord& rec = trial.records[r];
      Acc& acc = find_acc(rec.scheme, labels_in_order.at(r));
      ++acc.summary.trials;
      if (rec.success) ++acc.summary.successes;
      if (r < trial.extras.size()) {
        for (const auto& [name, value] : trial.extras[r]) {
          auto it = std::find_if(acc.values.begin(), acc.values.end(),
                                 [&](const auto& p) { return p.first == name; });
          if (it == acc.values.end()) {
            acc.values.emplace_back(name, std::vector<double>{});
            it = std::prev(acc.values.end());
          }
          it->second.push_back(value);
        }
      }
      res.records.push_back(rec);
    }
    for (auto& note : trial.notes) res.notes.push_back(std::move(note));
  }
  for (auto& acc : accs) {
    for (auto& [name, values] : acc.values) {
      if (name.rfind("median:", 0) == 0)
        acc.summary.extras.emplace_back(name.substr(7), median(values));
      else
        acc.summary.extras.emplace_back(name, std::accumulate(values.begin(), values.end(), 0.0));
    }
    res.groups.push_back(std::move(acc.summary));
  }
  return res;
}

// Record labels for a trial laid out as [grid][scheme].
std::vector<std::string> grid_scheme_labels(const ExperimentConfig& cfg) {
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < grid_size(cfg); ++g)
    for (std::size_t s = 0; s < cfg.schemes.size(); ++s) labels.push_back(grid_label(cfg, g));
  return labels;
}

ProbDist dist_for(const DenseMatrix& a, Scheme scheme, Axis axis, Index k) {
  return make_dist(a, scheme, axis, k);
}

}  // namespace

const char* to_string(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::SuccessProbability: return "success_prob";
    case ExperimentKind::NoiseStability: return "noise_stability";
    case ExperimentKind::DeimCheck: return "deim_check";
    case ExperimentKind::Clustering: return "clustering";
  }
  return "unknown";
}

Index ExperimentConfig::rank_for_trial(Index trial) const {
  if (ranks.empty()) return k;
  return ranks[static_cast<std::size_t>(trial) % ranks.size()];
}

std::optional<double> GroupSummary::extra(const std::string& name) const {
  for (const auto& [key, value] : extras)
    if (key == name) return value;
  return std::nullopt;
}

const GroupSummary* ExperimentResult::group(const std::string& scheme,
                                            const std::string& d_label) const {
  for (const auto& g : groups)
    if (g.scheme == scheme && g.d_label == d_label) return &g;
  return nullptr;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
  ExperimentConfig cfg;
  std::map<std::string, std::size_t> lines;
  for (const auto& e : kv::parse(text)) {
    const std::string& key = e.key;
    lines[key] = e.line;
    if (key == "big_c") lines["c"] = e.line;
    if (key == "ranks") lines.try_emplace("k", e.line);
    if (key == "kind") {
      if (e.value == "success_prob") cfg.kind = ExperimentKind::SuccessProbability;
      else if (e.value == "noise_stability") cfg.kind = ExperimentKind::NoiseStability;
      else if (e.value == "deim_check") cfg.kind = ExperimentKind::DeimCheck;
      else if (e.value == "clustering") cfg.kind = ExperimentKind::Clustering;
      else kv::fail(e, "unknown experiment kind '" + e.value + "'");
    } else if (key == "m") {
      cfg.m = kv::to_count(e);
    } else if (key == "n") {
      cfg.n = kv::to_count(e);
    } else if (key == "k") {
      cfg.k = kv::to_count(e);
    } else if (key == "ranks") {
      cfg.ranks.clear();
      for (auto v : kv::to_count_list(e)) cfg.ranks.push_back(v);
    } else if (key == "sigma") {
      cfg.sigma = kv::to_double(e);
      if (!(cfg.sigma >= 0.0)) kv::fail(e, "sigma must be >= 0");
    } else if (key == "scheme") {
      cfg.schemes.clear();
      for (const auto& name : kv::to_list(e)) {
        try {
          cfg.schemes.push_back(parse_scheme(name));
        } catch (const Error&) {
          kv::fail(e, "unknown scheme '" + name + "'");
        }
      }
    } else if (key == "d") {
      cfg.d_grid.clear();
      for (auto v : kv::to_count_list(e)) cfg.d_grid.push_back(v);
    } else if (key == "eps") {
      cfg.eps = kv::to_double(e);
    } else if (key == "delta") {
      cfg.delta = kv::to_double(e);
    } else if (key == "c" || key == "big_c") {
      cfg.big_c = kv::to_double(e);
    } else if (key == "trials") {
      cfg.trials = kv::to_count(e);
    } else if (key == "seed") {
      cfg.master_seed = kv::to_u64(e);
    } else if (key == "out") {
      cfg.out_path = e.value;
    } else if (key == "kappa") {
      cfg.kappa = kv::to_double(e);
    } else if (key == "sparsity") {
      cfg.sparsity = kv::to_double(e);
    } else if (key == "tol") {
      cfg.exact_tol = kv::to_double(e);
    } else if (key == "dedup") {
      cfg.dedup = kv::to_bool(e);
    } else if (key == "record_timing") {
      cfg.record_timing = kv::to_bool(e);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(kv::to_count(e));
    } else if (key == "ambient_dim") {
      cfg.model.ambient_dim = kv::to_count(e);
    } else if (key == "dims") {
      cfg.model.dims.clear();
      for (auto v : kv::to_count_list(e)) cfg.model.dims.push_back(v);
    } else if (key == "points") {
      cfg.model.points.clear();
      for (auto v : kv::to_count_list(e)) cfg.model.points.push_back(v);
    } else if (key == "d_max") {
      cfg.d_max = kv::to_count(e);
    } else if (key == "zero_tol") {
      cfg.zero_tol = kv::to_double(e);
    } else {
      kv::fail(e, "unknown key");
    }
  }
  try {
    validate(cfg);
  } catch (const ConfigError& err) {
    const auto it = lines.find(err.field());
    if (it == lines.end()) throw;
    throw ConfigError(it->second, err.field(),
                      "line " + std::to_string(it->second) + ", " + err.what());
  }
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  auto bad = [](const std::string& field, const std::string& msg) {
    throw ConfigError(0, field, "field '" + field + "': " + msg);
  };
  if (cfg.trials < 1) bad("trials", "must be >= 1");
  if (cfg.m < 1) bad("m", "must be >= 1");
  if (cfg.n < 1) bad("n", "must be >= 1");
  if (!(cfg.sigma >= 0.0)) bad("sigma", "must be >= 0");
  if (cfg.schemes.empty()) bad("scheme", "at least one scheme required");
  if (cfg.threads < 1) bad("threads", "must be >= 1");
  if (!(cfg.exact_tol > 0.0)) bad("tol", "must be > 0");
  for (Index d : cfg.d_grid)
    if (d < 1) bad("d", "grid values must be >= 1");
  if (!(cfg.sparsity >= 0.0 && cfg.sparsity < 1.0)) bad("sparsity", "must lie in [0, 1)");
  if (cfg.kappa && !(*cfg.kappa >= 1.0)) bad("kappa", "must be >= 1");

  if (cfg.kind == ExperimentKind::Clustering) {
    if (cfg.model.dims.empty()) bad("dims", "clustering needs subspace dims");
    if (cfg.model.points.empty()) bad("points", "clustering needs points per subspace");
    if (cfg.model.ambient_dim < 1) bad("ambient_dim", "clustering needs ambient_dim");
    Index total = 0;
    for (Index d : cfg.model.dims) total += d;
    if (total > cfg.model.ambient_dim) bad("dims", "sum of dims exceeds ambient_dim");
    if (cfg.model.points.size() != 1 && cfg.model.points.size() != cfg.model.dims.size())
      bad("points", "must be one count or one per subspace");
  } else {
    std::vector<Index> ranks = cfg.ranks.empty() ? std::vector<Index>{cfg.k} : cfg.ranks;
    const auto nonzero_cols =
        cfg.n - static_cast<Index>(std::llround(cfg.sparsity * static_cast<double>(cfg.n)));
    for (Index r : ranks) {
      if (r < 1) bad("k", "must be >= 1");
      if (r > std::min(cfg.m, nonzero_cols)) bad("k", "rank exceeds the matrix dimensions");
    }
  }

  const bool needs_d = cfg.kind != ExperimentKind::DeimCheck;
  if (needs_d && cfg.d_grid.empty()) {
    if (!cfg.eps || !cfg.delta) bad("d", "give a d grid or both eps and delta");
    if (!(*cfg.eps > 0.0 && *cfg.eps < 1.0)) bad("eps", "must lie in (0, 1)");
    if (!(*cfg.delta > 0.0 && *cfg.delta < 1.0)) bad("delta", "must lie in (0, 1)");
    if (!(cfg.big_c > 0.0)) bad("c", "must be > 0");
  }
}

DenseMatrix gaussian_low_rank(Index m, Index n, Index k, std::optional<double> kappa,
                              double sparsity, RandomStream& rng) {
  if (k < 1 || k > std::min(m, n))
    throw Error(ErrorCode::DomainError, "gaussian_low_rank: rank out of range");
  Matrix g1(m, k), g2(n, k);
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < m; ++i) g1(i, j) = rng.normal();
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < n; ++i) g2(i, j) = rng.normal();
  Matrix a = g1 * g2.transpose();

  if (kappa) {
    const SvdFactors f = detail::svd(a, std::nullopt);
    Vector s(k);
    for (Index i = 0; i < k; ++i)
      s(i) = k == 1 ? 1.0 : std::pow(*kappa, -static_cast<double>(i) / static_cast<double>(k - 1));
    a = f.left.leftCols(k) * s.asDiagonal() * f.right.leftCols(k).transpose();
  }

  const auto zeroed = static_cast<Index>(std::llround(sparsity * static_cast<double>(n)));
  if (zeroed > 0) {
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index{0});
    for (Index i = 0; i < zeroed; ++i) {
      const auto span = static_cast<double>(n - i);
      const Index j = i + std::min(static_cast<Index>(rng.uniform() * span), n - i - 1);
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
      a.col(perm[static_cast<std::size_t>(i)]).setZero();
    }
  }
  return DenseMatrix(std::move(a));
}

ExperimentResult run_success_probability_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const RandomStream root(cfg.master_seed);
  auto body = [&](Index t) {
    TrialOutput out;
    const RandomStream trial = root.split(static_cast<std::uint64_t>(t));
    RandomStream mstream = trial.split(kMatrixStream);
    const Index k = cfg.rank_for_trial(t);
    const DenseMatrix a = gaussian_low_rank(cfg.m, cfg.n, k, cfg.kappa, cfg.sparsity, mstream);
    for (std::size_t g = 0; g < grid_size(cfg); ++g) {
      const Index d = grid_d(cfg, g, a);
      const RandomStream sample = trial.split(kSampleStreamBase + g);
      for (Scheme scheme : cfg.schemes) {
        const auto start = Clock::now();
        const CurFactors f = randomized_cur(a, dist_for(a, scheme, Axis::Rows, k),
                                            dist_for(a, scheme, Axis::Cols, k), d, d, sample,
                                            cfg.dedup);
        TrialRecord rec;
        rec.trial_index = t;
        rec.scheme = to_string(scheme);
        rec.d1 = rec.d2 = d;
        rec.rel_error_frobenius = relative_error(a, f, Norm::Frobenius);
        rec.rel_error_spectral = relative_error(a, f, Norm::Spectral);
        rec.success = rec.rel_error_frobenius <= cfg.exact_tol;
        rec.wall_time_ms = elapsed_ms(start);
        out.records.push_back(std::move(rec));
      }
    }
    return out;
  };
  return collect(cfg, run_trials(cfg, body), grid_scheme_labels(cfg));
}

ExperimentResult run_noise_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const RandomStream root(cfg.master_seed);
  auto body = [&](Index t) {
    TrialOutput out;
    const RandomStream trial = root.split(static_cast<std::uint64_t>(t));
    RandomStream mstream = trial.split(kMatrixStream);
    RandomStream nstream = trial.split(kNoiseStream);
    const Index k = cfg.rank_for_trial(t);
    const DenseMatrix raw = gaussian_low_rank(cfg.m, cfg.n, k, cfg.kappa, cfg.sparsity, mstream);
    const DenseMatrix a(raw.eigen() / spectral_norm(raw));

    Matrix e = Matrix::Zero(cfg.m, cfg.n);
    if (cfg.sigma > 0.0) {
      for (Index j = 0; j < cfg.n; ++j)
        for (Index i = 0; i < cfg.m; ++i) e(i, j) = nstream.normal();
      e *= cfg.sigma / detail::spectral_norm(e);
    }
    const DenseMatrix noise(e);
    const DenseMatrix a_tilde(a.eigen() + e);
    const double e_two = cfg.sigma > 0.0 ? detail::spectral_norm(e) : 0.0;

    std::string floor_text;
    double floor_skip = 0.0;
    try {
      const StabilityParams p = noisy_stability_floor(a, noise);
      floor_text = " alpha=" + fmt_real(p.alpha) + " beta=" + fmt_real(p.beta);
    } catch (const NoiseDominatesError&) {
      floor_text = " floor=skipped";
      floor_skip = 1.0;
    }

    for (std::size_t g = 0; g < grid_size(cfg); ++g) {
      const Index d = grid_d(cfg, g, a_tilde);
      const RandomStream sample = trial.split(kSampleStreamBase + g);
      for (Scheme scheme : cfg.schemes) {
        const auto start = Clock::now();
        const CurFactors noisy = randomized_cur(a_tilde, dist_for(a_tilde, scheme, Axis::Rows, k),
                                                dist_for(a_tilde, scheme, Axis::Cols, k), d, d,
                                                sample, cfg.dedup);
        const CurFactors clean = build_cur(a, noisy.rows, noisy.cols);
        TrialRecord rec;
        rec.trial_index = t;
        rec.scheme = to_string(scheme);
        rec.d1 = rec.d2 = d;
        rec.rel_error_frobenius = relative_error(a, clean, Norm::Frobenius);
        rec.rel_error_spectral = relative_error(a, clean, Norm::Spectral);
        rec.success = rec.rel_error_frobenius <= cfg.exact_tol;
        rec.wall_time_ms = elapsed_ms(start);

        std::vector<std::pair<std::string, double>> extras{{"floor_skips", floor_skip}};
        std::string ratio_text;
        if (e_two > 0.0) {
          const double ratio = approx_error(a, noisy, Norm::Spectral) / e_two;
          extras.emplace_back("median:median_noise_ratio", ratio);
          ratio_text = " noise_ratio=" + fmt_real(ratio);
        }
        out.notes.push_back("trial=" + std::to_string(t) + " scheme=" + rec.scheme +
                            " d=" + std::to_string(d) + floor_text + ratio_text);
        out.extras.push_back(std::move(extras));
        out.records.push_back(std::move(rec));
      }
    }
    return out;
  };
  return collect(cfg, run_trials(cfg, body), grid_scheme_labels(cfg));
}

ExperimentResult run_deim_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const RandomStream root(cfg.master_seed);
  auto body = [&](Index t) {
    TrialOutput out;
    const RandomStream trial = root.split(static_cast<std::uint64_t>(t));
    RandomStream mstream = trial.split(kMatrixStream);
    const Index k = cfg.rank_for_trial(t);
    const DenseMatrix a = gaussian_low_rank(cfg.m, cfg.n, k, cfg.kappa, cfg.sparsity, mstream);
    const auto start = Clock::now();
    const CurFactors f = deim_cur(a, k);
    TrialRecord rec;
    rec.trial_index = t;
    rec.scheme = "deim";
    rec.d1 = rec.d2 = k;
    rec.rel_error_frobenius = relative_error(a, f, Norm::Frobenius);
    rec.rel_error_spectral = relative_error(a, f, Norm::Spectral);
    rec.success = rec.rel_error_frobenius <= cfg.exact_tol;
    rec.wall_time_ms = elapsed_ms(start);
    out.records.push_back(std::move(rec));
    return out;
  };
  return collect(cfg, run_trials(cfg, body), std::vector<std::string>{"k"});
}

ExperimentResult run_clustering_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const RandomStream root(cfg.master_seed);
  auto body = [&](Index t) {
    TrialOutput out;
    const RandomStream trial = root.split(static_cast<std::uint64_t>(t));
    RandomStream mstream = trial.split(kMatrixStream);
    const auto [a, model] = generate_union_of_subspaces(cfg.model, mstream);
    const ClusterLabels truth = make_labels(model.ground_truth);
    const Index d_max = cfg.d_max.value_or(model.d_max());
    Index k = 0;
    for (Index d : model.subspace_dims) k += d;

    for (std::size_t g = 0; g < grid_size(cfg); ++g) {
      const Index d = grid_d(cfg, g, a);
      const RandomStream sample = trial.split(kSampleStreamBase + g);
      for (Scheme scheme : cfg.schemes) {
        const auto start = Clock::now();
        const CurFactors f = randomized_cur(a, dist_for(a, scheme, Axis::Rows, k),
                                            dist_for(a, scheme, Axis::Cols, k), d, d, sample,
                                            cfg.dedup);
        TrialRecord rec;
        rec.trial_index = t;
        rec.scheme = to_string(scheme);
        rec.d1 = rec.d2 = d;
        rec.rel_error_frobenius = relative_error(a, f, Norm::Frobenius);
        rec.rel_error_spectral = relative_error(a, f, Norm::Spectral);
        rec.success = rec.rel_error_frobenius <= cfg.exact_tol;
        const double accuracy =
            clustering_accuracy(labels_from_clustering_matrix(clustering_matrix(f, d_max, cfg.zero_tol)),
                                truth);
        rec.wall_time_ms = elapsed_ms(start);
        const bool perfect = accuracy == 1.0;
        out.extras.push_back({{"perfect", perfect ? 1.0 : 0.0},
                              {"exact_but_imperfect", rec.success && !perfect ? 1.0 : 0.0}});
        out.notes.push_back("trial=" + std::to_string(t) + " scheme=" + rec.scheme +
                            " d=" + std::to_string(d) + " accuracy=" + fmt_real(accuracy));
        out.records.push_back(std::move(rec));
      }
    }
    return out;
  };
  return collect(cfg, run_trials(cfg, body), grid_scheme_labels(cfg));
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::SuccessProbability: return run_success_probability_experiment(cfg);
    case ExperimentKind::NoiseStability: return run_noise_experiment(cfg);
    case ExperimentKind::DeimCheck: return run_deim_experiment(cfg);
    case ExperimentKind::Clustering: return run_clustering_experiment(cfg);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown experiment kind");
}

std::string format_csv(const ExperimentResult& result) {
  std::ostringstream os;
  os << "trial,scheme,d1,d2,success,rel_err_2,rel_err_F,ms\n";
  for (const auto& r : result.records) {
    os << r.trial_index << ',' << r.scheme << ',' << r.d1 << ',' << r.d2 << ','
       << (r.success ? 1 : 0) << ',' << fmt_real(r.rel_error_spectral) << ','
       << fmt_real(r.rel_error_frobenius) << ','
       << fmt_real(result.record_timing ? r.wall_time_ms : 0.0) << '\n';
  }
  os << "# summary\n";
  for (const auto& g : result.groups) {
    os << "# scheme=" << g.scheme << " d=" << g.d_label << " trials=" << g.trials
       << " successes=" << g.successes << " fraction=" << fmt_real(g.fraction());
    for (const auto& [name, value] : g.extras) os << ' ' << name << '=' << fmt_real(value);
    os << '\n';
  }
  for (const auto& note : result.notes) os << "# " << note << '\n';
  return os.str();
}

void emit_csv(const ExperimentResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << format_csv(result);
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace exactcur
