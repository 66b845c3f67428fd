// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library only through the C interface.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exactcur/exactcur.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct MatrixDeleter {
  void operator()(ecur_matrix* m) const { ecur_matrix_free(m); }
};
struct CurDeleter {
  void operator()(ecur_cur* f) const { ecur_cur_free(f); }
};
using MatrixPtr = std::unique_ptr<ecur_matrix, MatrixDeleter>;
using CurPtr = std::unique_ptr<ecur_cur, CurDeleter>;

// Carries a failed status out of a subcommand.
struct StatusError {
  ecur_status status;
  std::string message;
};

void check(ecur_status s) {
  if (s != ECUR_OK) throw StatusError{s, ecur_last_error()};
}

int exit_code_for(ecur_status s) {
  switch (s) {
    case ECUR_ERR_CONFIG:
    case ECUR_ERR_PARSE:
    case ECUR_ERR_INVALID_ARGUMENT:
      return kExitConfig;
    default:
      return kExitRuntime;
  }
}

std::string real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<size_t>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StatusError{ECUR_ERR_IO, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MatrixPtr load(const std::string& path) {
  ecur_matrix* m = nullptr;
  check(ecur_matrix_read_mm(path.c_str(), &m));
  return MatrixPtr(m);
}

ecur_scheme scheme_from(const std::string& name) {
  if (name == "uniform") return ECUR_SCHEME_UNIFORM;
  if (name == "length") return ECUR_SCHEME_LENGTH;
  if (name == "leverage") return ECUR_SCHEME_LEVERAGE;
  throw StatusError{ECUR_ERR_CONFIG, "unknown scheme '" + name + "'"};
}

std::vector<size_t> indices_of(const ecur_cur* f, bool rows) {
  std::vector<size_t> out(rows ? ecur_cur_row_count(f) : ecur_cur_col_count(f));
  check(rows ? ecur_cur_row_indices(f, out.data(), out.size())
             : ecur_cur_col_indices(f, out.data(), out.size()));
  return out;
}

// Everything a subcommand prints goes through here: stdout, or --out.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw StatusError{ECUR_ERR_IO, "cannot write '" + path + "'"};
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

struct Globals {
  std::uint64_t seed = 0;
  bool seed_set = false;
  double tol = 0.0;
  std::string out;
};

void print_factors(std::ostream& os, const ecur_matrix* a, const ecur_cur* f) {
  double rel_f = 0.0, rel_2 = 0.0;
  check(ecur_cur_relative_error(a, f, ECUR_NORM_FROBENIUS, &rel_f));
  check(ecur_cur_relative_error(a, f, ECUR_NORM_SPECTRAL, &rel_2));
  os << "rows: " << join(indices_of(f, true)) << '\n';
  os << "cols: " << join(indices_of(f, false)) << '\n';
  os << "rel_err_F: " << real(rel_f) << '\n';
  os << "rel_err_2: " << real(rel_2) << '\n';
  os << "exact: " << (rel_f <= 1e-8 ? "yes" : "no") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exactcur: exact CUR decompositions by column and row selection"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* seed_opt = app.add_option("--seed", g.seed, "Master seed for random draws");
  app.add_option("--tol", g.tol, "Rank tolerance (svd/cur/deim) or exactness tolerance (experiment)");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");

  // svd
  auto* svd = app.add_subcommand("svd", "Singular spectrum, numerical rank and related quantities");
  std::string svd_in;
  svd->add_option("--in", svd_in, "Matrix Market file")->required();

  // cur
  auto* cur = app.add_subcommand("cur", "Build a CUR decomposition from explicit or sampled indices");
  std::string cur_in, cur_scheme = "length";
  std::vector<size_t> cur_rows, cur_cols;
  size_t cur_d1 = 0, cur_d2 = 0, cur_k = 0;
  bool cur_dedup = false;
  cur->add_option("--in", cur_in, "Matrix Market file")->required();
  cur->add_option("--rows", cur_rows, "Explicit row indices")->delimiter(',');
  cur->add_option("--cols", cur_cols, "Explicit column indices")->delimiter(',');
  cur->add_option("--scheme", cur_scheme, "uniform | length | leverage");
  cur->add_option("--d1", cur_d1, "Rows to draw");
  cur->add_option("--d2", cur_d2, "Columns to draw");
  cur->add_option("--k", cur_k, "Target rank for leverage sampling");
  cur->add_flag("--dedup", cur_dedup, "Drop repeated indices after drawing");

  // deim
  auto* deim = app.add_subcommand("deim", "Deterministic DEIM column/row selection");
  std::string deim_in;
  size_t deim_k = 0;
  deim->add_option("--in", deim_in, "Matrix Market file")->required();
  deim->add_option("--k", deim_k, "Number of rows and columns to select")->required();

  // sample-size
  auto* ss = app.add_subcommand("sample-size", "Sample-size bounds for randomized selection");
  std::optional<double> ss_r, ss_kappa, ss_eps;
  std::optional<size_t> ss_k;
  double ss_delta = 0.5, ss_c = 1.0, ss_beta = 1.0;
  ss->add_option("--r", ss_r, "Stable rank");
  ss->add_option("--k", ss_k, "Rank");
  ss->add_option("--kappa", ss_kappa, "Condition number");
  ss->add_option("--eps", ss_eps, "Accuracy parameter in (0,1)");
  ss->add_option("--delta", ss_delta, "Failure parameter in (0,1)");
  ss->add_option("--c", ss_c, "Leading constant");
  ss->add_option("--beta", ss_beta, "Leverage dominance floor in (0,1]");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Monte Carlo experiment writing CSV");
  std::string exp_config;
  std::vector<std::string> exp_set;
  exp->add_option("--config", exp_config, "key=value config file");
  exp->add_option("--set", exp_set, "Extra key=value settings (override the file)");

  // cluster
  auto* cl = app.add_subcommand("cluster", "Cluster synthetic union-of-subspaces data via CUR");
  std::string cl_model, cl_scheme = "length";
  size_t cl_d = 0;
  cl->add_option("--config,--model", cl_model, "key=value model spec file")->required();
  cl->add_option("--scheme", cl_scheme, "uniform | length | leverage");
  cl->add_option("--d", cl_d, "Rows and columns to draw")->required();

  if (argc <= 1) {
    std::cerr << app.help();
    return kExitConfig;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  g.seed_set = seed_opt->count() > 0;

  try {
    if (*svd) {
      const MatrixPtr a = load(svd_in);
      size_t count = 0, rank = 0;
      double tol_used = 0.0;
      check(ecur_svd(a.get(), g.tol, nullptr, 0, &count, &rank, &tol_used));
      std::vector<double> sigma(count);
      check(ecur_svd(a.get(), g.tol, sigma.data(), sigma.size(), &count, &rank, &tol_used));
      Output out(g.out);
      out.os() << "rows: " << ecur_matrix_rows(a.get()) << "\ncols: " << ecur_matrix_cols(a.get())
               << "\nrank: " << rank << "\ntol: " << real(tol_used) << "\nsigma:";
      for (double s : sigma) out.os() << ' ' << real(s);
      out.os() << '\n';
      double sr = 0.0, kappa = 0.0;
      if (rank > 0) {
        check(ecur_stable_rank(a.get(), &sr));
        check(ecur_condition_number(a.get(), g.tol, &kappa));
        out.os() << "stable_rank: " << real(sr) << "\ncondition_number: " << real(kappa) << '\n';
      }
    } else if (*cur) {
      const MatrixPtr a = load(cur_in);
      ecur_cur* raw = nullptr;
      const bool explicit_sets = !cur_rows.empty() || !cur_cols.empty();
      if (explicit_sets) {
        if (cur_rows.empty() || cur_cols.empty())
          throw StatusError{ECUR_ERR_CONFIG, "--rows and --cols must be given together"};
        check(ecur_cur_build(a.get(), cur_rows.data(), cur_rows.size(), cur_cols.data(),
                             cur_cols.size(), g.tol, &raw));
      } else {
        if (cur_d1 == 0 || cur_d2 == 0)
          throw StatusError{ECUR_ERR_CONFIG, "give --rows/--cols or --d1/--d2"};
        check(ecur_cur_randomized(a.get(), scheme_from(cur_scheme), cur_k, cur_d1, cur_d2, g.seed,
                                  cur_dedup ? 1 : 0, &raw));
      }
      const CurPtr f(raw);
      Output out(g.out);
      print_factors(out.os(), a.get(), f.get());
      if (explicit_sets) {
        ecur_report rep{};
        check(ecur_verify(a.get(), cur_rows.data(), cur_rows.size(), cur_cols.data(),
                          cur_cols.size(), 0.0, &rep));
        out.os() << "ranks: A=" << rep.rank_a << " C=" << rep.rank_c << " R=" << rep.rank_r
                 << " U=" << rep.rank_u << "\nconditions:";
        for (int h : rep.holds) out.os() << ' ' << (h ? 1 : 0);
        out.os() << "\nu_pinv_identity: " << (rep.u_pinv_identity ? "yes" : "no") << '\n';
      }
    } else if (*deim) {
      const MatrixPtr a = load(deim_in);
      ecur_cur* raw = nullptr;
      check(ecur_cur_deim(a.get(), deim_k, g.tol, &raw));
      const CurPtr f(raw);
      Output out(g.out);
      print_factors(out.os(), a.get(), f.get());
    } else if (*ss) {
      Output out(g.out);
      bool printed = false;
      if (ss_r && ss_eps) {
        std::int64_t d = 0;
        check(ecur_sample_size_rv(*ss_r, *ss_eps, ss_delta, ss_c, &d));
        out.os() << "stable_rank_bound: " << d << '\n';
        printed = true;
      }
      if (ss_k) {
        std::int64_t l = 0;
        check(ecur_sample_size_leverage(*ss_k, ss_beta, ss_delta, &l));
        out.os() << "leverage_bound: " << l << '\n';
        printed = true;
      }
      if (ss_r && ss_kappa && ss_k) {
        std::int64_t l = 0;
        check(ecur_sample_size_length_via_lev(*ss_r, *ss_kappa, *ss_k, ss_delta, &l));
        out.os() << "length_via_leverage_bound: " << l << '\n';
        printed = true;
      }
      if (!printed)
        throw StatusError{ECUR_ERR_CONFIG,
                          "sample-size needs (--r, --eps), --k, or (--r, --kappa, --k)"};
    } else if (*exp) {
      std::string text = exp_config.empty() ? std::string() : read_file(exp_config);
      text += '\n';
      for (const auto& kv : exp_set) text += kv + '\n';
      if (g.seed_set) text += "seed=" + std::to_string(g.seed) + '\n';
      if (g.tol > 0.0) text += "tol=" + real(g.tol) + '\n';
      char* csv = nullptr;
      check(ecur_experiment_run(text.c_str(), g.out.empty() ? nullptr : g.out.c_str(), &csv));
      const std::string body(csv);
      ecur_string_free(csv);
      // Full CSV to stdout unless --out names a file; then just the summary.
      bool in_summary = false;
      std::istringstream lines(body);
      std::string line;
      if (g.out.empty()) {
        std::cout << body;
      } else {
        while (std::getline(lines, line)) {
          if (line == "# summary") in_summary = true;
          if (in_summary && line.rfind("# trial=", 0) != 0) std::cout << line << '\n';
        }
      }
    } else if (*cl) {
      const std::string model = read_file(cl_model);
      size_t count = 0;
      int exact = 0;
      double accuracy = 0.0;
      check(ecur_cluster_run(model.c_str(), scheme_from(cl_scheme), cl_d, g.seed, nullptr, 0,
                             &count, &exact, &accuracy));
      std::vector<int> labels(count);
      check(ecur_cluster_run(model.c_str(), scheme_from(cl_scheme), cl_d, g.seed, labels.data(),
                             labels.size(), &count, &exact, &accuracy));
      Output out(g.out);
      out.os() << "labels:";
      for (int l : labels) out.os() << ' ' << l;
      out.os() << "\nexact: " << (exact ? "yes" : "no") << "\naccuracy: " << real(accuracy)
               << '\n';
    }
  } catch (const StatusError& e) {
    std::cerr << "error: " << ecur_status_string(e.status) << ": " << e.message << '\n';
    return exit_code_for(e.status);
  }
  return kExitOk;
}
