// Copyright 2026 The levyfft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The four subcommands. Each takes a validated RunConfig, writes its tables
// under output_dir and returns a process exit status.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "levyfft/cli/config.hpp"
#include "levyfft/cli/report.hpp"
#include "levyfft/de_ft.hpp"
#include "levyfft/fft.hpp"
#include "levyfft/frft.hpp"
#include "levyfft/models.hpp"
#include "levyfft/nufft.hpp"
#include "levyfft/oracle.hpp"
#include "levyfft/sinc_gauss.hpp"
#include "levyfft/solver.hpp"

namespace levyfft::cli {

using Json = nlohmann::ordered_json;

namespace detail {

inline GridSpec grid_for(const LevyModel& model, const RunConfig& c, int level) {
  GridSpec g = GridSpec::for_level(model, level, c.x_l, c.x_u);
  return GridSpec::make(model.gamma, g.n, c.x_l, c.x_u, c.d.value_or(model.strip_d));
}

inline SolverOptions options_for(const RunConfig& c) {
  SolverOptions o;
  o.epsilon = c.epsilon;
  o.b = c.b;
  return o;
}

/// Every rule and input that shapes the numbers.
inline Json manifest_head(const char* command, const RunConfig& c, const LevyModel& model) {
  Json j;
  j["schema"] = kConfigSchema;
  j["command"] = command;
  j["model"] = {{"spec", c.model},
                {"name", model.name},
                {"gamma", model.gamma},
                {"i_offset", model.i_offset},
                {"exact_density", static_cast<bool>(model.exact_density)}};
  j["inputs"] = {{"t", c.t_values},
                 {"i", c.exponents},
                 {"x_l", c.x_l},
                 {"x_u", c.x_u},
                 {"d", c.d.value_or(model.strip_d)},
                 {"b", c.b},
                 {"epsilon", c.epsilon}};
  j["rules"] = {
      {"N", "2^(i - i_offset)"},
      {"N_gamma", "2^gamma N"},
      {"M_de", "2 N_gamma"},
      {"h_tilde", "sqrt(2 pi d (x_l + x_u) / (x_l^2 N))"},
      {"h_hat", "x_u / N"},
      {"euler_p", "sqrt(N h_tilde / x_l)"},
      {"euler_q", "sqrt(x_l N h_tilde / 4)"},
      {"de_h", "log(1000 M_de) / M_de"},
      {"de_beta", 0.25},
      {"de_alpha", "beta / sqrt(1 + log(1 + pi / (zeta0 h)) / (4 zeta0 h))"},
      {"zeta0", "N_gamma h_tilde / 15 for k <= floor(N_gamma / 8), N_gamma h_tilde / 1.8 above"},
      {"nufft_tau", "-log(epsilon) / pi^2"},
      {"nufft_b", "b"},
      {"sinc_gauss_r", "sqrt(N' / pi)"},
      {"kernel_table_size", "4 N'"},
  };
  return j;
}

inline Json run_record(const GridSpec& g, int level) {
  const auto plan = splice_plan(g.n_gamma, g.h_tilde());
  return Json{{"i", level},
              {"N", g.n},
              {"N_gamma", g.n_gamma},
              {"M_de", g.m},
              {"h_tilde", g.h_tilde()},
              {"h_hat", g.h_hat},
              {"euler_p", g.euler.p},
              {"euler_q", g.euler.q},
              {"de_h", plan[0].params.h},
              {"zeta0_small", plan[0].params.zeta0},
              {"zeta0_large", plan[1].params.zeta0},
              {"splice_seam_k", plan[0].k_last}};
}

struct Errors {
  double full = 0.0;
  double window = 0.0;
};

inline Errors errors_of(const SolveResult& r, double x_l, double x_u) {
  Errors e;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    const double ax = std::fabs(r.x[i]);
    const double err = (*r.abs_err)[i];
    if (ax <= x_u * (1 + 1e-12)) e.full = std::max(e.full, err);
    if (ax >= x_l * (1 - 1e-12) && ax <= x_u * (1 + 1e-12)) e.window = std::max(e.window, err);
  }
  return e;
}

}  // namespace detail

/// One CSV per (t, N): x, p_num[, p_exact, abs_err]; plus manifest.json.
inline int cmd_solve(const RunConfig& c, std::ostream& log) {
  validate(c, Command::kSolve);
  const LevyModel model = parse_model(c.model);
  const auto dir = ensure_dir(c.output_dir);
  const SolverOptions opt = detail::options_for(c);
  ExponentCache cache;

  Json manifest = detail::manifest_head("solve", c, model);
  Json runs = Json::array();
  for (int level : c.exponents) {
    const GridSpec g = detail::grid_for(model, c, level);
    for (double t : c.t_values) {
      const SolveResult r = solve(model, g, t, opt, &cache);
      const bool exact = r.p_exact.has_value();
      CsvTable table(exact ? std::vector<std::string>{"x", "p_num", "p_exact", "abs_err"}
                           : std::vector<std::string>{"x", "p_num"});
      for (std::size_t i = 0; i < r.x.size(); ++i) {
        if (exact) {
          table.add_row({fmt(r.x[i]), fmt(r.p[i]), fmt((*r.p_exact)[i]), fmt((*r.abs_err)[i])});
        } else {
          table.add_row({fmt(r.x[i]), fmt(r.p[i])});
        }
      }
      const std::string name =
          model.name + "_t" + fmt_short(t) + "_N" + std::to_string(g.n) + ".csv";
      write_text(dir / name, table.str());

      Json rec = detail::run_record(g, level);
      rec["t"] = t;
      rec["file"] = name;
      if (exact) {
        const auto e = detail::errors_of(r, c.x_l, c.x_u);
        rec["max_err_full"] = e.full;
        rec["max_err_window"] = e.window;
      }
      rec["warnings"] = r.warnings;
      for (const auto& w : r.warnings) log << "warning: " << name << ": " << w << "\n";
      runs.push_back(std::move(rec));
      log << "wrote " << (dir / name).string() << "\n";
    }
  }
  manifest["runs"] = std::move(runs);
  write_json(dir / "manifest.json", manifest);
  return 0;
}

/// Error table per (t, i) and a fit of log(window error) against sqrt(M).
inline int cmd_converge(const RunConfig& c, std::ostream& log) {
  validate(c, Command::kConverge);
  const LevyModel model = parse_model(c.model);
  if (!model.exact_density) {
    throw ConfigError("converge: model '" + c.model + "' has no exact density to compare with");
  }
  const auto dir = ensure_dir(c.output_dir);
  const SolverOptions opt = detail::options_for(c);
  ExponentCache cache;

  CsvTable table({"t", "i", "M", "N", "max_err_full", "max_err_window"});
  CsvTable fits({"t", "slope", "intercept", "r2"});
  Json manifest = detail::manifest_head("converge", c, model);
  Json runs = Json::array();
  for (double t : c.t_values) {
    std::vector<double> xs, ys;
    for (int level : c.exponents) {
      const GridSpec g = detail::grid_for(model, c, level);
      const SolveResult r = solve(model, g, t, opt, &cache);
      const auto e = detail::errors_of(r, c.x_l, c.x_u);
      const double m = std::ldexp(1.0, level);
      table.add_row({fmt_short(t), std::to_string(level), std::to_string(1L << level), std::to_string(g.n), fmt(e.full),
                     fmt(e.window)});
      xs.push_back(std::sqrt(m));
      ys.push_back(std::log(std::max(e.window, 1e-300)));
      Json rec = detail::run_record(g, level);
      rec["t"] = t;
      rec["warnings"] = r.warnings;
      runs.push_back(std::move(rec));
    }
    const LinearFit f = linear_fit(xs, ys);
    fits.add_row({fmt_short(t), fmt(f.slope), fmt(f.intercept), fmt(f.r2)});
    log << "t = " << t << ": slope " << f.slope << " per sqrt(M), R^2 = " << f.r2 << "\n";
  }
  const std::string base = "converge_" + model.name;
  write_text(dir / (base + ".csv"), table.str());
  write_text(dir / (base + "_fit.csv"), fits.str());
  manifest["runs"] = std::move(runs);
  manifest["files"] = {base + ".csv", base + "_fit.csv"};
  write_json(dir / "manifest.json", manifest);
  log << "wrote " << (dir / (base + ".csv")).string() << "\n";
  return 0;
}

/// Median wall time per step over `reps` uncached solves, and time / (M log2 M).
inline int cmd_bench(const RunConfig& c, std::ostream& log) {
  validate(c, Command::kBench);
  const LevyModel model = parse_model(c.model);
  const auto dir = ensure_dir(c.output_dir);
  const SolverOptions opt = detail::options_for(c);
  if (c.reps < 5) {
    log << "warning: reps = " << c.reps << " < 5; medians will be noisy\n";
  }

  CsvTable table({"t", "i", "M", "N", "reps", "step1_s", "step2_s", "step3_s", "total_s",
                  "total_per_MlogM"});
  Json manifest = detail::manifest_head("bench", c, model);
  manifest["inputs"]["reps"] = c.reps;
  for (double t : c.t_values) {
    for (int level : c.exponents) {
      const GridSpec g = detail::grid_for(model, c, level);
      (void)solve(model, g, t, opt);  // warm the FFT plan cache
      std::vector<double> s1, s2, s3, tot;
      for (int k = 0; k < c.reps; ++k) {
        const SolveResult r = solve(model, g, t, opt);
        s1.push_back(r.timings.step1);
        s2.push_back(r.timings.step2);
        s3.push_back(r.timings.step3);
        tot.push_back(r.timings.total);
      }
      const double m = std::ldexp(1.0, level);
      const double total = median(tot);
      table.add_row({fmt_short(t), std::to_string(level), std::to_string(1L << level), std::to_string(g.n),
                     std::to_string(c.reps), fmt(median(s1)), fmt(median(s2)), fmt(median(s3)),
                     fmt(total), fmt(total / (m * level))});
      log << "i = " << level << ", t = " << t << ": " << total * 1e3 << " ms\n";
    }
  }
  const std::string name = "bench_" + model.name + ".csv";
  write_text(dir / name, table.str());
  manifest["files"] = {name};
  write_json(dir / "manifest.json", manifest);
  return 0;
}

struct SelftestOptions {
  /// Added to every nonzero kernel-table entry before comparison.
  double kernel_perturbation = 0.0;
};

struct SelftestRow {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass() const { return error <= tolerance; }
};

/// Oracle checks at small sizes.
inline std::vector<SelftestRow> run_selftest(const SelftestOptions& so = {}) {
  std::vector<SelftestRow> rows;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto random_vec = [&](std::size_t n) {
    std::vector<cplx> v(n);
    for (auto& z : v) z = {u(rng), u(rng)};
    return v;
  };
  const auto max_diff = [](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
    return e;
  };

  {
    auto x = random_vec(256);
    const auto ref = oracle::dft(x);
    fft_inplace(x, Direction::kForward);
    rows.push_back({"fft n=256 vs direct DFT", max_diff(x, ref), 1e-12});
  }
  {
    const auto c = random_vec(256);
    rows.push_back({"frft 2N=256 delta=0.3 vs direct sum",
                    max_diff(FrftPlan(c.size(), 0.3).apply(c), oracle::frft(c, 0.3)), 1e-10});
  }
  {
    // VG measure, N = 128: N_gamma = 256, M = 512.
    const auto euler = EulerParams::make(128, 2.0, 5.0);
    const std::int64_t ng = 256;
    double nufft_err = 0.0, de_err = 0.0;
    for (const SpliceRun& run : splice_plan(ng, euler.h_tilde)) {
      const DeSources src = build_sources(vg_mu, run.params);
      const auto fast =
          nufft_forward(src, nufft_params_for(src, euler.h_tilde), euler.h_tilde, ng);
      const auto slow = oracle::exponential_sum(src, euler.h_tilde, ng);
      nufft_err = std::max(nufft_err, max_diff(fast.values(), slow.values()));
      for (std::int64_t k = run.k_first; k <= run.k_last; ++k) {
        const cplx exact = 1.0 / cplx(1.0, static_cast<double>(k) * euler.h_tilde);
        de_err = std::max(de_err, std::abs(fast.at(k) - exact));
      }
    }
    rows.push_back({"nufft M=512 vs direct exponential sum", nufft_err, 1e-8});
    rows.push_back({"DE transform of e^-y vs 1/(1+i w), M=512", de_err, 1e-5});
  }
  {
    const std::int64_t np = 64;
    const double r = SincGaussConfig::default_r(np);
    KernelTable table = kernel_table(r, np);
    for (std::size_t k = 1; k < table.g.size(); ++k) table.g[k] += so.kernel_perturbation;
    const auto ref = oracle::kernel_integrals(r, np);
    double e = 0.0;
    for (std::int64_t k = 0; k <= np; ++k) {
      e = std::max(e, std::fabs(table(k) - ref[static_cast<std::size_t>(k)]));
    }
    rows.push_back({"kernel table G_r N'=64 vs quadrature", e, 1e-9});
  }
  {
    double e = 0.0;
    for (double z : {0.05, 1.0, 7.5}) {
      for (double v : {0.0, 0.5, 1.0, 2.3}) {
        e = std::max(e, std::fabs(bessel_k(v, z) / oracle::bessel_k(v, z) - 1.0));
      }
    }
    rows.push_back({"bessel K vs integral representation (rel)", e, 1e-12});
  }
  for (const LevyModel& m : {vg_model(), nig_model()}) {
    double e = 0.0;
    for (double w : {0.25, 1.0, 3.0, 8.0}) {
      e = std::max(e, std::fabs((*m.exact_exponent)(w) - oracle::levy_exponent(m.mu, m.gamma, w)));
    }
    rows.push_back({m.name + " closed-form exponent vs quadrature", e, 1e-9});
  }
  for (const LevyModel& m : {vg_model(), nig_model()}) {
    const GridSpec g = GridSpec::for_level(m, 10, 2.0, 5.0);
    const auto ex = characteristic_exponent(m, g);
    double e = 0.0;
    for (std::int64_t l = -g.n + 1; l <= g.n; ++l) {
      const double w = static_cast<double>(l) * g.h_tilde();
      e = std::max(e, std::fabs(ex.g[static_cast<std::size_t>(l + g.n - 1)] -
                                (*m.exact_exponent)(w)));
    }
    rows.push_back({m.name + " pipeline exponent i=10 vs closed form", e, 1e-5});
  }
  return rows;
}

inline int cmd_selftest(std::ostream& out, const SelftestOptions& so = {}) {
  const auto rows = run_selftest(so);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.pass();
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.name << std::right
        << std::scientific << std::setprecision(3) << std::setw(12) << r.error << "  tol "
        << r.tolerance << "  " << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  out << (ok ? "selftest: all checks passed\n" : "selftest: FAILED\n");
  out << std::defaultfloat;
  return ok ? 0 : 1;
}

}  // namespace levyfft::cli
