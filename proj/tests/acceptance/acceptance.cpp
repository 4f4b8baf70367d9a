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

// Acceptance checks, one line per criterion; nonzero exit if any fails.
// Tolerances are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "levyfft/cli/report.hpp"
#include "levyfft/de_ft.hpp"
#include "levyfft/frft.hpp"
#include "levyfft/models.hpp"
#include "levyfft/nufft.hpp"
#include "levyfft/oracle.hpp"
#include "levyfft/sinc_gauss.hpp"
#include "levyfft/solver.hpp"

namespace {

using namespace levyfft;
using Clock = std::chrono::steady_clock;

// ---- pinned tolerances ----
constexpr double kNufftTol = 1e-8;
constexpr double kNufftTimeLimit = 0.050;  // s
constexpr double kFrftTol = 1e-10;
constexpr double kDeTol = 1e-6;
constexpr double kKernelTol = 1e-9;
constexpr double kArctanGain = 100.0;  // N' = 64 -> 512
constexpr double kConvPathTol = 1e-11;
constexpr double kVgExponentTol = 1e-6;
constexpr double kNigExponentTol = 1e-5;
constexpr double kClosedFormTol = 1e-9;
constexpr double kRatioTol = 1e-3;  // err(2^12) / err(2^7)
constexpr double kVgAbsTol = 1e-6;
constexpr double kFitR2 = 0.9;
constexpr double kSolveTimeLimit = 2.0;  // s
constexpr double kCuspFactor = 10.0;
constexpr double kFlatness = 3.0;
constexpr double kGNoise = 1e-6;
constexpr double kSymTol = 1e-9;
constexpr double kMassTol = 1e-3;
constexpr double kXl = 2.0, kXu = 5.0;

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string sci(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2e", v);
  return b;
}

template <class F>
double seconds(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
double median_seconds(int reps, F&& f) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) t.push_back(seconds(f));
  return cli::median(t);
}

struct Errs {
  double full = 0, window = 0;
};

Errs errors(const SolveResult& r) {
  Errs e;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    const double ax = std::fabs(r.x[i]);
    const double err = (*r.abs_err)[i];
    if (ax <= kXu + 1e-12) e.full = std::max(e.full, err);
    if (ax >= kXl - 1e-12 && ax <= kXu + 1e-12) e.window = std::max(e.window, err);
  }
  return e;
}

void criterion1() {
  // VG measure, N = 128 -> N_gamma = 256, M = 2^9.
  const double h = EulerParams::make(128, kXl, kXu).h_tilde;
  const std::int64_t ng = 256;
  double err = 0, time = 0;
  for (const SpliceRun& run : splice_plan(ng, h)) {
    const DeSources src = build_sources(vg_mu, run.params);
    const NufftParams p = nufft_params_for(src, h);
    ComplexSeries fast = nufft_forward(src, p, h, ng);
    time += median_seconds(7, [&] { fast = nufft_forward(src, p, h, ng); });
    const auto slow = oracle::exponential_sum(src, h, ng);
    for (std::int64_t k = 0; k <= ng; ++k) err = std::max(err, std::abs(fast.at(k) - slow.at(k)));
  }
  report(1, "NUFFT vs direct sum, M=2^9", err <= kNufftTol && time <= kNufftTimeLimit,
         "max err " + sci(err) + " (tol " + sci(kNufftTol) + "), time " + sci(time) + " s (limit " +
             sci(kNufftTimeLimit) + " s, both splice legs)");
}

void criterion2() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst = 0;
  for (std::size_t len = 2; len <= 1024; len *= 2) {
    for (double delta : {0.05, 0.3, 2 * kPi / static_cast<double>(len)}) {
      std::vector<cplx> c(len);
      for (auto& z : c) z = {u(rng), u(rng)};
      const auto fast = FrftPlan(len, delta).apply(c);
      const auto slow = oracle::frft(c, delta);
      for (std::size_t i = 0; i < len; ++i) worst = std::max(worst, std::abs(fast[i] - slow[i]));
    }
  }
  report(2, "FRFT vs direct sum, 2N<=2^10", worst <= kFrftTol,
         "max err " + sci(worst) + " (tol " + sci(kFrftTol) + ")");
}

void criterion3() {
  // M = 2^11 -> N_gamma = 1024, N = 512.
  const std::int64_t ng = 1024;
  const double h = EulerParams::make(ng / 2, kXl, kXu).h_tilde;
  const ComplexSeries mu = levy_transform(vg_mu, ng, h);
  const auto plan = splice_plan(ng, h);
  double leg[2] = {0, 0};
  double away = 0;
  for (int i = 0; i < 2; ++i) {
    for (std::int64_t k = plan[i].k_first; k <= plan[i].k_last; ++k) {
      const double e = std::abs(mu.at(k) - 1.0 / cplx(1.0, static_cast<double>(k) * h));
      leg[i] = std::max(leg[i], e);
      if (std::abs(k - plan[0].k_last) > 8) away = std::max(away, e);
    }
  }
  const double worst = std::max(leg[0], leg[1]);
  report(3, "DE transform of e^-y vs 1/(1+ikh), M=2^11", worst <= kDeTol,
         "small-zeta0 leg " + sci(leg[0]) + ", large-zeta0 leg " + sci(leg[1]) + ", off-seam " +
             sci(away) + " (tol " + sci(kDeTol) + ")");
}

void criterion4() {
  const std::int64_t np = 512;
  const double r = SincGaussConfig::default_r(np);
  const auto t = kernel_table(r, np);
  const auto ref = oracle::kernel_integrals(r, np);
  double err = 0;
  for (std::int64_t k = 0; k <= np; ++k) {
    err = std::max(err, std::fabs(t(k) - ref[static_cast<std::size_t>(k)]));
  }
  report(4, "kernel table G_r vs quadrature, N'=512", err <= kKernelTol,
         "max err " + sci(err) + " (tol " + sci(kKernelTol) + ")");
}

void criterion5() {
  const auto f = [](double z) { return cplx(1.0 / (1.0 + z * z), 0.0); };
  std::vector<double> errs;
  double path = 0;
  for (std::int64_t np : {64, 128, 256, 512}) {
    const double h = std::sqrt(7 * kPi / (2.0 * static_cast<double>(np)));
    std::vector<cplx> v;
    for (std::int64_t k = -np; k <= 2 * np - 1; ++k) v.push_back(f(static_cast<double>(k) * h));
    const ComplexSeries s(-np, v, h);
    const auto cfg = SincGaussConfig::standard(np, h);
    const auto table = kernel_table(cfg.r, np);
    const auto out = indefinite_integral(s, cfg, table);
    double e = 0;
    for (std::int64_t l = 1; l <= np; ++l) {
      e = std::max(e, std::abs(out.at(l) - std::atan(static_cast<double>(l) * h)));
    }
    errs.push_back(e);
    const auto direct = oracle::partitioned_integral(s, np, [&](std::int64_t k) { return table(k); });
    for (std::int64_t l = 1; l <= np; ++l) {
      // Input scale h * max|f| = h.
      path = std::max(path, std::abs(out.at(l) - direct[static_cast<std::size_t>(l - 1)]) / h);
    }
  }
  const double gain = errs.front() / errs.back();
  report(5, "indefinite integral of 1/(1+z^2), N'=64..512", gain >= kArctanGain && path <= kConvPathTol,
         "err " + sci(errs[0]) + " -> " + sci(errs[3]) + " (gain " + sci(gain) + ", need " +
             sci(kArctanGain) + "), FFT vs partitioned sum " + sci(path) + " (tol " +
             sci(kConvPathTol) + ")");
}

void criterion6() {
  double closed = 0;
  for (const LevyModel& m : {vg_model(), nig_model()}) {
    for (double w : {0.1, 0.7, 2.0, 6.0, 15.0}) {
      closed = std::max(closed, std::fabs((*m.exact_exponent)(w) -
                                          oracle::levy_exponent(m.mu, m.gamma, w)));
    }
  }
  double err[2] = {0, 0};
  int i = 0;
  for (const LevyModel& m : {vg_model(), nig_model()}) {
    const GridSpec g = GridSpec::for_level(m, 11, kXl, kXu);
    const auto ex = characteristic_exponent(m, g);
    for (std::int64_t l = -g.n + 1; l <= g.n; ++l) {
      const double w = static_cast<double>(l) * g.h_tilde();
      err[i] = std::max(err[i], std::fabs(ex.g[static_cast<std::size_t>(l + g.n - 1)] -
                                          (*m.exact_exponent)(w)));
    }
    ++i;
  }
  report(6, "characteristic exponents vs closed forms, M=2^11",
         err[0] <= kVgExponentTol && err[1] <= kNigExponentTol && closed <= kClosedFormTol,
         "VG " + sci(err[0]) + " (tol " + sci(kVgExponentTol) + "), NIG " + sci(err[1]) +
             " (tol " + sci(kNigExponentTol) + "), closed forms vs quadrature " + sci(closed) +
             " (tol " + sci(kClosedFormTol) + ")");
}

// errs[t][i - 7] for i = 7..12.
std::vector<std::vector<Errs>> sweep(const LevyModel& m, double* t12 = nullptr) {
  std::vector<std::vector<Errs>> out;
  std::vector<GridSpec> grids;
  std::vector<ExponentCache> caches(6);
  for (int i = 7; i <= 12; ++i) grids.push_back(GridSpec::for_level(m, i, kXl, kXu));
  for (double t : {1.0, 2.0, 3.0}) {
    std::vector<Errs> row;
    for (std::size_t k = 0; k < grids.size(); ++k) row.push_back(errors(solve(m, grids[k], t, {}, &caches[k])));
    out.push_back(row);
  }
  if (t12 != nullptr) {
    *t12 = median_seconds(3, [&] { (void)solve(m, grids.back(), 3.0); });
  }
  return out;
}

void criterion7() {
  double t12 = 0;
  const auto e = sweep(vg_model(), &t12);
  bool ok = t12 <= kSolveTimeLimit;
  std::string detail;
  const double ts[] = {1, 2, 3};
  for (int it = 0; it < 3; ++it) {
    const double ratio = e[it][5].window / e[it][0].window;
    std::vector<double> xs, ys;
    for (int i = 7; i <= 12; ++i) {
      xs.push_back(std::sqrt(std::ldexp(1.0, i)));
      ys.push_back(std::log(std::max(e[it][i - 7].window, 1e-300)));
    }
    const auto fit = cli::linear_fit(xs, ys);
    ok = ok && ratio <= kRatioTol && e[it][5].window <= kVgAbsTol && fit.slope < 0 && fit.r2 >= kFitR2;
    char b[200];
    std::snprintf(b, sizeof b, "t=%g ratio %.1e abs %.1e slope %.2f R2 %.3f; ", ts[it], ratio,
                  e[it][5].window, fit.slope, fit.r2);
    detail += b;
  }
  detail += "solve time at M=2^12 " + sci(t12) + " s (limit " + sci(kSolveTimeLimit) + ")";
  report(7, "end-to-end VG on 2<=|x|<=5", ok, detail);
}

void criterion8() {
  const auto e = sweep(nig_model());
  bool ok = true;
  std::string detail;
  const double ts[] = {1, 2, 3};
  for (int it = 0; it < 3; ++it) {
    const double rw = e[it][5].window / e[it][0].window;
    const double rf = e[it][5].full / e[it][0].full;
    ok = ok && rw <= kRatioTol && rf <= kRatioTol;
    char b[160];
    std::snprintf(b, sizeof b, "t=%g window %.1e full %.1e; ", ts[it], rw, rf);
    detail += b;
  }
  detail += "ratio err(2^12)/err(2^7) tol " + sci(kRatioTol);
  report(8, "end-to-end NIG on [-5,5] and 2<=|x|<=5", ok, detail);
}

void criterion9() {
  const LevyModel m = vg_model();
  const auto e = errors(solve(m, GridSpec::for_level(m, 11, kXl, kXu), 1.0));
  const double factor = e.full / e.window;
  report(9, "VG cusp at t=1, M=2^11", factor >= kCuspFactor,
         "full " + sci(e.full) + " / window " + sci(e.window) + " = " + sci(factor) + " (need >= " +
             sci(kCuspFactor) + ")");
}

void criterion10() {
  bool ok = true;
  std::string detail;
  for (const LevyModel& m : {vg_model(), nig_model()}) {
    std::vector<double> norm;
    for (int i = 7; i <= 12; ++i) {
      const GridSpec g = GridSpec::for_level(m, i, kXl, kXu);
      (void)solve(m, g, 3.0);  // warm plan caches
      const double t = median_seconds(7, [&] { (void)solve(m, g, 3.0); });
      norm.push_back(t / (std::ldexp(1.0, i) * i));
    }
    const auto [lo, hi] = std::minmax_element(norm.begin(), norm.end());
    const double spread = *hi / *lo;
    ok = ok && spread <= kFlatness;
    detail += m.name + " max/min " + sci(spread) + "; ";
  }
  detail += "time/(M log2 M) over M=2^7..2^12, limit " + sci(kFlatness);
  report(10, "O(M log M) scaling", ok, detail);
}

void criterion11() {
  bool ok = true;
  double g_pos = -1e300, g_asym = 0, sym = 0, mass = 0;
  bool g_zero = true, det = true;
  for (const LevyModel& m : {vg_model(), nig_model()}) {
    for (int level : {11, 12}) {
      const GridSpec g = GridSpec::for_level(m, level, kXl, kXu);
      const auto ex = characteristic_exponent(m, g);
      const auto at = [&](std::int64_t l) { return ex.g[static_cast<std::size_t>(l + g.n - 1)]; };
      g_zero = g_zero && at(0) == 0.0;
      for (std::int64_t l = -g.n + 1; l <= g.n; ++l) {
        g_pos = std::max(g_pos, at(l));
        if (l < g.n) g_asym = std::max(g_asym, std::fabs(at(l) - at(-l)));
      }
      for (double t : {1.0, 2.0, 3.0}) {
        const auto r = density_from_exponent(m, g, ex, t);
        const std::int64_t n = g.n;
        for (std::int64_t k = 1; k < n; ++k) {
          const double a = r.p[static_cast<std::size_t>(k + n - 1)];
          const double b = r.p[static_cast<std::size_t>(-k + n - 1)];
          sym = std::max(sym, std::fabs(a - b) / std::fabs(a));
        }
        double num = 0, exact = 0;
        for (std::int64_t k = -n; k <= n; ++k) {
          const auto i = static_cast<std::size_t>((k == -n ? n : k) + n - 1);
          const double w = (k == -n || k == n) ? 0.5 : 1.0;
          num += w * r.p[i];
          exact += w * (*r.p_exact)[i];
        }
        mass = std::max(mass, std::fabs(num - exact) * g.h_hat);
      }
    }
    const GridSpec g = GridSpec::for_level(m, 10, kXl, kXu);
    const auto a = solve(m, g, 2.0), b = solve(m, g, 2.0);
    det = det && a.p == b.p;
  }
  ok = g_zero && g_pos <= kGNoise && g_asym == 0.0 && sym <= kSymTol && mass <= kMassTol && det;
  report(11, "invariants", ok,
         std::string("G(0)=0 ") + (g_zero ? "yes" : "no") + ", max G " + sci(g_pos) + " (<= " +
             sci(kGNoise) + "), G asymmetry " + sci(g_asym) + ", p symmetry " + sci(sym) +
             " (tol " + sci(kSymTol) + "), mass diff " + sci(mass) + " (tol " + sci(kMassTol) +
             "), deterministic " + (det ? "yes" : "no"));
}

}  // namespace

int main() {
  const std::function<void()> checks[] = {criterion1, criterion2, criterion3, criterion4,
                                          criterion5, criterion6, criterion7, criterion8,
                                          criterion9, criterion10, criterion11};
  for (const auto& c : checks) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("[FAIL] exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
