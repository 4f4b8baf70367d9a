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

// End-to-end solver: Levy measure -> characteristic exponent G on the h~
// lattice -> density p(x, t) on the h^ lattice.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "levyfft/de_ft.hpp"
#include "levyfft/errors.hpp"
#include "levyfft/euler_ft.hpp"
#include "levyfft/fft.hpp"
#include "levyfft/models.hpp"
#include "levyfft/nufft.hpp"
#include "levyfft/series.hpp"
#include "levyfft/sinc_gauss.hpp"

namespace levyfft {

/// Grid sizes shared by the three steps.
struct GridSpec {
  int gamma = 1;
  std::int64_t n = 0;        // output half-length N
  std::int64_t n_gamma = 0;  // transform half-length 2^gamma N
  std::int64_t m = 0;        // DE/NUFFT node count 2 N_gamma
  EulerParams euler;
  double h_hat = 0.0;  // x_u / N

  static GridSpec make(int gamma, std::int64_t n, double x_l, double x_u, double d = 1.0) {
    if (gamma != 1 && gamma != 2) throw std::invalid_argument("GridSpec: gamma must be 1 or 2");
    if (n < 2 || !is_power_of_two(static_cast<std::size_t>(n))) {
      throw LengthError("GridSpec: N = " + std::to_string(n) + " must be a power of two >= 2");
    }
    GridSpec g;
    g.gamma = gamma;
    g.n = n;
    g.n_gamma = (std::int64_t{1} << gamma) * n;
    g.m = 2 * g.n_gamma;
    g.euler = EulerParams::make(n, x_l, x_u, d);
    g.h_hat = x_u / static_cast<double>(n);
    return g;
  }

  /// Refinement level i: N = 2^(i - i_gamma).
  static GridSpec for_level(const LevyModel& model, int level, double x_l, double x_u) {
    const int e = level - model.i_offset;
    if (e < 1 || e > 40) {
      throw std::invalid_argument("GridSpec: level " + std::to_string(level) +
                                  " gives N = 2^" + std::to_string(e) + " for model " +
                                  model.name);
    }
    return make(model.gamma, std::int64_t{1} << e, x_l, x_u, model.strip_d);
  }

  double h_tilde() const noexcept { return euler.h_tilde; }
};

struct SolverOptions {
  double epsilon = 1e-10;  // NUFFT Gaussian tolerance
  double b = 20.0;         // NUFFT window half-width
  std::int64_t kernel_table_size = 0;  // 0: default_kernel_table_size(N')
};

struct StepTimings {
  double step1 = 0.0;
  double step2 = 0.0;
  double step3 = 0.0;
  double total = 0.0;
};

/// G sampled at w = l h~, l = -N+1..N, plus diagnostics.
struct ExponentSamples {
  std::vector<double> g;
  StepTimings timings;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
auto tagged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

}  // namespace detail

/// Step 1: mu~(k h~) for k = -N_gamma+1..N_gamma, spliced from two DE runs.
inline ComplexSeries levy_transform(const RealFunction& mu, std::int64_t n_gamma, double h_tilde,
                                    const SolverOptions& opt = {}) {
  const auto plan = detail::tagged("step1/de_ft", [&] { return splice_plan(n_gamma, h_tilde); });
  std::vector<cplx> half(static_cast<std::size_t>(n_gamma + 1));
  for (const SpliceRun& run : plan) {
    const DeSources src =
        detail::tagged("step1/de_ft", [&] { return build_sources(mu, run.params); });
    const ComplexSeries part = detail::tagged("step1/nufft", [&] {
      const NufftParams np = nufft_params_for(src, h_tilde, opt.epsilon, opt.b);
      return nufft_forward(src, np, h_tilde, n_gamma);
    });
    for (std::int64_t k = run.k_first; k <= run.k_last; ++k) {
      half[static_cast<std::size_t>(k)] = part.at(k);
    }
  }
  for (std::size_t k = 0; k < half.size(); ++k) {
    if (!std::isfinite(half[k].real()) || !std::isfinite(half[k].imag())) {
      throw StageError("step1/nufft", "non-finite transform value at k = " + std::to_string(k));
    }
  }
  return extend_conjugate(ComplexSeries(0, std::move(half), h_tilde));
}

/// Step 2: integrates the transform once (gamma = 1) or twice (gamma = 2).
inline ExponentSamples exponent_from_transform(const ComplexSeries& mu_hat, const GridSpec& grid,
                                               const SolverOptions& opt = {}) {
  return detail::tagged("step2/sinc_gauss", [&] {
    const std::int64_t n = grid.n;
    const double h = grid.h_tilde();
    const auto integrate = [&](const ComplexSeries& f, std::int64_t np) {
      const auto cfg = SincGaussConfig::standard(np, h);
      const auto table = kernel_table(cfg.r, np, opt.kernel_table_size);
      return indefinite_integral(f.slice(-np, 2 * np - 1), cfg, table);
    };

    ExponentSamples out;
    ComplexSeries last = [&] {
      if (grid.gamma == 1) return integrate(mu_hat, n);
      const ComplexSeries first = integrate(mu_hat, 2 * n);
      return integrate(negative_extension(first, Symmetry::kConjugateOdd), n);
    }();

    std::vector<double> pos(static_cast<std::size_t>(n));
    for (std::int64_t l = 1; l <= n; ++l) {
      const cplx v = last.at(l);
      const double g = grid.gamma == 1 ? 2.0 * v.imag() : -2.0 * v.real();
      pos[static_cast<std::size_t>(l - 1)] = g;
    }
    out.g.resize(static_cast<std::size_t>(2 * n));
    for (std::int64_t l = -n + 1; l <= n; ++l) {
      out.g[static_cast<std::size_t>(l + n - 1)] =
          l == 0 ? 0.0 : pos[static_cast<std::size_t>((l < 0 ? -l : l) - 1)];
    }
    return out;
  });
}

/// Steps 1-2: G(l h~), l = -N+1..N, for the model.
inline ExponentSamples characteristic_exponent(const LevyModel& model, const GridSpec& grid,
                                               const SolverOptions& opt = {}) {
  model.validate();
  if (model.gamma != grid.gamma) {
    throw std::invalid_argument("characteristic_exponent: grid built for gamma = " +
                                std::to_string(grid.gamma) + ", model '" + model.name +
                                "' has gamma = " + std::to_string(model.gamma));
  }
  const auto t0 = detail::Clock::now();
  const ComplexSeries mu_hat = levy_transform(model.mu, grid.n_gamma, grid.h_tilde(), opt);
  const double s1 = detail::seconds_since(t0);
  const auto t1 = detail::Clock::now();
  ExponentSamples out = exponent_from_transform(mu_hat, grid, opt);
  out.timings.step1 = s1;
  out.timings.step2 = detail::seconds_since(t1);
  out.timings.total = s1 + out.timings.step2;
  return out;
}

/// G from a closed form, for checking Step 3 in isolation.
inline ExponentSamples exact_exponent_samples(const LevyModel& model, const GridSpec& grid) {
  if (!model.exact_exponent) {
    throw std::invalid_argument("model '" + model.name + "' has no closed-form exponent");
  }
  ExponentSamples out;
  out.g.resize(static_cast<std::size_t>(2 * grid.n));
  for (std::int64_t l = -grid.n + 1; l <= grid.n; ++l) {
    out.g[static_cast<std::size_t>(l + grid.n - 1)] =
        (*model.exact_exponent)(static_cast<double>(l) * grid.h_tilde());
  }
  return out;
}

/// Memoizes characteristic exponents across t for one (model, grid, options).
class ExponentCache {
 public:
  std::shared_ptr<const ExponentSamples> get(const LevyModel& model, const GridSpec& grid,
                                             const SolverOptions& opt = {}) {
    const std::string k = key(model, grid, opt);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = entries_.find(k);
      if (it != entries_.end()) return it->second;
    }
    auto value = std::make_shared<const ExponentSamples>(characteristic_exponent(model, grid, opt));
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.emplace(k, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
  }

 private:
  static std::string key(const LevyModel& model, const GridSpec& grid, const SolverOptions& opt) {
    std::ostringstream s;
    s.precision(17);
    s << model.name << '|' << model.gamma << '|' << grid.n << '|' << grid.euler.x_l << '|'
      << grid.euler.x_u << '|' << grid.euler.d << '|' << opt.epsilon << '|' << opt.b << '|'
      << opt.kernel_table_size;
    return s.str();
  }

  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<const ExponentSamples>> entries_;
};

struct SolveResult {
  std::vector<double> x;
  std::vector<double> p;
  std::optional<std::vector<double>> p_exact;
  std::optional<std::vector<double>> abs_err;
  double max_abs_err = 0.0;     // over |x| in [x_l, x_u], when p_exact is present
  double max_imag = 0.0;  // largest |Im| of the inverse transform
  StepTimings timings;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::string> warnings;
};

/// Step 3 on given exponent samples.
inline SolveResult density_from_exponent(const LevyModel& model, const GridSpec& grid,
                                         const ExponentSamples& ex, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("solve: t must be positive");
  SolveResult r;
  r.timings = ex.timings;
  const auto t0 = detail::Clock::now();
  const ComplexSeries dens = detail::tagged("step3/euler_ft", [&] {
    return inverse_ft(ex.g, t, grid.euler, grid.h_hat, &r.warnings);
  });
  r.timings.step3 = detail::seconds_since(t0);
  r.timings.total += r.timings.step3;

  const std::int64_t n = grid.n;
  r.x.reserve(dens.size());
  r.p.reserve(dens.size());
  for (std::int64_t k = -n + 1; k <= n; ++k) {
    r.x.push_back(static_cast<double>(k) * grid.h_hat);
    r.p.push_back(dens.at(k).real());
    r.max_imag = std::max(r.max_imag, std::fabs(dens.at(k).imag()));
  }
  if (model.exact_density) {
    std::vector<double> pe(r.x.size()), err(r.x.size());
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      pe[i] = (*model.exact_density)(r.x[i], t);
      err[i] = std::fabs(r.p[i] - pe[i]);
      const double ax = std::fabs(r.x[i]);
      if (ax >= grid.euler.x_l && ax <= grid.euler.x_u) r.max_abs_err = std::max(r.max_abs_err, err[i]);
    }
    r.p_exact = std::move(pe);
    r.abs_err = std::move(err);
  }
  r.params = {{"gamma", grid.gamma},
              {"t", t},
              {"N", static_cast<double>(grid.n)},
              {"N_gamma", static_cast<double>(grid.n_gamma)},
              {"M", static_cast<double>(grid.m)},
              {"h_tilde", grid.h_tilde()},
              {"h_hat", grid.h_hat},
              {"p", grid.euler.p},
              {"q", grid.euler.q},
              {"x_l", grid.euler.x_l},
              {"x_u", grid.euler.x_u},
              {"d", grid.euler.d}};
  return r;
}

/// Full pipeline. With a cache, Steps 1-2 are shared across calls with the same grid.
inline SolveResult solve(const LevyModel& model, const GridSpec& grid, double t,
                         const SolverOptions& opt = {}, ExponentCache* cache = nullptr) {
  std::shared_ptr<const ExponentSamples> ex =
      cache != nullptr ? cache->get(model, grid, opt)
                       : std::make_shared<const ExponentSamples>(
                             characteristic_exponent(model, grid, opt));
  SolveResult r = density_from_exponent(model, grid, *ex, t);
  r.params.emplace_back("epsilon", opt.epsilon);
  r.params.emplace_back("b", opt.b);
  return r;
}

}  // namespace levyfft
