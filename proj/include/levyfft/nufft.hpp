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

// Type-2 style evaluation of mu_k = sum_j w_j exp(-i k h~ y_j), k = 0..N_gamma,
// by Gaussian gridding onto the integer lattice l followed by one length-M FFT.
//
// With a = 2 pi / M and v_j = h~ y_j / a, the Gaussian identity gives
//   mu_k ~= sqrt(pi/tau) e^{tau (a k')^2} (1 / 2pi) sum_l B_l e^{-2 pi i k' l / M},
//   B_l   = sum_j w~_j exp(-(l - v_j)^2 / (4 tau)),
// where k' = k - floor(N_gamma/2) and w~_j = w_j exp(-i floor(N_gamma/2) h~ y_j).
// Centering k' keeps the e^{tau (a k')^2} deconvolution factor below e^{tau pi^2 / 4}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "levyfft/de_ft.hpp"
#include "levyfft/errors.hpp"
#include "levyfft/fft.hpp"
#include "levyfft/series.hpp"
#include "levyfft/special.hpp"

namespace levyfft {

struct NufftParams {
  double epsilon = 1e-10;
  double b = 20.0;
  double tau = 0.0;
  double a = 0.0;
  double h_check = 1.0;
  std::int64_t l_minus = 0;
  std::int64_t l_plus = 0;

  /// Smallest admissible half-width for a target accuracy: -(2/pi) log eps.
  static double min_b(double epsilon) { return -2.0 / kPi * std::log(epsilon); }

  /// tau = -log(eps) / pi^2, a = 2 pi / M, h_check = 1,
  /// L- = ceil(b) - floor(min_j v_j), L+ = -L- + M - 1.
  static NufftParams make(std::int64_t m, double min_v, double epsilon = 1e-10, double b = 20.0) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw std::invalid_argument("NufftParams: epsilon must lie in (0, 1)");
    }
    if (b < min_b(epsilon) * (1.0 - 1e-12)) {
      throw std::invalid_argument("NufftParams: b = " + std::to_string(b) +
                                  " is below -(2/pi) log eps = " + std::to_string(min_b(epsilon)));
    }
    if (!is_power_of_two(static_cast<std::size_t>(m))) {
      throw LengthError("NufftParams: M = " + std::to_string(m) + " is not a power of two");
    }
    NufftParams p;
    p.epsilon = epsilon;
    p.b = b;
    p.tau = -std::log(epsilon) / (kPi * kPi);
    p.a = 2.0 * kPi / static_cast<double>(m);
    p.h_check = 1.0;
    p.l_minus = static_cast<std::int64_t>(std::ceil(b)) -
                static_cast<std::int64_t>(std::floor(min_v));
    p.l_plus = -p.l_minus + m - 1;
    return p;
  }
};

/// Augmented index windows [j_min(l), j_max(l)] for l = l_first..l_first+size-1.
/// An empty window is encoded as j_max = j_min - 1.
struct IndexWindows {
  std::int64_t l_first = 0;
  std::vector<std::int64_t> j_min;
  std::vector<std::int64_t> j_max;

  std::int64_t l_last() const noexcept {
    return l_first + static_cast<std::int64_t>(j_min.size()) - 1;
  }
  std::int64_t lo(std::int64_t l) const { return j_min.at(static_cast<std::size_t>(l - l_first)); }
  std::int64_t hi(std::int64_t l) const { return j_max.at(static_cast<std::size_t>(l - l_first)); }
};

/// Scaled node positions v_j = h~ y_j / a.
inline std::vector<double> lattice_positions(std::span<const double> points, double h_tilde,
                                             double a) {
  std::vector<double> v(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) v[i] = h_tilde * points[i] / a;
  return v;
}

/// j_min(l) = max{ j : l >= ceil((v_j + b) / h_check) },
/// j_max(l) = max{ j : l >= floor((v_j - b) / h_check) },
/// by two forward scans that resume where the previous l stopped. The max over
/// an empty set is j_first for j_min and j_min - 1 for j_max.
inline IndexWindows build_windows(std::span<const double> v, std::int64_t j_first,
                                  const NufftParams& params, std::int64_t l_first,
                                  std::int64_t l_last) {
  if (v.empty()) throw std::invalid_argument("build_windows: no nodes");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1]) {
      throw std::invalid_argument("build_windows: nodes must be nondecreasing (j = " +
                                  std::to_string(j_first + static_cast<std::int64_t>(i)) + ")");
    }
  }
  if (l_last < l_first) throw std::invalid_argument("build_windows: empty l range");

  const auto count = static_cast<std::size_t>(l_last - l_first + 1);
  IndexWindows w;
  w.l_first = l_first;
  w.j_min.resize(count);
  w.j_max.resize(count);

  const auto lower_threshold = [&](std::size_t i) {
    return static_cast<std::int64_t>(std::ceil((v[i] + params.b) / params.h_check));
  };
  const auto upper_threshold = [&](std::size_t i) {
    return static_cast<std::int64_t>(std::floor((v[i] - params.b) / params.h_check));
  };

  std::size_t lo = 0, hi = 0;
  bool hi_found = false;
  for (std::size_t s = 0; s < count; ++s) {
    const std::int64_t l = l_first + static_cast<std::int64_t>(s);
    std::size_t j = lo;
    while (j < v.size() && l >= lower_threshold(j)) {
      lo = j;
      ++j;
    }
    j = hi;
    while (j < v.size() && l >= upper_threshold(j)) {
      hi = j;
      hi_found = true;
      ++j;
    }
    w.j_min[s] = j_first + static_cast<std::int64_t>(lo);
    w.j_max[s] = hi_found ? j_first + static_cast<std::int64_t>(hi) : w.j_min[s] - 1;
  }
  return w;
}

/// Windows over the default lattice range [-L-, L+].
inline IndexWindows build_windows(const DeSources& sources, const NufftParams& params,
                                  double h_tilde) {
  const auto v = lattice_positions(sources.points, h_tilde, params.a);
  return build_windows(v, sources.first_j(), params, -params.l_minus, params.l_plus);
}

/// Parameters for gridding `sources`: L- follows from the smallest node.
inline NufftParams nufft_params_for(const DeSources& sources, double h_tilde,
                                    double epsilon = 1e-10, double b = 20.0) {
  const auto m = static_cast<std::int64_t>(sources.size());
  const double a = 2.0 * kPi / static_cast<double>(m);
  const double min_v = h_tilde * *std::min_element(sources.points.begin(), sources.points.end()) / a;
  return NufftParams::make(m, min_v, epsilon, b);
}

/// mu~_k for k = 0..n_gamma (spacing h~). Requires M = 2 n_gamma.
///
/// The lattice runs from -L- to max(L+, ceil(max v_j + b)) so every node's full
/// Gaussian footprint is gridded; l is folded modulo M, which is exact because
/// the outer phase e^{-2 pi i k' l / M} depends only on l mod M.
inline ComplexSeries nufft_forward(const DeSources& sources, const NufftParams& params,
                                   double h_tilde, std::int64_t n_gamma) {
  const auto m = static_cast<std::int64_t>(sources.size());
  if (m != 2 * n_gamma) {
    throw std::invalid_argument("nufft_forward: M = " + std::to_string(m) +
                                " must equal 2 N_gamma = " + std::to_string(2 * n_gamma));
  }
  if (!is_power_of_two(static_cast<std::size_t>(m))) {
    throw LengthError("nufft_forward: M = " + std::to_string(m) + " is not a power of two");
  }
  if (std::fabs(params.a - 2.0 * kPi / static_cast<double>(m)) > 1e-15 * params.a) {
    throw std::invalid_argument("nufft_forward: params built for a different M");
  }

  const std::int64_t shift = n_gamma / 2;
  const auto v = lattice_positions(sources.points, h_tilde, params.a);

  // w~_j = w_j exp(-i shift h~ y_j), phase reduced in extended precision.
  std::vector<cplx> shifted(sources.size());
  {
    using ld = long double;
    constexpr ld two_pi = 6.283185307179586476925286766559005768L;
    for (std::size_t i = 0; i < shifted.size(); ++i) {
      if (sources.weights[i] == cplx{0.0, 0.0}) continue;
      const ld phase = std::fmod(static_cast<ld>(shift) * static_cast<ld>(h_tilde) *
                                     static_cast<ld>(sources.points[i]),
                                 two_pi);
      shifted[i] = sources.weights[i] * std::polar(1.0, -static_cast<double>(phase));
    }
  }

  const std::int64_t l_lo = -params.l_minus;
  const std::int64_t l_hi =
      std::max(params.l_plus, static_cast<std::int64_t>(std::ceil(v.back() + params.b)));
  const IndexWindows win = build_windows(v, sources.first_j(), params, l_lo, l_hi);

  const double inv4tau = 1.0 / (4.0 * params.tau);
  std::vector<cplx> grid(static_cast<std::size_t>(m), cplx{0.0, 0.0});
  const std::int64_t j0 = sources.first_j();
  for (std::int64_t l = l_lo; l <= l_hi; ++l) {
    const std::int64_t jb = win.lo(l), je = win.hi(l);
    if (je < jb) continue;
    const double lc = static_cast<double>(l) * params.h_check;
    cplx acc{0.0, 0.0};
    for (std::int64_t j = jb; j <= je; ++j) {
      const auto i = static_cast<std::size_t>(j - j0);
      const double d = lc - v[i];
      acc += shifted[i] * std::exp(-d * d * inv4tau);
    }
    grid[static_cast<std::size_t>(((l % m) + m) % m)] += acc;
  }
  fft_inplace(grid, Direction::kForward);

  std::vector<cplx> out(static_cast<std::size_t>(n_gamma + 1));
  const double norm = std::sqrt(kPi / params.tau) * params.h_check / (2.0 * kPi);
  for (std::int64_t k = 0; k <= n_gamma; ++k) {
    const std::int64_t kp = k - shift;
    const double ak = params.a * static_cast<double>(kp);
    out[static_cast<std::size_t>(k)] =
        norm * std::exp(params.tau * ak * ak) * grid[static_cast<std::size_t>(((kp % m) + m) % m)];
  }
  return ComplexSeries(0, std::move(out), h_tilde);
}

/// Extends values at k = 0..K to k = -K+1..K using value(-k) = conj(value(k)).
inline ComplexSeries extend_conjugate(const ComplexSeries& half) {
  if (half.first_index() != 0) {
    throw std::invalid_argument("extend_conjugate: input must start at k = 0");
  }
  const std::int64_t top = half.last_index();
  if (top == 0) return half;
  std::vector<cplx> out(static_cast<std::size_t>(2 * top));
  for (std::int64_t k = -top + 1; k <= top; ++k) {
    out[static_cast<std::size_t>(k + top - 1)] = k >= 0 ? half.at(k) : std::conj(half.at(-k));
  }
  return ComplexSeries(-top + 1, std::move(out), half.spacing());
}

}  // namespace levyfft
