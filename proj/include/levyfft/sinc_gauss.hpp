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

// Sinc-Gauss sampling and the equispaced indefinite integration built on it.
//
// Integrating the sampling formula cell by cell and regrouping the (m, k)
// lattice into three strips turns int_0^{l h} f into
//
//   sum_{k=-N'+1}^{N'} h f((l-k)h) G(k) - sum_{k=-N'+1}^{N'} h f(kh) G(-k) + H_l,
//
// with G(v) = int_0^v sinc(x) exp(-x^2 / 2r^2) dx and the edge correction
//   H_1 = 0,  H_l = G(N') [ sum_{k=N'+1}^{N'+l-1} h f_k + sum_{k=-N'+1}^{-N'+l-1} h f_k ].
// The first sum is a convolution and runs through one FFT pair of length 4N'.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "levyfft/errors.hpp"
#include "levyfft/fft.hpp"
#include "levyfft/frft.hpp"
#include "levyfft/series.hpp"
#include "levyfft/special.hpp"

namespace levyfft {

struct SincGaussConfig {
  std::int64_t n_prime = 0;
  double h_tilde = 0.0;
  double r = 0.0;

  static double default_r(std::int64_t n_prime) {
    return std::sqrt(static_cast<double>(n_prime) / kPi);
  }

  static SincGaussConfig make(std::int64_t n_prime, double h_tilde, double r) {
    if (n_prime < 2 || !is_power_of_two(static_cast<std::size_t>(n_prime))) {
      throw LengthError("SincGaussConfig: N' = " + std::to_string(n_prime) +
                        " must be a power of two and at least 2");
    }
    if (!(h_tilde > 0.0) || !(r > 0.0)) {
      throw std::invalid_argument("SincGaussConfig: h_tilde and r must be positive");
    }
    return SincGaussConfig{n_prime, h_tilde, r};
  }

  /// r = sqrt(N' / pi).
  static SincGaussConfig standard(std::int64_t n_prime, double h_tilde) {
    return make(n_prime, h_tilde, default_r(n_prime));
  }
};

/// G_r(k) for k = 0..N'; negative arguments use G_r(-k) = -G_r(k).
struct KernelTable {
  std::vector<double> g;
  double r = 0.0;
  std::int64_t m_table = 0;

  std::int64_t n_prime() const noexcept { return static_cast<std::int64_t>(g.size()) - 1; }

  double operator()(std::int64_t k) const {
    const std::int64_t ak = k < 0 ? -k : k;
    if (ak > n_prime()) {
      throw CoverageError("KernelTable: |k| = " + std::to_string(ak) + " exceeds N' = " +
                          std::to_string(n_prime()));
    }
    const double v = g[static_cast<std::size_t>(ak)];
    return k < 0 ? -v : v;
  }
};

/// Fourier transform of sinc(x) exp(-x^2 / 2r^2):
///   (1/2) [erf(r(w + pi)/sqrt2) - erf(r(w - pi)/sqrt2)],
/// switched to erfc differences off the passband to avoid cancellation.
inline double sinc_gauss_spectrum(double omega, double r) {
  const double w = std::fabs(omega);
  const double s = r / std::sqrt(2.0);
  if (w <= kPi) return 0.5 * (erf(s * (w + kPi)) - erf(s * (w - kPi)));
  return 0.5 * (erfc(s * (w - kPi)) - erfc(s * (w + kPi)));
}

inline std::int64_t default_kernel_table_size(std::int64_t n_prime) {
  return 4 * n_prime;
}

/// G_r(k), k = 0..n_prime, from the spectral form of the unit-cell integrals
///   G(k+1) - G(k) ~= (h'/2pi) sum_{l=-M+1}^{M} F(l h') sinc(l h'/2pi) e^{i l h'/2} e^{i k l h'},
/// h' = 2pi / M, evaluated for all k by one fractional FFT and prefix-summed from G(0) = 0.
inline KernelTable kernel_table(double r, std::int64_t n_prime, std::int64_t m_table = 0) {
  if (m_table == 0) m_table = default_kernel_table_size(n_prime);
  if (!(r > 0.0)) throw std::invalid_argument("kernel_table: r must be positive");
  if (n_prime < 1) throw std::invalid_argument("kernel_table: N' must be positive");
  if (!is_power_of_two(static_cast<std::size_t>(m_table))) {
    throw LengthError("kernel_table: table size " + std::to_string(m_table) +
                      " is not a power of two");
  }
  if (m_table / 2 < n_prime) {
    throw std::invalid_argument("kernel_table: floor(m_table/2) = " + std::to_string(m_table / 2) +
                                " is smaller than N' = " + std::to_string(n_prime));
  }
  const double hp = 2.0 * kPi / static_cast<double>(m_table);
  const auto len = static_cast<std::size_t>(2 * m_table);
  std::vector<cplx> c(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::int64_t l = static_cast<std::int64_t>(i) - m_table + 1;
    const double w = static_cast<double>(l) * hp;
    c[i] = (hp / (2.0 * kPi)) * sinc_gauss_spectrum(w, r) * sinc(w / (2.0 * kPi)) *
           std::polar(1.0, 0.5 * w);
  }
  const auto diffs = FrftPlan(len, hp).apply(c);

  KernelTable t;
  t.r = r;
  t.m_table = m_table;
  t.g.resize(static_cast<std::size_t>(n_prime + 1));
  t.g[0] = 0.0;
  for (std::int64_t k = 0; k < n_prime; ++k) {
    const auto slot = static_cast<std::size_t>(k + m_table - 1);
    t.g[static_cast<std::size_t>(k + 1)] = t.g[static_cast<std::size_t>(k)] + diffs[slot].real();
  }
  return t;
}

/// T_{N',h} f(zeta) = sum_k f(kh) sinc(zeta/h - k) exp(-(zeta/h - k)^2 / 2r^2),
/// k = floor(zeta/h) - N' + 1 .. floor(zeta/h) + N'.
inline cplx sg_interpolate(const ComplexSeries& samples, const SincGaussConfig& cfg, double zeta) {
  const double x = zeta / cfg.h_tilde;
  const double fl = std::floor(x);
  const auto base = static_cast<std::int64_t>(fl);
  const std::int64_t first = base - cfg.n_prime + 1;
  const std::int64_t last = base + cfg.n_prime;
  if (!samples.contains(first) || !samples.contains(last)) {
    throw CoverageError("sg_interpolate: need samples over [" + std::to_string(first) + ", " +
                        std::to_string(last) + "], have [" +
                        std::to_string(samples.first_index()) + ", " +
                        std::to_string(samples.last_index()) + "]");
  }
  // sin(pi (x - k)) = (-1)^(base - k) sin(pi frac), exact zeros on the grid.
  const double frac = x - fl;
  const double s_frac = std::sin(kPi * frac);
  const double inv2r2 = 1.0 / (2.0 * cfg.r * cfg.r);
  cplx acc{0.0, 0.0};
  for (std::int64_t k = first; k <= last; ++k) {
    const double d = x - static_cast<double>(k);
    double kern;
    if (frac == 0.0) {
      kern = (k == base) ? 1.0 : 0.0;
    } else {
      const double sign = ((base - k) % 2 == 0) ? 1.0 : -1.0;
      kern = sign * s_frac / (kPi * d);
    }
    acc += samples.at(k) * (kern * std::exp(-d * d * inv2r2));
  }
  return acc;
}

namespace detail {

inline void check_integral_inputs(const ComplexSeries& samples, const SincGaussConfig& cfg,
                                  const KernelTable& table) {
  const std::int64_t np = cfg.n_prime;
  if (samples.first_index() != -np || static_cast<std::int64_t>(samples.size()) != 3 * np) {
    throw std::invalid_argument("indefinite_integral: expected 3N' = " + std::to_string(3 * np) +
                                " samples over [" + std::to_string(-np) + ", " +
                                std::to_string(2 * np - 1) + "], got " +
                                std::to_string(samples.size()) + " over [" +
                                std::to_string(samples.first_index()) + ", " +
                                std::to_string(samples.last_index()) + "]");
  }
  if (table.n_prime() != np || std::fabs(table.r - cfg.r) > 1e-12 * cfg.r) {
    throw std::invalid_argument("indefinite_integral: kernel table built for N' = " +
                                std::to_string(table.n_prime()) + ", r = " +
                                std::to_string(table.r) + " but config has N' = " +
                                std::to_string(np) + ", r = " + std::to_string(cfg.r));
  }
}

/// Second sum and edge corrections H_l, l = 1..N', in O(N').
inline std::vector<cplx> integral_corrections(const ComplexSeries& samples,
                                              const SincGaussConfig& cfg,
                                              const KernelTable& table) {
  const std::int64_t np = cfg.n_prime;
  const double h = cfg.h_tilde;
  cplx second{0.0, 0.0};
  for (std::int64_t k = -np + 1; k <= np; ++k) second += h * samples.at(k) * table(-k);
  std::vector<cplx> out(static_cast<std::size_t>(np));
  const double g_edge = table(np);
  cplx tail{0.0, 0.0};
  for (std::int64_t l = 1; l <= np; ++l) {
    if (l >= 2) tail += h * (samples.at(np + l - 1) + samples.at(-np + l - 1));
    out[static_cast<std::size_t>(l - 1)] = -second + g_edge * tail;
  }
  return out;
}

}  // namespace detail

/// int_0^{l h} f for l = 1..N' from the 3N' samples f(kh), k = -N'..2N'-1.
inline ComplexSeries indefinite_integral(const ComplexSeries& samples, const SincGaussConfig& cfg,
                                         const KernelTable& table) {
  detail::check_integral_inputs(samples, cfg, table);
  const std::int64_t np = cfg.n_prime;
  const std::int64_t len = 4 * np;
  const double h = cfg.h_tilde;

  // Circular layout mod 4N'. The linear convolution spans [-2N'+1, 3N'-1], so
  // outputs l = 1..N' pick up no wrapped terms.
  std::vector<cplx> fbuf(static_cast<std::size_t>(len), cplx{0.0, 0.0});
  std::vector<cplx> gbuf(static_cast<std::size_t>(len), cplx{0.0, 0.0});
  for (std::int64_t k = -np; k <= 2 * np - 1; ++k) {
    fbuf[static_cast<std::size_t>((k + len) % len)] = h * samples.at(k);
  }
  for (std::int64_t k = -np + 1; k <= np; ++k) {
    gbuf[static_cast<std::size_t>((k + len) % len)] = table(k);
  }
  const auto plan = FftPlan::get(static_cast<std::size_t>(len));
  plan->execute(fbuf, Direction::kForward);
  plan->execute(gbuf, Direction::kForward);
  for (std::size_t i = 0; i < fbuf.size(); ++i) fbuf[i] *= gbuf[i];
  plan->execute(fbuf, Direction::kInverse);

  auto out = detail::integral_corrections(samples, cfg, table);
  for (std::int64_t l = 1; l <= np; ++l) {
    out[static_cast<std::size_t>(l - 1)] += fbuf[static_cast<std::size_t>(l)];
  }
  return ComplexSeries(1, std::move(out), h);
}

enum class Symmetry {
  kConjugateOdd,  // v(-l) = -conj(v(l)), v(0) = 0
  kEven,          // v(-l) = v(l)
};

/// Extends values at l = 1..N' to l = -N'+1..N'. `at_zero` fills l = 0 for kEven.
inline ComplexSeries negative_extension(const ComplexSeries& positive, Symmetry kind,
                                        cplx at_zero = {0.0, 0.0}) {
  if (positive.first_index() != 1) {
    throw std::invalid_argument("negative_extension: input must start at l = 1");
  }
  const std::int64_t np = positive.last_index();
  std::vector<cplx> out(static_cast<std::size_t>(2 * np));
  for (std::int64_t l = -np + 1; l <= np; ++l) {
    cplx v;
    if (l > 0) {
      v = positive.at(l);
    } else if (l == 0) {
      v = kind == Symmetry::kConjugateOdd ? cplx{0.0, 0.0} : at_zero;
    } else {
      v = kind == Symmetry::kConjugateOdd ? -std::conj(positive.at(-l)) : positive.at(-l);
    }
    out[static_cast<std::size_t>(l + np - 1)] = v;
  }
  return ComplexSeries(-np + 1, std::move(out), positive.spacing());
}

}  // namespace levyfft
