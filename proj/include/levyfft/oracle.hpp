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

// Slow reference evaluations. Nothing here shares code with the fast paths
// beyond the data types: direct sums run in long double, integrals go through
// Boost's adaptive Gauss-Kronrod rule.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "levyfft/de_ft.hpp"
#include "levyfft/series.hpp"

namespace levyfft::oracle {

using ld = long double;
using lcplx = std::complex<ld>;

inline constexpr ld kPiL = 3.141592653589793238462643383279502884L;
inline constexpr ld kTwoPiL = 2.0L * kPiL;

/// e^{i theta} with theta reduced in long double.
inline lcplx unit(ld theta) {
  theta = std::fmod(theta, kTwoPiL);
  return {std::cos(theta), std::sin(theta)};
}

/// sum_j x_j e^{-+2 pi i jk / n}; the inverse carries the 1/n factor.
inline std::vector<cplx> dft(const std::vector<cplx>& x, bool inverse = false) {
  const auto n = static_cast<std::int64_t>(x.size());
  const ld sign = inverse ? 1.0L : -1.0L;
  std::vector<cplx> out(x.size());
  for (std::int64_t k = 0; k < n; ++k) {
    lcplx acc{0.0L, 0.0L};
    for (std::int64_t j = 0; j < n; ++j) {
      acc += lcplx(x[static_cast<std::size_t>(j)]) *
             unit(sign * kTwoPiL * static_cast<ld>((j * k) % n) / static_cast<ld>(n));
    }
    if (inverse) acc /= static_cast<ld>(n);
    out[static_cast<std::size_t>(k)] = cplx(acc);
  }
  return out;
}

/// S_n = sum_{l=-N+1}^{N} c_l e^{i delta l n}, n = -N+1..N; c laid out from l = -N+1.
inline std::vector<cplx> frft(const std::vector<cplx>& c, double delta) {
  const auto half = static_cast<std::int64_t>(c.size() / 2);
  std::vector<cplx> out(c.size());
  for (std::int64_t n = -half + 1; n <= half; ++n) {
    lcplx acc{0.0L, 0.0L};
    for (std::int64_t l = -half + 1; l <= half; ++l) {
      acc += lcplx(c[static_cast<std::size_t>(l + half - 1)]) *
             unit(static_cast<ld>(delta) * static_cast<ld>(l * n));
    }
    out[static_cast<std::size_t>(n + half - 1)] = cplx(acc);
  }
  return out;
}

/// mu_k = sum_j w_j e^{-i k h~ y_j}, k = 0..k_max.
inline ComplexSeries exponential_sum(const DeSources& src, double h_tilde, std::int64_t k_max) {
  std::vector<cplx> out(static_cast<std::size_t>(k_max + 1));
  for (std::int64_t k = 0; k <= k_max; ++k) {
    lcplx acc{0.0L, 0.0L};
    for (std::size_t j = 0; j < src.size(); ++j) {
      acc += lcplx(src.weights[j]) *
             unit(-static_cast<ld>(k) * static_cast<ld>(h_tilde) * static_cast<ld>(src.points[j]));
    }
    out[static_cast<std::size_t>(k)] = cplx(acc);
  }
  return ComplexSeries(0, std::move(out), h_tilde);
}

/// Adaptive 61-point Gauss-Kronrod on [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol);
}

/// G_r(k) = int_0^k sinc(x) e^{-x^2 / 2r^2} dx for k = 0..k_max (normalized sinc).
inline std::vector<double> kernel_integrals(double r, std::int64_t k_max) {
  const auto f = [r](double x) {
    const double s = x == 0.0 ? 1.0 : std::sin(M_PI * x) / (M_PI * x);
    return s * std::exp(-x * x / (2.0 * r * r));
  };
  std::vector<double> g(static_cast<std::size_t>(k_max + 1), 0.0);
  ld acc = 0.0L;
  for (std::int64_t k = 0; k < k_max; ++k) {
    acc += integrate(f, static_cast<double>(k), static_cast<double>(k + 1), 1e-15);
    g[static_cast<std::size_t>(k + 1)] = static_cast<double>(acc);
  }
  return g;
}

/// int_0^{l h} of the sinc-Gauss interpolant, l = 1..N', summed cell by cell:
/// cell [m h, (m+1) h] uses samples k = m-N'+1..m+N' and contributes
///   h f_k (G(m+1-k) - G(m-k)).
/// `g` returns G at integer arguments (odd in its argument).
inline std::vector<cplx> partitioned_integral(const ComplexSeries& samples, std::int64_t n_prime,
                                              const std::function<double(std::int64_t)>& g) {
  const ld h = samples.spacing();
  std::vector<cplx> out(static_cast<std::size_t>(n_prime));
  lcplx acc{0.0L, 0.0L};
  for (std::int64_t m = 0; m < n_prime; ++m) {
    for (std::int64_t k = m - n_prime + 1; k <= m + n_prime; ++k) {
      acc += h * lcplx(samples.at(k)) * static_cast<ld>(g(m + 1 - k) - g(m - k));
    }
    out[static_cast<std::size_t>(m)] = cplx(acc);
  }
  return out;
}

/// The same integral from the three-part split of the (m, k) index set:
///   S1 = sum_{k=N'+1}^{N'+l-1} f_k (G(l-k) - G(-N')),
///   S2 = sum_{k=-N'+l}^{N'}    f_k (G(l-k) - G(-k)),
///   S3 = sum_{k=-N'+1}^{-N'+l-1} f_k (G(N') - G(-k)),   f_k = h f(kh).
inline std::vector<cplx> three_part_integral(const ComplexSeries& samples, std::int64_t n_prime,
                                             const std::function<double(std::int64_t)>& g) {
  const ld h = samples.spacing();
  std::vector<cplx> out(static_cast<std::size_t>(n_prime));
  for (std::int64_t l = 1; l <= n_prime; ++l) {
    lcplx acc{0.0L, 0.0L};
    const auto f = [&](std::int64_t k) { return h * lcplx(samples.at(k)); };
    for (std::int64_t k = n_prime + 1; k <= n_prime + l - 1; ++k) {
      acc += f(k) * static_cast<ld>(g(l - k) - g(-n_prime));
    }
    for (std::int64_t k = -n_prime + l; k <= n_prime; ++k) {
      acc += f(k) * static_cast<ld>(g(l - k) - g(-k));
    }
    for (std::int64_t k = -n_prime + 1; k <= -n_prime + l - 1; ++k) {
      acc += f(k) * static_cast<ld>(g(n_prime) - g(-k));
    }
    out[static_cast<std::size_t>(l - 1)] = cplx(acc);
  }
  return out;
}

/// 2 int_0^inf (cos(w y) - 1) mu(y) / y^gamma dy, integrated over unit cells
/// up to y_max, with cos - 1 = -2 sin^2 to keep the small-y cells accurate.
inline double levy_exponent(const std::function<double(double)>& mu, int gamma, double w,
                            double y_max = 60.0) {
  const auto f = [&](double y) {
    if (y == 0.0) return gamma == 2 ? -0.5 * w * w * mu(0.0) : 0.0;
    const double s = std::sin(0.5 * w * y);
    return -2.0 * s * s * mu(y) / std::pow(y, gamma);
  };
  const double cell = std::min(1.0, w > 0.0 ? M_PI / w : 1.0);
  ld acc = 0.0L;
  for (double a = 0.0; a < y_max; a += cell) acc += integrate(f, a, std::min(a + cell, y_max));
  return static_cast<double>(2.0L * acc);
}

/// K_v(z) = int_0^inf e^{-z cosh u} cosh(v u) du.
inline double bessel_k(double v, double z) {
  if (!(z > 0.0)) throw std::domain_error("oracle::bessel_k: z must be positive");
  // Beyond u_max the integrand is below e^{-745} relative to its peak.
  const double u_max = std::acosh(1.0 + 745.0 / z) + 1.0;
  const auto f = [=](double u) { return std::exp(-z * std::cosh(u) + z) * std::cosh(v * u); };
  ld acc = 0.0L;
  const double step = std::min(1.0, u_max / 8.0);
  for (double a = 0.0; a < u_max; a += step) acc += integrate(f, a, std::min(a + step, u_max));
  return static_cast<double>(acc) * std::exp(-z);
}

}  // namespace levyfft::oracle
