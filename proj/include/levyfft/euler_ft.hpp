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

// Inverse Fourier transform with a continuous Euler transform:
//
//   (1/2pi) int exp(t G(w)) e^{i x w} dw
//     ~= (h~/2pi) sum_{l=-N+1}^{N} w(|l h~|; p, q) exp(t G(l h~)) e^{i x l h~},
//
// with the erfc roll-off w(xi; p, q) = erfc(xi/p - q) / 2. Evaluated on
// x = n h^ through a fractional FFT with delta = h~ h^, since h~ h^ = pi/N
// does not hold in general.

#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "levyfft/errors.hpp"
#include "levyfft/frft.hpp"
#include "levyfft/series.hpp"
#include "levyfft/special.hpp"

namespace levyfft {

struct EulerParams {
  std::int64_t n = 0;
  double h_tilde = 0.0;
  double p = 0.0;
  double q = 0.0;
  double x_l = 0.0;
  double x_u = 0.0;
  double d = 1.0;

  /// h~ = sqrt(2 pi d (x_l + x_u) / (x_l^2 N)), p = sqrt(N h~ / x_l), q = sqrt(x_l N h~ / 4).
  static EulerParams make(std::int64_t n, double x_l, double x_u, double d = 1.0) {
    if (n < 1) throw std::invalid_argument("EulerParams: N must be positive");
    if (!(x_l > 0.0) || !(x_u > x_l)) {
      throw std::invalid_argument("EulerParams: need 0 < x_l < x_u");
    }
    if (x_l / x_u > 0.5) {
      throw std::invalid_argument("EulerParams: x_l / x_u must not exceed 1/2");
    }
    if (!(d > 0.0)) throw std::invalid_argument("EulerParams: d must be positive");
    const double nd = static_cast<double>(n);
    const double h = std::sqrt(2.0 * kPi * d * (x_l + x_u) / (x_l * x_l * nd));
    return EulerParams{n, h, std::sqrt(nd * h / x_l), std::sqrt(x_l * nd * h / 4.0), x_l, x_u, d};
  }
};

/// w(xi; p, q) = erfc(xi / p - q) / 2.
inline double weight(double xi, const EulerParams& params) {
  if (xi < 0.0) throw std::invalid_argument("weight: xi must be nonnegative");
  return 0.5 * erfc(xi / params.p - params.q);
}

/// Growth above this bound in exp(t G) is reported; Re G <= 0 for symmetric exponents.
inline constexpr double kGrowthWarnLevel = 1.0 + 1e-6;

/// Evaluates the weighted sum at x = n h^, n = -N+1..N. `g` holds real samples
/// of G at w = l h~, l = -N+1..N. The real part of the result is the density;
/// the imaginary part is roundoff when g is even.
inline ComplexSeries inverse_ft(const std::vector<double>& g, double t, const EulerParams& params,
                                double h_hat, std::vector<std::string>* warnings = nullptr) {
  const std::int64_t n = params.n;
  if (static_cast<std::int64_t>(g.size()) != 2 * n) {
    throw LengthError("inverse_ft: expected 2N = " + std::to_string(2 * n) + " samples, got " +
                      std::to_string(g.size()));
  }
  if (!is_power_of_two(g.size())) {
    throw LengthError("inverse_ft: 2N = " + std::to_string(g.size()) + " is not a power of two");
  }
  if (!(h_hat > 0.0)) throw std::invalid_argument("inverse_ft: h_hat must be positive");

  const double h = params.h_tilde;
  std::vector<cplx> c(g.size());
  double worst = 0.0;
  std::int64_t worst_l = 0;
  for (std::int64_t l = -n + 1; l <= n; ++l) {
    const auto i = static_cast<std::size_t>(l + n - 1);
    const double growth = std::exp(t * g[i]);
    if (!std::isfinite(growth)) {
      std::ostringstream msg;
      msg << "inverse_ft: exp(t G) is not finite at l = " << l << " (G = " << g[i]
          << ", t = " << t << ")";
      throw NumericalError(msg.str());
    }
    if (growth > worst) {
      worst = growth;
      worst_l = l;
    }
    const double xi = std::fabs(static_cast<double>(l) * h);
    c[i] = (h / (2.0 * kPi)) * weight(xi, params) * growth;
  }
  if (warnings != nullptr && worst > kGrowthWarnLevel) {
    std::ostringstream msg;
    msg << "inverse_ft: exp(t G) = " << worst << " > 1 at l = " << worst_l
        << "; the exponent has positive noise";
    warnings->push_back(msg.str());
  }
  FrftPlan plan(c.size(), h * h_hat);
  return ComplexSeries(-n + 1, plan.apply(c), h_hat);
}

}  // namespace levyfft
