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

// Symmetric Levy models nu(dy) = mu(|y|) / |y|^gamma dy with the closed forms
// used to validate the solver.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "levyfft/special.hpp"

namespace levyfft {

struct LevyModel {
  std::string name;
  int gamma = 1;
  std::function<double(double)> mu;
  std::optional<std::function<double(double, double)>> exact_density;
  std::optional<std::function<double(double)>> exact_exponent;
  /// N = 2^(i - i_gamma) in the refinement studies.
  int i_offset = 2;
  /// Half-width of the analyticity strip of the transform; drives h~.
  double strip_d = 1.0;

  void validate() const {
    if (gamma != 1 && gamma != 2) {
      throw std::invalid_argument("LevyModel '" + name + "': gamma must be 1 or 2");
    }
    if (!mu) throw std::invalid_argument("LevyModel '" + name + "': mu is empty");
  }
};

/// Symmetric variance-gamma density
///   p(x, t) = (|x|/2)^{t-1/2} K_{1/2-t}(|x|) / (sqrt(pi) Gamma(t)).
/// At x = 0 the limit Gamma(t - 1/2) / (2 sqrt(pi) Gamma(t)) is returned for
/// t > 1/2; for t <= 1/2 the density diverges and +inf is returned.
inline double exact_vg(double x, double t) {
  if (!(t > 0.0)) throw std::domain_error("exact_vg: t must be positive");
  const double ax = std::fabs(x);
  if (ax == 0.0) {
    if (t <= 0.5) return std::numeric_limits<double>::infinity();
    return gamma_fn(t - 0.5) / (2.0 * std::sqrt(kPi) * gamma_fn(t));
  }
  return std::pow(ax / 2.0, t - 0.5) * bessel_k(0.5 - t, ax) / (std::sqrt(kPi) * gamma_fn(t));
}

/// Symmetric NIG density p(x, t) = t e^t K_1(sqrt(x^2 + t^2)) / (pi sqrt(x^2 + t^2)).
inline double exact_nig(double x, double t) {
  if (!(t > 0.0)) throw std::domain_error("exact_nig: t must be positive");
  const double s = std::hypot(x, t);
  // e^t K_1(s) with s >= t: fold the exponentials to avoid overflow for large t.
  const double scaled_k = bessel_k(1.0, s) * std::exp(s);
  return t * std::exp(t - s) * scaled_k / (kPi * s);
}

/// mu(y) = e^{-y}; exact zero once e^{-y} leaves the normal range.
inline double vg_mu(double y) { return y > 700.0 ? 0.0 : std::exp(-y); }

/// mu(y) = y K_1(y) / pi, with the y -> 0 limit 1/pi.
inline double nig_mu(double y) {
  if (y < 1e-300) return 1.0 / kPi;
  if (y > 700.0) return 0.0;
  return y * bessel_k(1.0, y) / kPi;
}

/// gamma = 1, mu = e^{-y}; G(w) = -log(1 + w^2).
inline LevyModel vg_model() {
  LevyModel m;
  m.name = "vg";
  m.gamma = 1;
  m.mu = vg_mu;
  m.exact_density = exact_vg;
  m.exact_exponent = [](double w) { return -std::log1p(w * w); };
  m.i_offset = 2;
  return m;
}

/// gamma = 2, mu = y K_1(y) / pi; G(w) = 1 - sqrt(1 + w^2).
inline LevyModel nig_model() {
  LevyModel m;
  m.name = "nig";
  m.gamma = 2;
  m.mu = nig_mu;
  m.exact_density = exact_nig;
  m.exact_exponent = [](double w) { return 1.0 - std::sqrt(1.0 + w * w); };
  m.i_offset = 3;
  return m;
}

}  // namespace levyfft
