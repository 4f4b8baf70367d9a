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

// Special functions used by the solver stages and the exact model densities.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace levyfft {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline double erf(double x) { return std::erf(x); }

/// Complementary error function (2/sqrt(pi)) * int_x^inf exp(-t^2) dt.
inline double erfc(double x) { return std::erfc(x); }

/// Modified Bessel function of the second kind K_v(z) for real order and z > 0.
/// K_{-v} = K_v, so negative orders are folded onto |v|.
inline double bessel_k(double v, double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw std::domain_error("bessel_k: argument must be finite and positive, got " +
                            std::to_string(z));
  }
  return std::cyl_bessel_k(std::fabs(v), z);
}

/// Euler Gamma function for t > 0.
inline double gamma_fn(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error("gamma_fn: argument must be finite and positive, got " +
                            std::to_string(t));
  }
  return std::tgamma(t);
}

/// Normalized sinc, sin(pi x) / (pi x).
inline double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = kPi * x;
  return std::sin(px) / px;
}

}  // namespace levyfft
