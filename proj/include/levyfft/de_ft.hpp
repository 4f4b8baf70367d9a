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

// Ooura's DE formula for the one-sided Fourier transform
//
//   int_0^inf mu(y) exp(-i zeta y) dy  ~=  sum_j weight_j * exp(-i zeta y_j),
//
// valid for zeta roughly inside (0, 2 zeta0). This header builds the weights
// and the nonuniform nodes y_j; the exponential sum itself is evaluated by
// nufft.hpp for a whole equispaced zeta grid at once.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "levyfft/errors.hpp"
#include "levyfft/fft.hpp"
#include "levyfft/series.hpp"
#include "levyfft/special.hpp"

namespace levyfft {

using RealFunction = std::function<double(double)>;

struct DeFtParams {
  double zeta0 = 0.0;
  double h = 0.0;
  std::int64_t m_minus = 0;
  std::int64_t m_plus = 0;
  double beta = 0.25;
  double alpha = 0.0;

  std::int64_t m() const noexcept { return m_minus + m_plus; }

  static double alpha_for(double zeta0, double h, double beta) {
    return beta / std::sqrt(1.0 + std::log(1.0 + kPi / (zeta0 * h)) / (4.0 * zeta0 * h));
  }

  static DeFtParams make(double zeta0, double h, std::int64_t m_minus, std::int64_t m_plus,
                         double beta = 0.25) {
    if (!(zeta0 > 0.0) || !(h > 0.0) || !std::isfinite(zeta0) || !std::isfinite(h)) {
      throw std::invalid_argument("DeFtParams: zeta0 and h must be finite and positive");
    }
    if (m_minus <= 0 || m_plus <= 0) {
      throw std::invalid_argument("DeFtParams: truncation indices must be positive");
    }
    if (!is_power_of_two(static_cast<std::size_t>(m_minus + m_plus))) {
      throw LengthError("DeFtParams: M = m_minus + m_plus = " + std::to_string(m_minus + m_plus) +
                        " is not a power of two");
    }
    return DeFtParams{zeta0, h, m_minus, m_plus, beta, alpha_for(zeta0, h, beta)};
  }

  /// Symmetric truncation M- = M+ = M/2 with step h = log(1000 M) / M.
  static DeFtParams standard(std::int64_t m, double zeta0) {
    const double h = std::log(1.0e3 * static_cast<double>(m)) / static_cast<double>(m);
    return make(zeta0, h, m / 2, m - m / 2);
  }
};

/// The DE variable transform
///   phi(t) = t / (1 - exp(-2t - alpha (1 - e^{-t}) - beta (e^t - 1))),
/// together with phi'(t) and phi_hat(t) = phi(t) - t.
class PhiTransform {
 public:
  PhiTransform(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
      throw std::invalid_argument("PhiTransform: alpha and beta must be positive");
    }
    const double c1 = 2.0 + alpha + beta;
    const double c2 = (beta - alpha) / 2.0;
    const double c3 = (alpha + beta) / 6.0;
    const double c4 = (beta - alpha) / 24.0;
    // Taylor coefficients of (1 - e^{-u(t)}) / t around t = 0.
    d_[0] = c1;
    d_[1] = c2 - c1 * c1 / 2.0;
    d_[2] = c3 - c1 * c2 + c1 * c1 * c1 / 6.0;
    d_[3] = c4 - (c2 * c2 + 2.0 * c1 * c3) / 2.0 + c1 * c1 * c2 / 2.0 - c1 * c1 * c1 * c1 / 24.0;
  }

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  double value(double t) const {
    if (std::fabs(t) < kSeriesRadius) return 1.0 / series_denominator(t);
    return t * inv_denominator(t);
  }

  /// phi(t) - t = t / expm1(u(t)); no cancellation for large t.
  double hat(double t) const {
    if (std::fabs(t) < kSeriesRadius) return value(t) - t;
    return t / std::expm1(u(t));
  }

  double derivative(double t) const {
    if (std::fabs(t) < kSeriesRadius) {
      const double den = series_denominator(t);
      const double dden = d_[1] + t * (2.0 * d_[2] + t * 3.0 * d_[3]);
      return -dden / (den * den);
    }
    // phi' = (1/D) (1 - u' * phi_hat) with D = 1 - e^{-u}. Past |u| = 700 the
    // correction terms underflow (and u' may overflow), so use the limits.
    const double uu = u(t);
    if (uu > 700.0) return 1.0;
    if (uu < -700.0) return 0.0;
    return inv_denominator(t) * (1.0 - du(t) * hat(t));
  }

 private:
  // Below this radius the closed forms lose digits to cancellation.
  static constexpr double kSeriesRadius = 1e-4;

  double u(double t) const {
    return 2.0 * t - alpha_ * std::expm1(-t) + beta_ * std::expm1(t);
  }
  double du(double t) const { return 2.0 + alpha_ * std::exp(-t) + beta_ * std::exp(t); }

  // 1 / (1 - e^{-u}), written so neither branch overflows.
  double inv_denominator(double t) const {
    const double uu = u(t);
    if (uu > 0.0) return -1.0 / std::expm1(-uu);
    return std::exp(uu) / std::expm1(uu);
  }

  double series_denominator(double t) const {
    return d_[0] + t * (d_[1] + t * (d_[2] + t * d_[3]));
  }

  double alpha_;
  double beta_;
  std::array<double, 4> d_{};
};

/// phi(t) with the removable singularity at t = 0 filled by 1 / (2 + alpha + beta).
inline double phi(double t, double alpha, double beta) {
  return PhiTransform(alpha, beta).value(t);
}

/// Weights and nodes of the DE formula, indexed j = -M-..M+-1.
struct DeSources {
  std::vector<cplx> weights;
  std::vector<double> points;
  DeFtParams params;

  std::int64_t first_j() const noexcept { return -params.m_minus; }
  std::size_t size() const noexcept { return points.size(); }
  /// P = pi / (zeta0 h), the node scale y_j = P phi(j h).
  double scale() const noexcept { return kPi / (params.zeta0 * params.h); }
};

/// weight_j = -(2 pi i / zeta0) mu(y_j) sin(pi phi_hat / 2h) phi' exp(i pi phi_hat / 2h),
/// y_j = P phi(j h).
inline DeSources build_sources(const RealFunction& mu, const DeFtParams& params) {
  const PhiTransform tr(params.alpha, params.beta);
  const double p = kPi / (params.zeta0 * params.h);
  const double half_pi_over_h = kPi / (2.0 * params.h);
  const cplx prefactor{0.0, -2.0 * kPi / params.zeta0};

  DeSources out;
  out.params = params;
  const auto m = static_cast<std::size_t>(params.m());
  out.weights.resize(m);
  out.points.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t j = static_cast<std::int64_t>(i) - params.m_minus;
    const double t = static_cast<double>(j) * params.h;
    const double y = p * tr.value(t);
    const double ph = half_pi_over_h * tr.hat(t);
    double mu_y = 0.0;
    try {
      mu_y = mu(y);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "mu failed at j = " << j << ", y_j = " << y << ": " << e.what();
      throw NumericalError(msg.str());
    }
    if (!std::isfinite(mu_y)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "mu returned a non-finite value at j = " << j << ", y_j = " << y;
      throw NumericalError(msg.str());
    }
    out.points[i] = y;
    out.weights[i] = prefactor * (mu_y * std::sin(ph) * tr.derivative(t)) * std::polar(1.0, ph);
  }
  return out;
}

/// One leg of the two-zeta0 splice: DE parameters and the k range it serves.
struct SpliceRun {
  DeFtParams params;
  std::int64_t k_first = 0;
  std::int64_t k_last = 0;
};

/// zeta0 = N_gamma h~ / 15 serves k = 0..floor(N_gamma / 8); zeta0 = N_gamma h~ / 1.8
/// serves the rest up to N_gamma. Both legs use M = 2 N_gamma.
inline std::array<SpliceRun, 2> splice_plan(std::int64_t n_gamma, double h_tilde) {
  if (n_gamma < 8) {
    throw std::invalid_argument("splice_plan: n_gamma must be at least 8, got " +
                                std::to_string(n_gamma));
  }
  if (!(h_tilde > 0.0)) throw std::invalid_argument("splice_plan: h_tilde must be positive");
  const std::int64_t m = 2 * n_gamma;
  const double span = static_cast<double>(n_gamma) * h_tilde;
  const std::int64_t seam = n_gamma / 8;
  return {SpliceRun{DeFtParams::standard(m, span / 15.0), 0, seam},
          SpliceRun{DeFtParams::standard(m, span / 1.8), seam + 1, n_gamma}};
}

}  // namespace levyfft
