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

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "levyfft/errors.hpp"
#include "levyfft/series.hpp"
#include "levyfft/special.hpp"

namespace levyfft {

enum class Direction { kForward, kInverse };

constexpr bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

/// Iterative radix-2 FFT with precomputed bit-reversal and twiddle tables.
/// Immutable after construction.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n) : n_(n) {
    if (!is_power_of_two(n)) {
      throw LengthError("fft: length " + std::to_string(n) + " is not a power of two");
    }
    log2n_ = 0;
    while ((std::size_t{1} << log2n_) < n_) ++log2n_;
    bitrev_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t r = 0;
      for (unsigned b = 0; b < log2n_; ++b) r |= ((i >> b) & 1u) << (log2n_ - 1 - b);
      bitrev_[i] = r;
    }
    // Twiddles exp(-2 pi i k / n), k < n/2, each evaluated directly.
    twiddle_.resize(n_ / 2);
    for (std::size_t k = 0; k < n_ / 2; ++k) {
      const double theta = -2.0 * kPi * static_cast<double>(k) / static_cast<double>(n_);
      twiddle_[k] = {std::cos(theta), std::sin(theta)};
    }
  }

  std::size_t size() const noexcept { return n_; }

  /// In place. Forward: X_m = sum_k x_k e^{-2 pi i k m / n}.
  /// Inverse: x_k = (1/n) sum_m X_m e^{+2 pi i k m / n}.
  void execute(std::span<cplx> data, Direction dir) const {
    if (data.size() != n_) {
      throw LengthError("fft: buffer length " + std::to_string(data.size()) +
                        " does not match plan length " + std::to_string(n_));
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);
    }
    const bool inverse = dir == Direction::kInverse;
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      const std::size_t half = len / 2;
      const std::size_t stride = n_ / len;
      for (std::size_t start = 0; start < n_; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          cplx w = twiddle_[k * stride];
          if (inverse) w = std::conj(w);
          const cplx u = data[start + k];
          const cplx v = data[start + k + half] * w;
          data[start + k] = u + v;
          data[start + k + half] = u - v;
        }
      }
    }
    if (inverse) {
      const double scale = 1.0 / static_cast<double>(n_);
      for (auto& z : data) z *= scale;
    }
  }

  /// Shared, lazily built plan for length n. Thread-safe.
  static std::shared_ptr<const FftPlan> get(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::shared_ptr<const FftPlan>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto plan = std::make_shared<const FftPlan>(n);
    cache.emplace(n, plan);
    return plan;
  }

 private:
  std::size_t n_;
  unsigned log2n_ = 0;
  std::vector<std::size_t> bitrev_;
  std::vector<cplx> twiddle_;
};

inline void fft_inplace(std::span<cplx> data, Direction dir) {
  FftPlan::get(data.size())->execute(data, dir);
}

/// Transform of a series; the output keeps the input's offset and spacing, so
/// element m of the result is the m-th DFT coefficient.
inline ComplexSeries fft(const ComplexSeries& x, Direction dir) {
  ComplexSeries out = x;
  fft_inplace(out.values(), dir);
  return out;
}

}  // namespace levyfft
