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

// Fractional FFT: S_n = sum_{l=-N+1}^{N} c_l exp(i delta l n) for n = -N+1..N,
// for any real delta. Uses the chirp split
//   exp(i delta l n) = exp(i delta (l^2 + n^2) / 2) * exp(-i delta (n - l)^2 / 2)
// so the sum becomes one linear convolution, evaluated circularly at length 4N.

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "levyfft/errors.hpp"
#include "levyfft/fft.hpp"
#include "levyfft/series.hpp"

namespace levyfft {

namespace detail {

/// exp(sign * i * delta * m^2 / 2), with the phase reduced modulo 2 pi in
/// extended precision; delta * m^2 reaches 1e5 rad for the lengths used here.
inline cplx chirp(double delta, std::int64_t m, double sign) {
  using ld = long double;
  constexpr ld two_pi = 6.283185307179586476925286766559005768L;
  const ld mm = static_cast<ld>(m) * static_cast<ld>(m);
  ld phase = std::fmod(static_cast<ld>(delta) * mm * 0.5L, two_pi);
  return std::polar(1.0, static_cast<double>(sign * phase));
}

}  // namespace detail

class FrftPlan {
 public:
  /// length = 2N, the number of input (and output) samples.
  FrftPlan(std::size_t length, double delta) : length_(length), delta_(delta) {
    if (length < 2 || !is_power_of_two(length)) {
      throw LengthError("frft: length " + std::to_string(length) +
                        " must be a power of two and at least 2");
    }
    if (!std::isfinite(delta)) throw std::invalid_argument("frft: delta must be finite");
    const auto half = static_cast<std::int64_t>(length / 2);
    const std::size_t conv_len = 2 * length;
    fft_ = FftPlan::get(conv_len);

    // Pre-chirp for l and post-chirp for n share the grid -N+1..N.
    chirp_.resize(length_);
    for (std::size_t i = 0; i < length_; ++i) {
      chirp_[i] = detail::chirp(delta_, static_cast<std::int64_t>(i) - half + 1, +1.0);
    }
    // Kernel exp(-i delta m^2 / 2) for m = n - l in [-2N+1, 2N-1], wrapped mod 4N.
    kernel_hat_.assign(conv_len, cplx{0.0, 0.0});
    const auto span = static_cast<std::int64_t>(length_) - 1;
    for (std::int64_t m = -span; m <= span; ++m) {
      const auto slot = static_cast<std::size_t>((m + static_cast<std::int64_t>(conv_len)) %
                                                 static_cast<std::int64_t>(conv_len));
      kernel_hat_[slot] = detail::chirp(delta_, m, -1.0);
    }
    fft_->execute(kernel_hat_, Direction::kForward);
  }

  std::size_t length() const noexcept { return length_; }
  double delta() const noexcept { return delta_; }

  /// c[i] holds c_l for l = i - N + 1; the result is laid out the same way in n.
  std::vector<cplx> apply(std::span<const cplx> c) const {
    if (c.size() != length_) {
      throw LengthError("frft: input length " + std::to_string(c.size()) +
                        " does not match plan length " + std::to_string(length_));
    }
    std::vector<cplx> buf(2 * length_, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < length_; ++i) buf[i] = c[i] * chirp_[i];
    fft_->execute(buf, Direction::kForward);
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= kernel_hat_[i];
    fft_->execute(buf, Direction::kInverse);
    // With c_l at slot l + N - 1, the circular index p = n + N - 1 carries
    // p - i = n - l, so output n is read from the same slot layout.
    std::vector<cplx> out(length_);
    for (std::size_t i = 0; i < length_; ++i) out[i] = buf[i] * chirp_[i];
    return out;
  }

 private:
  std::size_t length_;
  double delta_;
  std::shared_ptr<const FftPlan> fft_;
  std::vector<cplx> chirp_;
  std::vector<cplx> kernel_hat_;
};

/// frft over a series indexed l = -N+1..N; returns the series over n = -N+1..N.
/// The output spacing is left equal to the input spacing; callers that attach
/// a physical grid to n rescale it themselves.
inline ComplexSeries frft(const ComplexSeries& c, double delta) {
  const auto length = c.size();
  if (!is_power_of_two(length) || length < 2) {
    throw LengthError("frft: length " + std::to_string(length) + " is not a power of two");
  }
  const auto half = static_cast<std::int64_t>(length / 2);
  if (c.offset() != -half + 1) {
    throw std::invalid_argument("frft: input must be indexed from -N+1 (N = " +
                                std::to_string(half) + "), got offset " +
                                std::to_string(c.offset()));
  }
  FrftPlan plan(length, delta);
  return ComplexSeries(c.offset(), plan.apply(c.values()), c.spacing());
}

}  // namespace levyfft
