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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "levyfft/errors.hpp"

namespace levyfft {

using cplx = std::complex<double>;

/// A run of complex samples on an equispaced grid. Element i sits at logical
/// index offset + i, i.e. at abscissa (offset + i) * spacing.
class ComplexSeries {
 public:
  ComplexSeries(std::int64_t offset, std::vector<cplx> values, double spacing)
      : offset_(offset), values_(std::move(values)), spacing_(spacing) {
    if (values_.empty()) throw std::invalid_argument("ComplexSeries: values must be non-empty");
    if (!(spacing_ > 0.0) || !std::isfinite(spacing_)) {
      throw std::invalid_argument("ComplexSeries: spacing must be finite and positive");
    }
  }

  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t first_index() const noexcept { return offset_; }
  std::int64_t last_index() const noexcept {
    return offset_ + static_cast<std::int64_t>(values_.size()) - 1;
  }
  std::size_t size() const noexcept { return values_.size(); }
  double spacing() const noexcept { return spacing_; }

  bool contains(std::int64_t index) const noexcept {
    return index >= first_index() && index <= last_index();
  }

  /// Value at logical index; throws CoverageError outside the stored range.
  const cplx& at(std::int64_t index) const {
    if (!contains(index)) {
      throw CoverageError("ComplexSeries: index " + std::to_string(index) + " outside [" +
                          std::to_string(first_index()) + ", " + std::to_string(last_index()) +
                          "]");
    }
    return values_[static_cast<std::size_t>(index - offset_)];
  }
  cplx& at(std::int64_t index) {
    return const_cast<cplx&>(std::as_const(*this).at(index));
  }

  const std::vector<cplx>& values() const noexcept { return values_; }
  std::vector<cplx>& values() noexcept { return values_; }

  /// Copy of the logical range [first, last]; both ends must be covered.
  ComplexSeries slice(std::int64_t first, std::int64_t last) const {
    if (first > last || !contains(first) || !contains(last)) {
      throw CoverageError("ComplexSeries: slice [" + std::to_string(first) + ", " +
                          std::to_string(last) + "] not covered by [" +
                          std::to_string(first_index()) + ", " + std::to_string(last_index()) +
                          "]");
    }
    auto begin = values_.begin() + (first - offset_);
    return ComplexSeries(first, std::vector<cplx>(begin, begin + (last - first + 1)), spacing_);
  }

 private:
  std::int64_t offset_;
  std::vector<cplx> values_;
  double spacing_;
};

}  // namespace levyfft
