// Copyright 2026 The vmvt Authors
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

#ifndef VMVT_DETAIL_FIXED_PHASE_HPP
#define VMVT_DETAIL_FIXED_PHASE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>

#include "vmvt/exact.hpp"

namespace vmvt::detail {

// Phases live on the circle R/Z represented as 128-bit fractions of a turn.
// Arithmetic wraps modulo 2^128, i.e. modulo 1, so multiplying a phase by an
// integer is exact. A double converts exactly whenever its binary expansion
// ends within 128 fractional bits, which covers every double of magnitude at
// least 2^-75; smaller ones are truncated at 2^-128.
using Phase = u128;

inline Phase to_phase(double value) {
  if (value == 0.0 || !std::isfinite(value)) return 0;
  int exponent = 0;
  const double mantissa = std::frexp(std::fabs(value), &exponent);
  const auto m = static_cast<std::uint64_t>(std::ldexp(mantissa, 53));
  // |value| = m * 2^(exponent - 53); as a fraction of 2^-128: shift left by
  // exponent + 75.
  const int shift = exponent + 75;
  Phase magnitude = 0;
  if (shift >= 128) {
    magnitude = 0;  // an integer
  } else if (shift >= 0) {
    magnitude = static_cast<Phase>(m) << shift;
  } else if (shift > -64) {
    magnitude = static_cast<Phase>(m >> -shift);
  }
  return value < 0 ? static_cast<Phase>(-magnitude) : magnitude;
}

// Signed representative in [-1/2, 1/2) as a double.
inline double centered(Phase theta) {
  const auto hi = static_cast<std::int64_t>(static_cast<std::uint64_t>(theta >> 64));
  const auto lo = static_cast<std::uint64_t>(theta);
  return std::ldexp(static_cast<double>(hi), -64) +
         std::ldexp(static_cast<double>(lo), -128);
}

// Distance to the nearest integer, exact on the 2^-128 grid.
inline Phase distance_to_integer(Phase theta) {
  const Phase negated = static_cast<Phase>(-theta);
  return theta < negated ? theta : negated;
}

inline double to_unit(Phase theta) {
  return std::ldexp(static_cast<double>(static_cast<std::uint64_t>(theta >> 64)), -64) +
         std::ldexp(static_cast<double>(static_cast<std::uint64_t>(theta)), -128);
}

// alpha_1 x + ... + alpha_k x^k by Horner's rule, modulo 1.
inline Phase polynomial_phase(std::span<const Phase> coefficients, std::uint64_t x) {
  Phase acc = 0;
  for (std::size_t j = coefficients.size(); j-- > 0;) acc = (acc + coefficients[j]) * x;
  return acc;
}

inline std::complex<double> unit_root(double turns) {
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value))
      carry_ += (sum_ - t) + value;
    else
      carry_ += (value - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace vmvt::detail

#endif  // VMVT_DETAIL_FIXED_PHASE_HPP
