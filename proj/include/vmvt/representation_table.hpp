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

#ifndef VMVT_REPRESENTATION_TABLE_HPP
#define VMVT_REPRESENTATION_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "vmvt/exact.hpp"
#include "vmvt/options.hpp"

namespace vmvt {

/// Power-sum vector (v, v^2, ..., v^k) of a single value, or the
/// component-wise sum of such vectors over a tuple.
using PowerSumVector = std::vector<std::int64_t>;

PowerSumVector power_sums(std::span<const std::int64_t> tuple, int degree);

/// Throws invalid_argument unless every power sum of `variables` values of
/// absolute size at most `max_abs` fits in a signed 64-bit integer.
void require_power_sums_fit(std::int64_t max_abs, int variables, int degree);

/// Sorted map from power-sum vector to the number of ordered tuples that
/// realise it. Keys are stored flat, `degree` components per entry, in
/// strictly increasing lexicographic order.
class RepresentationTable {
 public:
  explicit RepresentationTable(int degree);

  /// The table of the empty tuple: key 0 with multiplicity 1.
  static RepresentationTable unit(int degree);

  /// One entry per value; duplicate values are merged.
  static RepresentationTable singles(std::span<const std::int64_t> values,
                                     int degree);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }

  std::span<const std::int64_t> key(std::size_t i) const {
    return {keys_.data() + i * static_cast<std::size_t>(degree_),
            static_cast<std::size_t>(degree_)};
  }
  std::int64_t leading(std::size_t i) const {
    return keys_[i * static_cast<std::size_t>(degree_)];
  }
  std::uint64_t count(std::size_t i) const { return counts_[i]; }

  /// Appends an entry; keys must arrive in strictly increasing order.
  void append(std::span<const std::int64_t> key, std::uint64_t count);

  ExactCount total() const;
  ExactCount sum_of_squares() const;

  /// Binary checkpoint: u64 LE degree, u64 LE entry count, then per entry the
  /// key components as u64 LE (two's complement) followed by the count as a
  /// u32 LE byte length and a big-endian magnitude.
  void write(std::ostream& out) const;
  static RepresentationTable read(std::istream& in);

  static std::size_t bytes_per_entry(int degree) noexcept {
    return sizeof(std::int64_t) * static_cast<std::size_t>(degree) +
           sizeof(std::uint64_t);
  }

  friend bool operator==(const RepresentationTable&,
                         const RepresentationTable&) = default;

 private:
  int degree_;
  std::vector<std::int64_t> keys_;
  std::vector<std::uint64_t> counts_;
};

/// Table of the concatenated tuples: r_{a+b}(v) = sum over u+w=v of
/// r_a(u) r_b(w). Callers guarantee the product counts fit in 64 bits.
RepresentationTable convolve(const RepresentationTable& lhs,
                             const RepresentationTable& rhs,
                             const ComputeOptions& options = {});

/// Sum over v of (r_a * r_b)(v)^2 without materialising the convolution.
ExactCount convolution_sum_of_squares(const RepresentationTable& lhs,
                                      const RepresentationTable& rhs,
                                      const ComputeOptions& options = {});

}  // namespace vmvt

#endif  // VMVT_REPRESENTATION_TABLE_HPP
