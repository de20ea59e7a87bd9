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

#ifndef VMVT_EXACT_HPP
#define VMVT_EXACT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vmvt {

/// Arbitrary-precision count. Solution counts, bounds and certificates are
/// all carried in this type so no intermediate can wrap.
using ExactCount = boost::multiprecision::cpp_int;

using u128 = unsigned __int128;

inline ExactCount to_exact(u128 value) {
  ExactCount out = static_cast<std::uint64_t>(value >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(value);
  return out;
}

inline ExactCount exact_pow(std::int64_t base, unsigned exponent) {
  return boost::multiprecision::pow(ExactCount(base), exponent);
}

inline std::string to_decimal(const ExactCount& value) { return value.str(); }

inline double to_double(const ExactCount& value) {
  return value.convert_to<double>();
}

}  // namespace vmvt

#endif  // VMVT_EXACT_HPP
