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

#ifndef VMVT_CONGRUENCES_HPP
#define VMVT_CONGRUENCES_HPP

#include <cstdint>
#include <vector>

#include "vmvt/exact.hpp"
#include "vmvt/options.hpp"

namespace vmvt {

/// Fixed data of the congruences
///   sum_i (x_i - eta)^j == sum_i (y_i - eta)^j  (mod p^j),  1 <= j <= k,
/// counted over k-tuples x mod p^k with pairwise distinct residues mod p.
struct CongruenceInstance {
  int k = 1;
  std::uint64_t p = 3;
  std::uint64_t eta = 0;
  std::vector<std::int64_t> y;
};

/// As above but with moduli p^{jk}, x mod p^{k^2}, x == xi (mod p) and the x_i
/// pairwise distinct mod p^2.
struct DeepCongruenceInstance {
  int k = 1;
  std::uint64_t p = 3;
  std::uint64_t xi = 0;
  std::uint64_t eta = 0;
  std::vector<std::int64_t> y;
};

struct LiftCount {
  ExactCount count;
  ExactCount bound;
};

bool is_prime(std::uint64_t n) noexcept;

/// The Jacobian of the system is k! times a Vandermonde determinant, so it is
/// a unit modulo p exactly when p > k. Only then do the bounds below hold.
bool hensel_applies(int k, std::uint64_t p) noexcept;

/// k! p^{k(k-1)/2}
ExactCount hensel_bound(int k, std::uint64_t p);
/// k! p^{k * k(k-1)/2 + k(k-1)/2}
ExactCount deep_hensel_bound(int k, std::uint64_t p);

/// Solutions of the shallow system. Throws invariant_violation if the count
/// exceeds hensel_bound(k, p) while hensel_applies(k, p).
LiftCount count_congruence_solutions(const CongruenceInstance& inst,
                                     const ComputeOptions& options = {});

/// Solutions of the first `equations` congruences only (1 <= equations <= k),
/// still counted modulo p^k; no bound is asserted.
ExactCount count_truncated_congruence_solutions(const CongruenceInstance& inst,
                                                int equations,
                                                const ComputeOptions& options = {});

/// Solutions of the deep system. Throws invariant_violation if the count
/// exceeds deep_hensel_bound(k, p) while hensel_applies(k, p);
/// resource_exceeded for k >= 3 with p > 3.
LiftCount count_deep_congruence_solutions(const DeepCongruenceInstance& inst,
                                          const ComputeOptions& options = {});

inline constexpr std::uint64_t kMaxShallowModulus = 10'000'000;

}  // namespace vmvt

#endif  // VMVT_CONGRUENCES_HPP
