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

#ifndef VMVT_EXPONENTS_HPP
#define VMVT_EXPONENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vmvt/exact.hpp"
#include "vmvt/options.hpp"

namespace vmvt {

enum class ExponentKind { permissible, conjectured, threshold };

std::string_view to_string(ExponentKind kind) noexcept;

/// One exponent, constant or threshold from the mean-value literature.
/// `literal` marks values transcribed from a published table (as opposed to
/// evaluated from a formula); `asymptotic_only` marks leading-order forms
/// valid for large k whose lower-order terms are unknown.
struct ExponentRecord {
  std::string source;
  std::optional<int> k;
  std::optional<double> s;
  double value = 0.0;
  ExponentKind kind = ExponentKind::permissible;
  std::string citation;
  bool literal = false;
  bool asymptotic_only = false;
};

/// Classical permissible exponent (1/2) k^2 (1 - 1/k)^r, valid for s >= r k.
double classical_delta(int s, int k, int r);

/// max(s, 2s - k(k+1)/2).
double conjectured_exponent(double s, int k);

/// Real root of 6 xi^3 + 3 xi^2 - 1, by bisection.
double gtilde_cubic_root();
/// (5 + 6 xi - 3 xi^2) / (2 + 6 xi) at that root.
double gtilde_constant();

/// Large-k bound on C(alpha k^2) for alpha in [5/8, 1]; empty outside.
std::optional<double> c_alpha_bound(double alpha);

std::vector<ExponentRecord> ledger(int k);

/// CSV with columns source,k,s,kind,value,citation.
void write_ledger_csv(std::ostream& out, std::span<const ExponentRecord> records);

struct J32Constants {
  double c1;  // 18 / pi^2
  double c2;  // (3/pi^2)(12 gamma - 6 zeta'(2)/zeta(2) - 5)
};

J32Constants j32_constants();

struct J32Row {
  std::int64_t X;
  ExactCount exact;
  double predicted;
  double relative_error;  // (exact - predicted) / predicted
  bool in_range;          // false for heights too small for the asymptotic
};

inline constexpr std::int64_t kJ32AsymptoticFloor = 16;

std::vector<J32Row> compare_asymptotic_j32(std::span<const std::int64_t> X_list,
                                           const ComputeOptions& options = {});

}  // namespace vmvt

#endif  // VMVT_EXPONENTS_HPP
