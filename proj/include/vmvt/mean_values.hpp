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

#ifndef VMVT_MEAN_VALUES_HPP
#define VMVT_MEAN_VALUES_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "vmvt/exact.hpp"
#include "vmvt/options.hpp"
#include "vmvt/representation_table.hpp"

namespace vmvt {

/// A Vinogradov system: s variables per side, degree k, box [1, X].
struct SystemParams {
  int s = 1;
  int k = 1;
  std::int64_t X = 1;

  void validate() const;
};

enum class Strategy { brute_force, meet_in_middle };

Strategy parse_strategy(std::string_view name);
std::string_view to_string(Strategy strategy) noexcept;

/// Number of pairs (x, y) of s-tuples drawn from `values` with equal power
/// sums of every order 1..k. Values may be negative or repeated.
ExactCount count_solutions(std::span<const std::int64_t> values, int s, int k,
                           Strategy strategy = Strategy::meet_in_middle,
                           const ComputeOptions& options = {});

/// Representation table of ordered m-tuples over `values`, built by
/// balanced convolution of smaller tables.
RepresentationTable build_representation_table(
    std::span<const std::int64_t> values, int m, int k,
    const ComputeOptions& options = {});

/// J_{s,k}(X): solutions of x_1^j+...+x_s^j = y_1^j+...+y_s^j (1<=j<=k)
/// with all variables in [1, X].
ExactCount count_mean_value(const SystemParams& params,
                            Strategy strategy = Strategy::meet_in_middle,
                            const ComputeOptions& options = {});

/// Meet-in-the-middle count that stores the larger half table at
/// `checkpoint` and reuses it on later runs with the same parameters.
ExactCount count_mean_value_checkpointed(const SystemParams& params,
                                         const std::filesystem::path& checkpoint,
                                         const ComputeOptions& options = {});

/// T_s(X): pairs (x, y) in [1, X]^{2s} where y is a rearrangement of x.
ExactCount count_diagonal(int s, std::int64_t X);

/// ceil(X^{2s} / prod_j (2 s X^j + 1)).
ExactCount counting_lower_bound(const SystemParams& params);

struct LowerBoundCertificate {
  ExactCount lower_bound;
  ExactCount mean_value;
  ExactCount diagonal;
};

/// Throws invariant_violation if J falls below either lower bound.
LowerBoundCertificate lower_bound_certificate(const SystemParams& params,
                                              const ComputeOptions& options = {});

/// True iff J_{s,k}(X) = T_s(X) for every s in [1, k].
bool check_newton_identity(int k, std::int64_t X,
                           const ComputeOptions& options = {});

struct ProgressionCount {
  ExactCount restricted;  // variables in [1, X] congruent to xi mod q
  ExactCount contracted;  // variables z with (1-xi)/q <= z <= (X-xi)/q
  std::int64_t z_min;
  std::int64_t z_max;
};

/// Solutions restricted to an arithmetic progression, counted directly and
/// on the contracted range; throws invariant_violation if they differ.
ProgressionCount count_in_progression(const SystemParams& params,
                                      std::int64_t q, std::int64_t xi,
                                      const ComputeOptions& options = {});

double least_squares_slope(std::span<const double> x, std::span<const double> y);

/// Least-squares slope of log J_{s,k}(X) against log X.
double fit_empirical_exponent(int s, int k, std::span<const std::int64_t> X_list,
                              const ComputeOptions& options = {});

std::vector<std::int64_t> integer_range(std::int64_t first, std::int64_t last);

}  // namespace vmvt

#endif  // VMVT_MEAN_VALUES_HPP
