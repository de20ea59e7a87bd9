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

#ifndef VMVT_SPECIAL_FUNCTIONS_HPP
#define VMVT_SPECIAL_FUNCTIONS_HPP

#include <cstdint>

namespace vmvt {

/// log Gamma(x) for x > 0 via upward shift and the Stirling series.
double log_gamma(double x);
double gamma_fn(double x);

/// Euler's constant from H_n - log n with Euler-Maclaurin correction.
double euler_gamma();
/// Euler's constant by the Brent-McMillan Bessel-function formula.
double euler_gamma_brent_mcmillan(int n = 8);

/// zeta'(2)/zeta(2) from -sum log(n)/n^2 with an Euler-Maclaurin tail.
double zeta_log_derivative_at_2();
/// The same constant as -sum Lambda(n)/n^2 over n <= limit, with the tail
/// beyond the sieve estimated by partial summation against psi(limit).
double zeta_log_derivative_at_2_von_mangoldt(std::int64_t limit = 10'000'000);

}  // namespace vmvt

#endif  // VMVT_SPECIAL_FUNCTIONS_HPP
