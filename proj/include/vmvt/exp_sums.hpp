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

#ifndef VMVT_EXP_SUMS_HPP
#define VMVT_EXP_SUMS_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vmvt/detail/fixed_phase.hpp"
#include "vmvt/options.hpp"

namespace vmvt {

using ComplexValue = std::complex<double>;

/// Coefficients (alpha_1, ..., alpha_k) of a polynomial phase, each reduced
/// modulo 1. The exact 128-bit reduction is kept alongside the doubles.
class PhaseVector {
 public:
  explicit PhaseVector(std::vector<double> alpha);

  std::size_t degree() const noexcept { return alpha_.size(); }
  std::span<const double> coefficients() const noexcept { return alpha_; }
  std::span<const detail::Phase> fixed() const noexcept { return fixed_; }

 private:
  std::vector<double> alpha_;
  std::vector<detail::Phase> fixed_;
};

/// Rational phase (a_1/q, ..., a_k/q); evaluated with exact modular
/// arithmetic on the numerators.
struct RationalPhase {
  std::vector<std::int64_t> numerators;
  std::uint64_t denominator = 1;
};

/// f_k(alpha; X) = sum_{x=1..X} e(alpha_1 x + ... + alpha_k x^k).
ComplexValue eval_f(const PhaseVector& alpha, std::int64_t X,
                    const ComputeOptions& options = {});
ComplexValue eval_f(const RationalPhase& alpha, std::int64_t X,
                    const ComputeOptions& options = {});

/// g_k(beta; X) = sum_{x=1..X} e(beta x^k).
ComplexValue eval_g(double beta, int k, std::int64_t X,
                    const ComputeOptions& options = {});

struct RationalApprox {
  std::int64_t a = 0;
  std::uint64_t q = 1;
  double err = 0.0;  // |q alpha - a|
};

/// The continued-fraction convergent a/q of largest denominator q <= Q;
/// satisfies gcd(a, q) = 1 and |q alpha - a| < 1/Q. The double alpha is
/// expanded exactly as the dyadic rational it represents.
RationalApprox dirichlet_approx(double alpha, std::uint64_t Q);

/// True iff no a/q with q <= X has |q beta - a| <= X^{1-k}.
bool is_minor_arc(double beta, int k, std::int64_t X);

struct BoundEnvelope {
  std::string name;
  double value = 0.0;
  double epsilon = 0.0;
};

/// X^{1+eps} (1/q + 1/X + q X^{-k})^{2^{1-k}}.
BoundEnvelope weyl_envelope(std::uint64_t q, int k, std::int64_t X,
                            double epsilon = 0.0);

/// X^{1+eps} (1/q + 1/X + q X^{-j})^{sigma(k)}, sigma(k) = 1/(2(k-1)(k-2)).
BoundEnvelope vinogradov_envelope(std::uint64_t q, int j, int k, std::int64_t X,
                                  double epsilon = 0.0);

double vinogradov_sigma(int k);

struct EquidistributionMin {
  std::int64_t n_star = 0;
  double value = 0.0;
};

/// Exhaustive scan of min_{1<=n<=N} ||alpha_1 n + ... + alpha_k n^k||. Ties
/// resolve to the smallest n.
EquidistributionMin equidistribution_min(const PhaseVector& alpha, std::int64_t N,
                                         const ComputeOptions& options = {});

inline constexpr std::int64_t kMaxEquidistributionN = 100'000'000;

}  // namespace vmvt

#endif  // VMVT_EXP_SUMS_HPP
