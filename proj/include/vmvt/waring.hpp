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

#ifndef VMVT_WARING_HPP
#define VMVT_WARING_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "vmvt/exact.hpp"
#include "vmvt/options.hpp"

namespace vmvt {

/// R_{s,k}(n): ordered representations of n as a sum of s positive kth powers.
struct WaringInstance {
  int s = 1;
  int k = 2;
  std::int64_t n = 1;

  void validate() const;
};

ExactCount count_representations(const WaringInstance& inst,
                                 const ComputeOptions& options = {});

/// R_{s,k}(n) for every n in `n_list` from one layered table.
std::vector<ExactCount> count_representations(int s, int k,
                                              std::span<const std::int64_t> n_list,
                                              const ComputeOptions& options = {});

/// sum_{r=1..q} e(a r^k / q), with a r^k reduced mod q exactly.
std::complex<double> gauss_sum(std::uint64_t q, std::int64_t a, int k);

struct SingularSeriesPartial {
  std::uint64_t Q = 1;
  double value = 0.0;
  double imag_residue = 0.0;
  std::vector<double> terms;  // real part of the q-th term, q = 1..Q
  double tail_estimate = 0.0;  // integral of q^{1-s/k} beyond Q
};

/// Truncated singular series; precomputes the normalised Gauss sums once so
/// that many n can be evaluated cheaply.
class SingularSeries {
 public:
  SingularSeries(int s, int k, std::uint64_t Q);

  /// Throws invariant_violation if the imaginary parts fail to cancel.
  SingularSeriesPartial at(std::int64_t n) const;

 private:
  struct Weight {
    std::uint64_t q;
    std::uint64_t a;
    std::complex<double> value;  // (q^{-1} gauss_sum(q, a, k))^s
  };
  int s_;
  int k_;
  std::uint64_t Q_;
  std::vector<Weight> weights_;
};

SingularSeriesPartial singular_series(const WaringInstance& inst, std::uint64_t Q);

/// Gamma(1+1/k)^s / Gamma(s/k) n^{s/k-1}.
double main_term(const WaringInstance& inst);

struct AsymptoticRow {
  std::int64_t n;
  ExactCount R;
  double predicted;
  double ratio;
};

/// Exact R_{s,k}(n) against main_term * singular series for each n.
/// Requires s > k.
std::vector<AsymptoticRow> asymptotic_report(int s, int k, std::uint64_t Q,
                                             std::span<const std::int64_t> n_list,
                                             const ComputeOptions& options = {});

}  // namespace vmvt

#endif  // VMVT_WARING_HPP
