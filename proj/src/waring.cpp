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

#include "vmvt/waring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "vmvt/detail/fixed_phase.hpp"
#include "vmvt/detail/parallel.hpp"
#include "vmvt/error.hpp"
#include "vmvt/special_functions.hpp"

namespace vmvt {
namespace {

struct CellOverflow {};

inline void add_to(std::uint64_t& cell, std::uint64_t v) {
  if (__builtin_add_overflow(cell, v, &cell)) throw CellOverflow{};
}
inline void add_to(ExactCount& cell, const ExactCount& v) { cell += v; }

std::vector<std::int64_t> kth_powers(int k, std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1;; ++x) {
    std::int64_t p = 1;
    bool over = false;
    for (int j = 0; j < k && !over; ++j) {
      if (p > limit / x) over = true; else p *= x;
    }
    if (over || p > limit) break;
    out.push_back(p);
  }
  return out;
}

// Number of ordered `layers`-tuples with sum of kth powers equal to t, for
// every t in [0, limit], followed by one more layer evaluated only at `points`.
template <class Cell>
std::vector<ExactCount> layered(int s, int k, std::int64_t limit,
                                std::span<const std::int64_t> points,
                                const ComputeOptions& options) {
  const auto powers = kth_powers(k, limit);
  const auto size = static_cast<std::size_t>(limit) + 1;
  std::vector<Cell> current(size, Cell(0));
  std::vector<Cell> next(size, Cell(0));
  current[0] = Cell(1);
  constexpr std::size_t chunk = std::size_t{1} << 16;
  const std::size_t chunks = (size + chunk - 1) / chunk;
  detail::ProgressTicker ticker(options, "waring layers",
                                chunks * static_cast<std::size_t>(s - 1));
  for (int layer = 1; layer < s; ++layer) {
    detail::parallel_for(chunks, resolve_threads(options), [&](std::size_t c) {
      const std::size_t end = std::min(size, (c + 1) * chunk);
      for (std::size_t t = c * chunk; t < end; ++t) {
        Cell acc(0);
        for (const auto p : powers) {
          if (static_cast<std::size_t>(p) > t) break;
          add_to(acc, current[t - static_cast<std::size_t>(p)]);
        }
        next[t] = std::move(acc);
      }
      ticker.advance();
    });
    std::swap(current, next);
  }
  std::vector<ExactCount> out;
  out.reserve(points.size());
  for (const auto n : points) {
    Cell acc(0);
    for (const auto p : powers) {
      if (p > n) break;
      add_to(acc, current[static_cast<std::size_t>(n - p)]);
    }
    out.emplace_back(acc);
  }
  return out;
}

}  // namespace

void WaringInstance::validate() const {
  require(s >= 1, "s must be at least 1");
  require(k >= 2, "k must be at least 2");
  require(n >= 1, "n must be at least 1");
}

std::vector<ExactCount> count_representations(int s, int k,
                                              std::span<const std::int64_t> n_list,
                                              const ComputeOptions& options) {
  require(s >= 1, "s must be at least 1");
  require(k >= 2, "k must be at least 2");
  if (n_list.empty()) return {};
  for (const auto n : n_list) require(n >= 1, "n must be at least 1");
  const std::int64_t limit = *std::max_element(n_list.begin(), n_list.end());
  const ExactCount need = ExactCount(limit + 1) * 2 * sizeof(std::uint64_t);
  if (need > options.memory_budget_bytes)
    fail(ErrorKind::resource_exceeded, "Waring table exceeds the memory budget");
  try {
    return layered<std::uint64_t>(s, k, limit, n_list, options);
  } catch (const CellOverflow&) {
    if (ExactCount(limit + 1) * 2 * sizeof(ExactCount) * 4 > options.memory_budget_bytes)
      fail(ErrorKind::resource_exceeded,
           "Waring table needs wide cells beyond the memory budget");
    return layered<ExactCount>(s, k, limit, n_list, options);
  }
}

ExactCount count_representations(const WaringInstance& inst,
                                 const ComputeOptions& options) {
  inst.validate();
  if (inst.n < inst.s) return 0;
  const std::int64_t n = inst.n;
  return count_representations(inst.s, inst.k, std::span(&n, 1), options).front();
}

std::complex<double> gauss_sum(std::uint64_t q, std::int64_t a, int k) {
  require(q >= 1 && q <= (std::uint64_t{1} << 62), "q out of range");
  require(k >= 1, "k must be at least 1");
  const u128 m = q;
  const std::int64_t ar = a % static_cast<std::int64_t>(q);
  const u128 am = static_cast<u128>(ar < 0 ? ar + static_cast<std::int64_t>(q) : ar);
  detail::CompensatedComplexSum sum;
  for (std::uint64_t r = 1; r <= q; ++r) {
    u128 v = am;
    for (int j = 0; j < k; ++j) v = v * (r % m) % m;
    const double turns = 2 * v > m ? -static_cast<double>(m - v) / static_cast<double>(q)
                                   : static_cast<double>(v) / static_cast<double>(q);
    sum.add(detail::unit_root(turns));
  }
  return sum.value();
}

SingularSeries::SingularSeries(int s, int k, std::uint64_t Q) : s_(s), k_(k), Q_(Q) {
  require(s >= 1 && k >= 1 && Q >= 1, "s, k, Q must be positive");
  for (std::uint64_t q = 1; q <= Q; ++q) {
    for (std::uint64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const std::complex<double> g =
          gauss_sum(q, static_cast<std::int64_t>(a), k) / static_cast<double>(q);
      std::complex<double> w = 1.0;
      for (int i = 0; i < s; ++i) w *= g;
      weights_.push_back({q, a, w});
    }
  }
}

SingularSeriesPartial SingularSeries::at(std::int64_t n) const {
  SingularSeriesPartial out;
  out.Q = Q_;
  out.terms.assign(Q_, 0.0);
  detail::CompensatedSum re, im;
  std::size_t i = 0;
  for (std::uint64_t q = 1; q <= Q_; ++q) {
    detail::CompensatedComplexSum term;
    const std::int64_t nq = n % static_cast<std::int64_t>(q);
    const u128 nr = static_cast<u128>(nq < 0 ? nq + static_cast<std::int64_t>(q) : nq);
    for (; i < weights_.size() && weights_[i].q == q; ++i) {
      const u128 v = nr * weights_[i].a % q;  // n a mod q
      term.add(weights_[i].value *
               detail::unit_root(-static_cast<double>(v) / static_cast<double>(q)));
    }
    const auto t = term.value();
    out.terms[q - 1] = t.real();
    re.add(t.real());
    im.add(t.imag());
  }
  out.value = re.value();
  out.imag_residue = std::fabs(im.value());
  if (out.imag_residue > 1e-9)
    fail(ErrorKind::invariant_violation,
         "singular series imaginary residue " + std::to_string(out.imag_residue));
  const double decay = static_cast<double>(s_) / k_ - 2.0;
  out.tail_estimate = decay > 0
                          ? std::pow(static_cast<double>(Q_), -decay) / decay
                          : std::numeric_limits<double>::infinity();
  return out;
}

SingularSeriesPartial singular_series(const WaringInstance& inst, std::uint64_t Q) {
  inst.validate();
  return SingularSeries(inst.s, inst.k, Q).at(inst.n);
}

double main_term(const WaringInstance& inst) {
  inst.validate();
  const double s = inst.s;
  const double k = inst.k;
  return std::exp(s * log_gamma(1 + 1 / k) - log_gamma(s / k) +
                  (s / k - 1) * std::log(static_cast<double>(inst.n)));
}

std::vector<AsymptoticRow> asymptotic_report(int s, int k, std::uint64_t Q,
                                             std::span<const std::int64_t> n_list,
                                             const ComputeOptions& options) {
  require(s > k, "asymptotic comparison needs s > k");
  require(k >= 2, "k must be at least 2");
  if (n_list.empty()) return {};
  const auto counts = count_representations(s, k, n_list, options);
  const SingularSeries series(s, k, Q);
  std::vector<AsymptoticRow> rows;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const WaringInstance inst{s, k, n_list[i]};
    const double predicted = main_term(inst) * series.at(n_list[i]).value;
    rows.push_back({n_list[i], counts[i], predicted, to_double(counts[i]) / predicted});
  }
  return rows;
}

}  // namespace vmvt
