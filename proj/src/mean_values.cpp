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

#include "vmvt/mean_values.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>

#include "vmvt/detail/parallel.hpp"
#include "vmvt/error.hpp"

namespace vmvt {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

std::int64_t max_abs(std::span<const std::int64_t> values) {
  std::int64_t m = 0;
  for (const auto v : values) m = std::max(m, v < 0 ? -v : v);
  return m;
}

ExactCount count_brute_force(std::span<const std::int64_t> values, int s,
                             int k, const ComputeOptions& options) {
  const ExactCount tuples = exact_pow(static_cast<std::int64_t>(values.size()),
                                      static_cast<unsigned>(s));
  if (tuples * (sizeof(std::int64_t) * static_cast<unsigned>(k)) >
      options.memory_budget_bytes)
    fail(ErrorKind::resource_exceeded,
         "brute force power-sum array exceeds the memory budget");
  const auto n = tuples.convert_to<std::size_t>();
  const auto width = static_cast<std::size_t>(k);

  // Power-sum vectors of every ordered s-tuple, in odometer order.
  std::vector<std::int64_t> sums(n * width);
  std::vector<std::size_t> digits(static_cast<std::size_t>(s), 0);
  std::vector<std::int64_t> tuple(static_cast<std::size_t>(s), values[0]);
  for (std::size_t t = 0; t < n; ++t) {
    const auto key = power_sums(tuple, k);
    std::copy(key.begin(), key.end(), sums.begin() + static_cast<std::ptrdiff_t>(t * width));
    for (std::size_t d = 0; d < digits.size(); ++d) {
      if (++digits[d] < values.size()) {
        tuple[d] = values[digits[d]];
        break;
      }
      digits[d] = 0;
      tuple[d] = values[0];
    }
  }

  const std::size_t block = 256;
  const std::size_t blocks = (n + block - 1) / block;
  std::vector<std::uint64_t> partial(blocks, 0);
  detail::ProgressTicker ticker(options, "brute force", blocks);
  detail::parallel_for(blocks, resolve_threads(options), [&](std::size_t b) {
    std::uint64_t found = 0;
    const std::size_t end = std::min(n, (b + 1) * block);
    for (std::size_t i = b * block; i < end; ++i) {
      const std::int64_t* x = sums.data() + i * width;
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t* y = sums.data() + j * width;
        if (std::equal(x, x + width, y)) ++found;
      }
    }
    partial[b] = found;
    ticker.advance();
  });
  ExactCount total = 0;
  for (const auto p : partial) total += p;
  return total;
}

}  // namespace

void SystemParams::validate() const {
  require(s >= 1, "s must be at least 1");
  require(k >= 1, "k must be at least 1");
  require(X >= 1, "X must be at least 1");
}

Strategy parse_strategy(std::string_view name) {
  if (name == "brute_force" || name == "brute") return Strategy::brute_force;
  if (name == "meet_in_middle" || name == "mim") return Strategy::meet_in_middle;
  fail(ErrorKind::invalid_argument, "unknown strategy: " + std::string(name));
}

std::string_view to_string(Strategy strategy) noexcept {
  return strategy == Strategy::brute_force ? "brute_force" : "meet_in_middle";
}

std::vector<std::int64_t> integer_range(std::int64_t first, std::int64_t last) {
  std::vector<std::int64_t> out;
  if (last >= first) out.reserve(static_cast<std::size_t>(last - first + 1));
  for (std::int64_t v = first; v <= last; ++v) out.push_back(v);
  return out;
}

RepresentationTable build_representation_table(
    std::span<const std::int64_t> values, int m, int k,
    const ComputeOptions& options) {
  require(m >= 0, "tuple length must be nonnegative");
  require(k >= 1, "k must be at least 1");
  if (m == 0) return RepresentationTable::unit(k);
  require_power_sums_fit(max_abs(values), m, k);
  if (m == 1) return RepresentationTable::singles(values, k);
  const auto left = build_representation_table(values, (m + 1) / 2, k, options);
  const auto right = build_representation_table(values, m / 2, k, options);
  return convolve(left, right, options);
}

ExactCount count_solutions(std::span<const std::int64_t> values, int s, int k,
                           Strategy strategy, const ComputeOptions& options) {
  require(s >= 1, "s must be at least 1");
  require(k >= 1, "k must be at least 1");
  if (values.empty()) return 0;
  require_power_sums_fit(max_abs(values), s, k);
  if (strategy == Strategy::brute_force)
    return count_brute_force(values, s, k, options);
  const auto left = build_representation_table(values, (s + 1) / 2, k, options);
  if (s % 2 == 0) return convolution_sum_of_squares(left, left, options);
  const auto right = build_representation_table(values, s / 2, k, options);
  return convolution_sum_of_squares(left, right, options);
}

ExactCount count_mean_value(const SystemParams& params, Strategy strategy,
                            const ComputeOptions& options) {
  params.validate();
  const auto values = integer_range(1, params.X);
  return count_solutions(values, params.s, params.k, strategy, options);
}

ExactCount count_mean_value_checkpointed(const SystemParams& params,
                                         const std::filesystem::path& checkpoint,
                                         const ComputeOptions& options) {
  params.validate();
  const auto values = integer_range(1, params.X);
  require_power_sums_fit(params.X, params.s, params.k);
  const int half = (params.s + 1) / 2;
  const std::string header = "vmvt-table " + std::to_string(params.s) + ' ' +
                             std::to_string(params.k) + ' ' +
                             std::to_string(params.X) + ' ' + std::to_string(half);
  std::optional<RepresentationTable> left;
  if (std::ifstream in(checkpoint, std::ios::binary); in) {
    std::string line;
    std::getline(in, line);
    if (line != header)
      fail(ErrorKind::invalid_argument,
           "checkpoint " + checkpoint.string() + " was written for different parameters");
    left = RepresentationTable::read(in);
  } else {
    left = build_representation_table(values, half, params.k, options);
    std::ofstream out(checkpoint, std::ios::binary);
    if (!out) fail(ErrorKind::invalid_argument, "cannot write checkpoint " + checkpoint.string());
    out << header << '\n';
    left->write(out);
    if (!out) fail(ErrorKind::resource_exceeded, "failed writing checkpoint " + checkpoint.string());
  }
  if (params.s % 2 == 0) return convolution_sum_of_squares(*left, *left, options);
  const auto right = build_representation_table(values, params.s / 2, params.k, options);
  return convolution_sum_of_squares(*left, right, options);
}

ExactCount count_diagonal(int s, std::int64_t X) {
  require(s >= 1, "s must be at least 1");
  require(X >= 1, "X must be at least 1");
  const auto n = static_cast<std::size_t>(s);
  // binom_sq[m][c] = C(m, c)^2
  std::vector<std::vector<ExactCount>> binom_sq(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    binom_sq[m].assign(m + 1, 1);
    ExactCount c = 1;
    for (std::size_t j = 1; j <= m; ++j) {
      c = c * (m - j + 1) / j;
      binom_sq[m][j] = c * c;
    }
  }
  // weight[m]: sum over multisets of size m drawn from the values seen so
  // far of (number of orderings)^2.
  std::vector<ExactCount> weight(n + 1, 0);
  weight[0] = 1;
  for (std::int64_t value = 1; value <= X; ++value) {
    for (std::size_t total = n; total >= 1; --total) {
      ExactCount acc = weight[total];
      for (std::size_t c = 1; c <= total; ++c)
        acc += weight[total - c] * binom_sq[total][c];
      weight[total] = acc;
    }
  }
  return weight[n];
}

ExactCount counting_lower_bound(const SystemParams& params) {
  params.validate();
  const ExactCount numerator = exact_pow(params.X, 2 * static_cast<unsigned>(params.s));
  ExactCount denominator = 1;
  for (int j = 1; j <= params.k; ++j)
    denominator *= 2 * params.s * exact_pow(params.X, static_cast<unsigned>(j)) + 1;
  return (numerator + denominator - 1) / denominator;
}

LowerBoundCertificate lower_bound_certificate(const SystemParams& params,
                                              const ComputeOptions& options) {
  LowerBoundCertificate cert{counting_lower_bound(params),
                             count_mean_value(params, Strategy::meet_in_middle, options),
                             count_diagonal(params.s, params.X)};
  if (cert.mean_value < cert.lower_bound || cert.mean_value < cert.diagonal)
    fail(ErrorKind::invariant_violation,
         "mean value below a proven lower bound: J=" + to_decimal(cert.mean_value));
  return cert;
}

bool check_newton_identity(int k, std::int64_t X, const ComputeOptions& options) {
  require(k >= 1, "k must be at least 1");
  require(X >= 1, "X must be at least 1");
  for (int s = 1; s <= k; ++s) {
    if (count_mean_value({s, k, X}, Strategy::meet_in_middle, options) !=
        count_diagonal(s, X))
      return false;
  }
  return true;
}

ProgressionCount count_in_progression(const SystemParams& params,
                                      std::int64_t q, std::int64_t xi,
                                      const ComputeOptions& options) {
  params.validate();
  require(q >= 1, "q must be at least 1");
  std::vector<std::int64_t> restricted;
  for (std::int64_t x = 1; x <= params.X; ++x)
    if (floor_div(x - xi, q) * q == x - xi) restricted.push_back(x);

  ProgressionCount out;
  out.z_min = ceil_div(1 - xi, q);
  out.z_max = floor_div(params.X - xi, q);
  const auto contracted = integer_range(out.z_min, out.z_max);
  out.restricted = count_solutions(restricted, params.s, params.k,
                                   Strategy::meet_in_middle, options);
  out.contracted = count_solutions(contracted, params.s, params.k,
                                   Strategy::meet_in_middle, options);
  if (out.restricted != out.contracted)
    fail(ErrorKind::invariant_violation,
         "translation-dilation invariance violated: " + to_decimal(out.restricted) +
             " vs " + to_decimal(out.contracted));
  return out;
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, "need at least two points");
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  require(sxx > 0, "abscissae must not all coincide");
  return sxy / sxx;
}

double fit_empirical_exponent(int s, int k, std::span<const std::int64_t> X_list,
                              const ComputeOptions& options) {
  require(X_list.size() >= 3, "need at least three heights");
  require(std::is_sorted(X_list.begin(), X_list.end()) &&
              std::adjacent_find(X_list.begin(), X_list.end()) == X_list.end(),
          "heights must be strictly ascending");
  std::vector<double> lx, lj;
  for (const auto X : X_list) {
    const ExactCount J = count_mean_value({s, k, X}, Strategy::meet_in_middle, options);
    lx.push_back(std::log(static_cast<double>(X)));
    lj.push_back(std::log(to_double(J)));
  }
  return least_squares_slope(lx, lj);
}

}  // namespace vmvt
