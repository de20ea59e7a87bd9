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

#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "support.hpp"
#include "vmvt/special_functions.hpp"
#include "vmvt/waring.hpp"

using namespace vmvt;
using vmvt::testing::thrown_kind;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Histogram of sums of s positive k-th powers up to `limit`, by recursion.
void enumerate(int s, int k, std::int64_t limit, std::int64_t partial,
               std::vector<std::uint64_t>& hist) {
  if (s == 0) {
    ++hist[static_cast<std::size_t>(partial)];
    return;
  }
  for (std::int64_t x = 1; partial + ipow(x, k) <= limit; ++x)
    enumerate(s - 1, k, limit, partial + ipow(x, k), hist);
}

}  // namespace

TEST_CASE("small representation counts") {
  CHECK(count_representations({1, 2, 49}) == 1);
  CHECK(count_representations({1, 2, 50}) == 0);
  CHECK(count_representations({2, 2, 25}) == 2);
  CHECK(count_representations({8, 3, 1000}) == 29401);
  CHECK(count_representations({8, 3, 100000}) == 74017272);
}

TEST_CASE("dynamic programming matches recursive enumeration") {
  const std::int64_t limit = 500;
  std::vector<std::int64_t> all;
  for (std::int64_t n = 1; n <= limit; ++n) all.push_back(n);
  for (int s = 1; s <= 4; ++s)
    for (int k = 2; k <= 3; ++k) {
      std::vector<std::uint64_t> hist(static_cast<std::size_t>(limit) + 1, 0);
      enumerate(s, k, limit, 0, hist);
      const auto counts = count_representations(s, k, all);
      for (std::size_t i = 0; i < all.size(); ++i) {
        CAPTURE(s);
        CAPTURE(k);
        CAPTURE(all[i]);
        CHECK(counts[i] == hist[static_cast<std::size_t>(all[i])]);
      }
    }
}

TEST_CASE("partial sums count tuples in a ball") {
  const std::int64_t N = 10000;
  std::vector<std::int64_t> all;
  for (std::int64_t n = 1; n <= N; ++n) all.push_back(n);
  const auto counts = count_representations(3, 2, all);
  ExactCount total = 0;
  for (const auto& c : counts) total += c;
  std::uint64_t ball = 0;
  for (std::int64_t a = 1; a * a < N; ++a)
    for (std::int64_t b = 1; a * a + b * b < N; ++b) {
      const std::int64_t rest = N - a * a - b * b;
      auto c = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
      while (c * c > rest) --c;
      while ((c + 1) * (c + 1) <= rest) ++c;
      ball += static_cast<std::uint64_t>(c);
    }
  CHECK(total == ball);
}

TEST_CASE("counts beyond 64 bits") {
  CHECK(to_decimal(count_representations({30, 2, 300})) == "244379903798197462060");
  CHECK(to_decimal(count_representations({60, 2, 1000})) ==
        "153113475229318307839292082628676931712406460740448");
}

TEST_CASE("thread count does not change counts") {
  const std::vector<std::int64_t> n{5000, 12345, 20000};
  const auto one = count_representations(6, 3, n, {.threads = 1});
  CHECK(count_representations(6, 3, n, {.threads = 3}) == one);
  CHECK(count_representations(6, 3, n, {.threads = 8}) == one);
}

TEST_CASE("complete exponential sums") {
  CHECK(std::abs(gauss_sum(1, 0, 2) - std::complex<double>(1, 0)) < 1e-12);
  CHECK(std::abs(gauss_sum(2, 1, 2)) < 1e-12);
  CHECK(std::abs(gauss_sum(5, 1, 2)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
  for (std::uint64_t q = 1; q <= 40; ++q)
    for (int k = 2; k <= 4; ++k) {
      for (std::int64_t a = 0; a < static_cast<std::int64_t>(q); ++a)
        CHECK(std::abs(gauss_sum(q, a, k)) <= static_cast<double>(q) + 1e-9);
      const auto full = gauss_sum(q, static_cast<std::int64_t>(3 * q), k);
      CHECK(full.real() == doctest::Approx(static_cast<double>(q)));
      CHECK(std::abs(full.imag()) < 1e-9);
    }
}

TEST_CASE("singular series") {
  CHECK(singular_series({8, 3, 12345}, 1).value == 1.0);
  const double a = singular_series({8, 3, 5}, 100).value;
  const double b = singular_series({8, 3, 5}, 200).value;
  CHECK(std::abs(a - b) < 0.02);
  for (const std::int64_t n : {4, 7, 8, 1001, 1234, 5000, 99999}) {
    const auto part = singular_series({5, 2, n}, 200);
    CHECK(part.value >= 0.5);
    CHECK(part.value <= 3.0);
    CHECK(part.imag_residue < 1e-9);
    CHECK(part.terms.size() == 200);
  }
  const SingularSeries series(8, 3, 50);
  CHECK(series.at(777).value == singular_series({8, 3, 777}, 50).value);
}

TEST_CASE("main term") {
  CHECK(main_term({2, 2, 100}) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-12));
  for (int k = 2; k <= 5; ++k)
    CHECK(main_term({k, k, 999}) == doctest::Approx(std::pow(std::tgamma(1 + 1.0 / k), k)));
  CHECK(main_term({8, 3, 1'000'000}) == doctest::Approx(2687311276.43).epsilon(1e-10));
  CHECK(main_term({8, 3, 1'000'000}) ==
        doctest::Approx(std::pow(std::tgamma(4.0 / 3), 8) / std::tgamma(8.0 / 3) * 1e10));
}

TEST_CASE("gamma function") {
  for (double x : {0.5, 1.0, 4.0 / 3, 2.5, 8.0 / 3, 7.25, 30.0}) {
    CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
    CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
  }
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("asymptotic report") {
  const std::vector<std::int64_t> n{20000, 40000};
  const auto rows = asymptotic_report(8, 3, 50, n);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.ratio == doctest::Approx(to_double(r.R) / r.predicted));
    CHECK(r.predicted ==
          doctest::Approx(main_term({8, 3, r.n}) * singular_series({8, 3, r.n}, 50).value));
  }
  CHECK(asymptotic_report(8, 3, 50, {}).empty());
  CHECK(thrown_kind([&] { asymptotic_report(3, 3, 50, n); }) == ErrorKind::invalid_argument);
  CHECK(thrown_kind([&] { asymptotic_report(1, 2, 50, n); }) == ErrorKind::invalid_argument);
}

TEST_CASE("invalid instances") {
  CHECK(thrown_kind([] { count_representations({0, 2, 5}); }) == ErrorKind::invalid_argument);
  CHECK(thrown_kind([] { count_representations({2, 1, 5}); }) == ErrorKind::invalid_argument);
  CHECK(thrown_kind([] { count_representations({2, 2, -1}); }) == ErrorKind::invalid_argument);
  CHECK(thrown_kind([] { gauss_sum(0, 1, 2); }) == ErrorKind::invalid_argument);
}
