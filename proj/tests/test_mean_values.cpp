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
#include <filesystem>
#include <vector>

#include "support.hpp"
#include "vmvt/mean_values.hpp"

using namespace vmvt;
using vmvt::testing::thrown_kind;

namespace {

// Naive count over all 2s-tuples, sharing no code with the library.
std::uint64_t naive_j(int s, int k, std::int64_t X) {
  const int n = 2 * s;
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), 1);
  std::uint64_t count = 0;
  while (true) {
    bool equal = true;
    for (int j = 1; j <= k && equal; ++j) {
      std::int64_t diff = 0;
      for (int i = 0; i < n; ++i) {
        std::int64_t p = 1;
        for (int e = 0; e < j; ++e) p *= v[static_cast<std::size_t>(i)];
        diff += i < s ? p : -p;
      }
      equal = diff == 0;
    }
    count += equal;
    int pos = 0;
    while (pos < n && ++v[static_cast<std::size_t>(pos)] > X) v[static_cast<std::size_t>(pos++)] = 1;
    if (pos == n) break;
  }
  return count;
}

ExactCount J(int s, int k, std::int64_t X, Strategy strategy = Strategy::meet_in_middle) {
  return count_mean_value({s, k, X}, strategy);
}

}  // namespace

TEST_CASE("known mean values") {
  CHECK(J(1, 2, 7) == 7);
  CHECK(J(2, 2, 4) == 28);
  CHECK(J(3, 2, 10) == 5788);
  CHECK(J(3, 2, 10, Strategy::brute_force) == 5788);
  CHECK(J(3, 2, 4) == 256);
  CHECK(J(3, 3, 20) == 44480);
  CHECK(J(3, 2, 20) == 56504);
  CHECK(J(2, 3, 20) == 780);
  CHECK(J(3, 2, 64) == 2413144);
}

TEST_CASE("both strategies agree with a naive count") {
  for (int s = 1; s <= 2; ++s)
    for (int k = 1; k <= 3; ++k)
      for (std::int64_t X = 1; X <= 6; ++X) {
        CAPTURE(s);
        CAPTURE(k);
        CAPTURE(X);
        const ExactCount expected = naive_j(s, k, X);
        CHECK(J(s, k, X, Strategy::brute_force) == expected);
        CHECK(J(s, k, X) == expected);
      }
}

TEST_CASE("meet in the middle equals brute force for s, k <= 3") {
  for (int s = 1; s <= 3; ++s)
    for (int k = 1; k <= 3; ++k)
      for (std::int64_t X : {1, 2, 7, 11}) CHECK(J(s, k, X) == J(s, k, X, Strategy::brute_force));
}

TEST_CASE("diagonal counts") {
  CHECK(count_diagonal(1, 5) == 5);
  CHECK(count_diagonal(2, 4) == 28);
  CHECK(count_diagonal(3, 2) == 20);
  CHECK(count_diagonal(3, 1) == 1);
}

TEST_CASE("counting lower bound") {
  CHECK(counting_lower_bound({3, 2, 4}) == 2);
  CHECK(counting_lower_bound({1, 1, 1}) == 1);
  CHECK(counting_lower_bound({2, 2, 4}) == 1);
  const auto c = lower_bound_certificate({3, 2, 4});
  CHECK(c.lower_bound == 2);
  CHECK(c.mean_value == 256);
  CHECK(lower_bound_certificate({2, 2, 4}).mean_value == 28);
}

TEST_CASE("exact lower bound inequality holds") {
  for (int s = 1; s <= 3; ++s)
    for (int k = 1; k <= 3; ++k)
      for (std::int64_t X : {1, 3, 8, 15}) {
        const ExactCount j = J(s, k, X);
        ExactCount product = 1;
        for (int e = 1; e <= k; ++e) product *= 2 * s * exact_pow(X, static_cast<unsigned>(e)) + 1;
        CHECK(exact_pow(X, static_cast<unsigned>(2 * s)) <= j * product);
        CHECK_NOTHROW(lower_bound_certificate({s, k, X}));
      }
}

TEST_CASE("Newton identity") {
  CHECK(check_newton_identity(2, 4));
  CHECK(check_newton_identity(3, 6));
  CHECK(check_newton_identity(4, 4));
  for (int k = 1; k <= 4; ++k)
    for (int s = 1; s <= k; ++s) CHECK(J(s, k, 9) == count_diagonal(s, 9));
  // Above the degree the diagonal no longer exhausts the solutions.
  CHECK(J(3, 2, 9) > count_diagonal(3, 9));
}

TEST_CASE("monotone in X and bounded below by the diagonal") {
  for (int s = 1; s <= 3; ++s)
    for (int k = 1; k <= 3; ++k) {
      ExactCount previous = 0;
      for (std::int64_t X = 1; X <= 12; ++X) {
        const ExactCount j = J(s, k, X);
        CHECK(previous <= j);
        CHECK(j >= count_diagonal(s, X));
        previous = j;
      }
    }
}

TEST_CASE("log convexity in s") {
  for (int k = 1; k <= 3; ++k)
    for (std::int64_t X : {3, 7, 12}) {
      const ExactCount j2 = J(2, k, X);
      CHECK(j2 * j2 <= J(1, k, X) * J(3, k, X));
    }
}

TEST_CASE("progressions") {
  const auto a = count_in_progression({2, 2, 9}, 3, 1);
  CHECK(a.restricted == 15);
  CHECK(a.contracted == 15);
  CHECK(a.z_min == 0);
  CHECK(a.z_max == 2);
  CHECK(count_in_progression({3, 2, 12}, 1, 0).restricted == J(3, 2, 12));
  CHECK(count_in_progression({1, 1, 10}, 2, 1).restricted == 5);
}

TEST_CASE("translation-dilation invariance") {
  for (std::int64_t q = 1; q <= 5; ++q)
    for (std::int64_t xi = -q; xi <= q; ++xi)
      for (std::int64_t X : {1, 7, 18, 30}) {
        CAPTURE(q);
        CAPTURE(xi);
        CAPTURE(X);
        const auto c = count_in_progression({2, 2, X}, q, xi);
        CHECK(c.restricted == c.contracted);
        const auto d = count_in_progression({3, 1, X}, q, xi);
        CHECK(d.restricted == d.contracted);
      }
}

TEST_CASE("empirical exponent") {
  const std::vector<std::int64_t> linear{10, 100, 1000};
  CHECK(fit_empirical_exponent(1, 1, linear) == doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<std::int64_t> xs{50, 100, 200};
  const double slope = fit_empirical_exponent(2, 2, xs);
  CHECK(slope >= 1.9);
  CHECK(slope <= 2.1);
  const std::vector<double> x{0, 1, 2}, y{1, 3, 5};
  CHECK(least_squares_slope(x, y) == doctest::Approx(2.0));
}

TEST_CASE("thread count does not change results") {
  const ExactCount one = count_mean_value({3, 2, 60}, Strategy::meet_in_middle, {.threads = 1});
  for (unsigned t : {2u, 4u, 8u}) {
    CHECK(count_mean_value({3, 2, 60}, Strategy::meet_in_middle, {.threads = t}) == one);
    CHECK(count_mean_value({2, 3, 25}, Strategy::brute_force, {.threads = t}) ==
          count_mean_value({2, 3, 25}, Strategy::brute_force, {.threads = 1}));
  }
}

TEST_CASE("checkpointed counts") {
  const auto path = std::filesystem::temp_directory_path() / "vmvt_test_checkpoint.bin";
  std::filesystem::remove(path);
  CHECK(count_mean_value_checkpointed({3, 2, 30}, path) == J(3, 2, 30));
  CHECK(std::filesystem::exists(path));
  CHECK(count_mean_value_checkpointed({3, 2, 30}, path) == J(3, 2, 30));
  CHECK(thrown_kind([&] { count_mean_value_checkpointed({3, 2, 31}, path); }) ==
        ErrorKind::invalid_argument);
  std::filesystem::remove(path);
  CHECK(count_mean_value_checkpointed({4, 2, 12}, path) == J(4, 2, 12));
  std::filesystem::remove(path);
}

TEST_CASE("argument validation") {
  CHECK(thrown_kind([] { J(0, 2, 5); }) == ErrorKind::invalid_argument);
  CHECK(thrown_kind([] { J(2, 0, 5); }) == ErrorKind::invalid_argument);
  CHECK(thrown_kind([] { J(2, 2, 0); }) == ErrorKind::invalid_argument);
  CHECK(thrown_kind([] { J(3, 3, 2'000'000); }) == ErrorKind::invalid_argument);
  CHECK(thrown_kind([] { count_in_progression({2, 2, 9}, 0, 0); }) == ErrorKind::invalid_argument);
  const std::vector<std::int64_t> two{5, 10};
  CHECK(thrown_kind([&] { fit_empirical_exponent(1, 1, two); }) == ErrorKind::invalid_argument);
  CHECK(parse_strategy("mim") == Strategy::meet_in_middle);
  CHECK(parse_strategy("brute_force") == Strategy::brute_force);
  CHECK(thrown_kind([] { parse_strategy("fast"); }) == ErrorKind::invalid_argument);
}
