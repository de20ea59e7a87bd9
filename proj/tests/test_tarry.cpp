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

#include <sstream>

#include "support.hpp"
#include "vmvt/tarry.hpp"

using namespace vmvt;
using vmvt::testing::thrown_kind;

namespace {

TarryWitness scaled(TarryWitness w, std::int64_t c) {
  for (auto& b : w.blocks)
    for (auto& v : b) v *= c;
  return w;
}

TarryWitness translated(TarryWitness w, std::int64_t t) {
  for (auto& b : w.blocks)
    for (auto& v : b) v += t;
  return w;
}

}  // namespace

TEST_CASE("verification") {
  CHECK(verify_witness({2, 2, 3, {{1, 6, 8}, {2, 4, 9}}}));
  CHECK(verify_witness({1, 2, 2, {{1, 4}, {2, 3}}}));
  CHECK_FALSE(verify_witness({2, 2, 3, {{1, 6, 8}, {1, 6, 8}}}));
  CHECK_FALSE(verify_witness({2, 2, 3, {{1, 6, 8}, {2, 4, 10}}}));
  CHECK_FALSE(verify_witness({2, 2, 3, {{1, 6, 8}, {2, 4}}}));
  CHECK_FALSE(verify_witness({2, 3, 3, {{1, 6, 8}, {2, 4, 9}}}));
  CHECK(verify_witness({2, 3, 3, {{1, 12, 14}, {2, 9, 16}, {4, 6, 17}}}));
}

TEST_CASE("exhaustive searches") {
  CHECK_FALSE(search_witness(2, 2, 2, 50).has_value());
  CHECK_FALSE(search_witness(1, 2, 1, 100).has_value());

  const auto w = search_witness(2, 2, 3, 10);
  REQUIRE(w.has_value());
  CHECK(verify_witness(*w));
  const TarryWitness smallest{2, 2, 3, {{1, 4, 4}, {2, 2, 5}}};
  CHECK(*w == smallest);

  for (int k = 1; k <= 3; ++k) {
    const auto found = search_witness(k, 2, k + 1, 20);
    REQUIRE(found.has_value());
    CHECK(verify_witness(*found));
  }
  const auto three = search_witness(2, 3, 3, 30);
  REQUIRE(three.has_value());
  CHECK(verify_witness(*three));
  CHECK(three->blocks.size() == 3);
}

TEST_CASE("scaling and translation closure") {
  for (int k = 1; k <= 3; ++k) {
    const auto w = search_witness(k, 2, k + 1, 20);
    REQUIRE(w.has_value());
    for (std::int64_t c : {2, 3}) CHECK(verify_witness(scaled(*w, c)));
    for (std::int64_t t : {0, 1, 5, 17}) {
      const auto moved = translated(*w, t);
      // Translation preserves the equal sums; the distinct top sums stay
      // distinct because the difference of top sums is translation invariant.
      CHECK(verify_witness(moved));
    }
  }
}

TEST_CASE("search is independent of the thread count") {
  const auto one = search_witness(2, 3, 3, 30, {.threads = 1});
  CHECK(search_witness(2, 3, 3, 30, {.threads = 4}) == one);
  CHECK(search_witness(2, 3, 3, 30, {.threads = 8}) == one);
}

TEST_CASE("witness files") {
  const TarryWitness w{2, 2, 3, {{1, 6, 8}, {2, 4, 9}}};
  std::stringstream buffer;
  write_witness(buffer, w);
  CHECK(buffer.str() == "2 2 3\n1 6 8\n2 4 9\n");
  CHECK(read_witness(buffer) == w);

  std::stringstream short_block("2 2 3\n1 6 8\n2 4\n");
  CHECK(thrown_kind([&] { read_witness(short_block); }) == ErrorKind::invalid_argument);
  std::stringstream missing("2 2 3\n1 6 8\n");
  CHECK(thrown_kind([&] { read_witness(missing); }) == ErrorKind::invalid_argument);
}

TEST_CASE("search limits") {
  CHECK(thrown_kind([] { search_witness(2, 2, 3, 0); }) == ErrorKind::invalid_argument);
  CHECK(thrown_kind([] { search_witness(2, 1, 3, 10); }) == ErrorKind::invalid_argument);
  ComputeOptions tight;
  tight.memory_budget_bytes = 4096;
  CHECK(thrown_kind([&] { search_witness(3, 2, 4, 60, tight); }) == ErrorKind::resource_exceeded);
}
