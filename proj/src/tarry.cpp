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

#include "vmvt/tarry.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "vmvt/error.hpp"
#include "vmvt/exact.hpp"
#include "vmvt/representation_table.hpp"

namespace vmvt {
namespace {

ExactCount power_sum(const std::vector<std::int64_t>& block, int j) {
  ExactCount sum = 0;
  for (const auto v : block) sum += exact_pow(v, static_cast<unsigned>(j));
  return sum;
}

// Binomial coefficient, saturating well above any memory budget.
ExactCount multisets(std::int64_t n, int s) {
  ExactCount c = 1;
  for (int i = 1; i <= s; ++i) c = c * (n + i - 1) / i;
  return c;
}

}  // namespace

bool verify_witness(const TarryWitness& w) {
  if (w.k < 1 || w.h < 2 || w.s < 1) return false;
  if (w.blocks.size() != static_cast<std::size_t>(w.h)) return false;
  for (const auto& block : w.blocks) {
    if (block.size() != static_cast<std::size_t>(w.s)) return false;
    for (const auto v : block)
      if (v < 1) return false;
  }
  for (int j = 1; j <= w.k; ++j) {
    const ExactCount first = power_sum(w.blocks.front(), j);
    for (const auto& block : w.blocks)
      if (power_sum(block, j) != first) return false;
  }
  std::vector<ExactCount> top;
  for (const auto& block : w.blocks) top.push_back(power_sum(block, w.k + 1));
  std::sort(top.begin(), top.end());
  return std::adjacent_find(top.begin(), top.end()) == top.end();
}

std::optional<TarryWitness> search_witness(int k, int h, int s, std::int64_t height,
                                           const ComputeOptions& options) {
  require(k >= 1 && h >= 2 && s >= 1 && height >= 1, "k, s, height >= 1 and h >= 2");
  require_power_sums_fit(height, s, k + 1);
  const auto width = static_cast<std::size_t>(s);
  const auto key_width = static_cast<std::size_t>(k + 1);
  const ExactCount entries = multisets(height, s);
  if (entries * ((width + key_width) * sizeof(std::int64_t) + sizeof(std::size_t)) >
      options.memory_budget_bytes)
    fail(ErrorKind::resource_exceeded, "witness search exceeds the memory budget");

  // All nondecreasing s-tuples, generated in lexicographic order, with their
  // power sums of orders 1..k+1.
  std::vector<std::int64_t> tuples;
  std::vector<std::int64_t> keys;
  std::vector<std::int64_t> t(width, 1);
  for (;;) {
    tuples.insert(tuples.end(), t.begin(), t.end());
    const auto key = power_sums(t, k + 1);
    keys.insert(keys.end(), key.begin(), key.end());
    std::size_t d = width;
    while (d > 0 && t[d - 1] == height) --d;
    if (d == 0) break;
    const std::int64_t next = t[d - 1] + 1;
    for (std::size_t i = d - 1; i < width; ++i) t[i] = next;
  }
  const std::size_t count = tuples.size() / width;
  auto key_of = [&](std::size_t i) { return keys.data() + i * key_width; };
  auto tuple_of = [&](std::size_t i) { return tuples.data() + i * width; };

  // Group by the order-1..k sums; ties broken by the order k+1 sum and then
  // by generation (lexicographic) order.
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(key_of(a), key_of(a) + key_width, key_of(b),
                                        key_of(b) + key_width);
  });

  std::optional<std::vector<std::size_t>> best;
  auto lex_less = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    // Indices follow lexicographic tuple order, so comparing them compares blocks.
    return a < b;
  };
  for (std::size_t begin = 0; begin < count;) {
    std::size_t end = begin + 1;
    while (end < count && std::equal(key_of(order[begin]), key_of(order[begin]) + k,
                                     key_of(order[end])))
      ++end;
    // Smallest tuple of each distinct order-(k+1) sum, then the h smallest.
    std::vector<std::size_t> reps;
    for (std::size_t i = begin; i < end; ++i)
      if (i == begin || key_of(order[i])[k] != key_of(order[i - 1])[k])
        reps.push_back(order[i]);
    if (reps.size() >= static_cast<std::size_t>(h)) {
      std::sort(reps.begin(), reps.end());
      reps.resize(static_cast<std::size_t>(h));
      if (!best || lex_less(reps, *best)) best = reps;
    }
    begin = end;
  }
  if (!best) return std::nullopt;
  TarryWitness w{k, h, s, {}};
  for (const auto i : *best) w.blocks.emplace_back(tuple_of(i), tuple_of(i) + width);
  return w;
}

void write_witness(std::ostream& out, const TarryWitness& w) {
  out << w.k << ' ' << w.h << ' ' << w.s << '\n';
  for (const auto& block : w.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
    out << '\n';
  }
}

TarryWitness read_witness(std::istream& in) {
  TarryWitness w;
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), "witness file is empty");
  {
    std::istringstream header(line);
    require(static_cast<bool>(header >> w.k >> w.h >> w.s), "bad witness header");
  }
  require(w.k >= 1 && w.h >= 2 && w.s >= 1, "bad witness header values");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<std::int64_t> block;
    for (std::int64_t v; row >> v;) block.push_back(v);
    require(row.eof(), "non-integer entry in witness file");
    require(block.size() == static_cast<std::size_t>(w.s), "block length differs from s");
    w.blocks.push_back(std::move(block));
  }
  require(w.blocks.size() == static_cast<std::size_t>(w.h), "block count differs from h");
  return w;
}

}  // namespace vmvt
