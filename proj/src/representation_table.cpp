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

#include "vmvt/representation_table.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>

#include "vmvt/detail/parallel.hpp"
#include "vmvt/error.hpp"

namespace vmvt {
namespace {

bool key_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Cursor over one shifted run lists[pos..end) + shifts.key(shift).
struct Cursor {
  std::size_t pos;
  std::size_t end;
  std::size_t shift;
};

// Streams the convolution restricted to leading components in [lo, hi) in
// ascending key order, calling emit(key, count) once per distinct key.
template <class Emit>
void merge_range(const RepresentationTable& lists,
                 const RepresentationTable& shifts, std::int64_t lo,
                 std::int64_t hi, Emit&& emit) {
  const auto k = static_cast<std::size_t>(lists.degree());
  std::vector<Cursor> cursors;
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    const std::int64_t b0 = shifts.leading(j);
    auto first_at_least = [&](std::int64_t bound) {
      std::size_t a = 0, b = lists.size();
      while (a < b) {
        const std::size_t mid = (a + b) / 2;
        if (lists.leading(mid) < bound) a = mid + 1; else b = mid;
      }
      return a;
    };
    const std::size_t begin = first_at_least(lo - b0);
    const std::size_t end = first_at_least(hi - b0);
    if (begin < end) cursors.push_back({begin, end, j});
  }
  if (cursors.empty()) return;

  std::vector<std::int64_t> current(cursors.size() * k);
  auto load = [&](std::size_t c) {
    const auto a = lists.key(cursors[c].pos);
    const auto b = shifts.key(cursors[c].shift);
    for (std::size_t i = 0; i < k; ++i) current[c * k + i] = a[i] + b[i];
  };
  auto key_of = [&](std::size_t c) {
    return std::span<const std::int64_t>(current.data() + c * k, k);
  };
  // Min-heap on the current key of each cursor.
  auto heap_less = [&](std::uint32_t x, std::uint32_t y) {
    return key_less(key_of(y), key_of(x));
  };
  std::vector<std::uint32_t> heap(cursors.size());
  std::iota(heap.begin(), heap.end(), 0u);
  for (std::size_t c = 0; c < cursors.size(); ++c) load(c);
  std::make_heap(heap.begin(), heap.end(), heap_less);

  std::vector<std::int64_t> pending;
  std::uint64_t pending_count = 0;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    const std::uint32_t c = heap.back();
    const auto key = key_of(c);
    const std::uint64_t add =
        lists.count(cursors[c].pos) * shifts.count(cursors[c].shift);
    if (!pending.empty() && std::equal(key.begin(), key.end(), pending.begin())) {
      pending_count += add;
    } else {
      if (!pending.empty()) emit(std::span<const std::int64_t>(pending), pending_count);
      pending.assign(key.begin(), key.end());
      pending_count = add;
    }
    if (++cursors[c].pos < cursors[c].end) {
      load(c);
      std::push_heap(heap.begin(), heap.end(), heap_less);
    } else {
      heap.pop_back();
    }
  }
  emit(std::span<const std::int64_t>(pending), pending_count);
}

struct Partition {
  std::int64_t first;
  std::int64_t width;
  std::size_t chunks;
};

// Splits the leading-component range of the convolution into equal slices,
// enough of them for load balancing and steady progress reports.
Partition partition(const RepresentationTable& lists,
                    const RepresentationTable& shifts, unsigned threads) {
  const __int128 lo =
      static_cast<__int128>(lists.leading(0)) + shifts.leading(0);
  const __int128 hi = static_cast<__int128>(lists.leading(lists.size() - 1)) +
                      shifts.leading(shifts.size() - 1);
  const __int128 span = hi - lo + 1;
  const __int128 wanted = std::max<__int128>(64, 8 * static_cast<__int128>(threads));
  const __int128 chunks = std::min(span, wanted);
  const __int128 width = (span + chunks - 1) / chunks;
  return {static_cast<std::int64_t>(lo), static_cast<std::int64_t>(width),
          static_cast<std::size_t>((span + width - 1) / width)};
}

void require_counts_fit(const RepresentationTable& a,
                        const RepresentationTable& b) {
  if (a.total() * b.total() > std::numeric_limits<std::uint64_t>::max())
    fail(ErrorKind::resource_exceeded,
         "representation counts exceed 64-bit cells");
}

// Orders the operands so the heap holds the smaller table's entries.
std::pair<const RepresentationTable*, const RepresentationTable*> arrange(
    const RepresentationTable& lhs, const RepresentationTable& rhs) {
  if (lhs.size() >= rhs.size()) return {&lhs, &rhs};
  return {&rhs, &lhs};
}

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(bytes.data(), 8);
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), 8);
  if (!in) fail(ErrorKind::invalid_argument, "truncated representation table");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

}  // namespace

PowerSumVector power_sums(std::span<const std::int64_t> tuple, int degree) {
  PowerSumVector out(static_cast<std::size_t>(degree), 0);
  for (const std::int64_t v : tuple) {
    std::int64_t p = 1;
    for (int j = 0; j < degree; ++j) {
      p *= v;
      out[j] += p;
    }
  }
  return out;
}

void require_power_sums_fit(std::int64_t max_abs, int variables, int degree) {
  ExactCount bound = exact_pow(max_abs, static_cast<unsigned>(degree));
  bound *= variables;
  if (bound > std::numeric_limits<std::int64_t>::max() / 2)
    fail(ErrorKind::invalid_argument,
         "power sums exceed the signed 64-bit key range");
}

RepresentationTable::RepresentationTable(int degree) : degree_(degree) {
  require(degree >= 1, "degree must be at least 1");
}

RepresentationTable RepresentationTable::unit(int degree) {
  RepresentationTable table(degree);
  const std::vector<std::int64_t> zero(static_cast<std::size_t>(degree), 0);
  table.append(zero, 1);
  return table;
}

RepresentationTable RepresentationTable::singles(
    std::span<const std::int64_t> values, int degree) {
  std::vector<std::int64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::int64_t max_abs = 0;
  for (const auto v : sorted) max_abs = std::max(max_abs, v < 0 ? -v : v);
  require_power_sums_fit(max_abs, 1, degree);

  std::vector<PowerSumVector> keys;
  std::vector<std::uint64_t> counts;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    keys.push_back(power_sums(std::span(&sorted[i], 1), degree));
    counts.push_back(j - i);
    i = j;
  }
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return key_less(keys[a], keys[b]);
  });
  RepresentationTable table(degree);
  for (const auto i : order) table.append(keys[i], counts[i]);
  return table;
}

void RepresentationTable::append(std::span<const std::int64_t> key,
                                 std::uint64_t count) {
  require(key.size() == static_cast<std::size_t>(degree_), "key length mismatch");
  if (!counts_.empty() && !key_less(this->key(size() - 1), key))
    fail(ErrorKind::invariant_violation,
         "representation table keys must be strictly increasing");
  keys_.insert(keys_.end(), key.begin(), key.end());
  counts_.push_back(count);
}

ExactCount RepresentationTable::total() const {
  u128 sum = 0;
  for (const auto c : counts_) sum += c;
  return to_exact(sum);
}

ExactCount RepresentationTable::sum_of_squares() const {
  ExactCount sum = 0;
  for (const auto c : counts_) sum += ExactCount(c) * c;
  return sum;
}

void RepresentationTable::write(std::ostream& out) const {
  put_u64(out, static_cast<std::uint64_t>(degree_));
  put_u64(out, counts_.size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (const auto component : key(i))
      put_u64(out, static_cast<std::uint64_t>(component));
    std::array<char, 8> magnitude{};
    std::uint32_t length = 0;
    for (std::uint64_t c = counts_[i]; c != 0; c >>= 8) ++length;
    for (std::uint32_t b = 0; b < length; ++b)
      magnitude[b] = static_cast<char>((counts_[i] >> (8 * (length - 1 - b))) & 0xff);
    const std::array<char, 4> prefix{
        static_cast<char>(length & 0xff), static_cast<char>((length >> 8) & 0xff),
        static_cast<char>((length >> 16) & 0xff), static_cast<char>(length >> 24)};
    out.write(prefix.data(), 4);
    out.write(magnitude.data(), length);
  }
}

RepresentationTable RepresentationTable::read(std::istream& in) {
  const std::uint64_t degree = get_u64(in);
  require(degree >= 1 && degree <= 64, "bad representation table degree");
  RepresentationTable table(static_cast<int>(degree));
  const std::uint64_t entries = get_u64(in);
  std::vector<std::int64_t> key(degree);
  for (std::uint64_t e = 0; e < entries; ++e) {
    for (auto& component : key) component = static_cast<std::int64_t>(get_u64(in));
    std::array<unsigned char, 4> prefix{};
    in.read(reinterpret_cast<char*>(prefix.data()), 4);
    const std::uint32_t length = prefix[0] | (prefix[1] << 8) |
                                 (prefix[2] << 16) |
                                 (static_cast<std::uint32_t>(prefix[3]) << 24);
    if (!in || length > 8)
      fail(ErrorKind::invalid_argument, "bad count in representation table");
    std::array<unsigned char, 8> magnitude{};
    in.read(reinterpret_cast<char*>(magnitude.data()), length);
    if (!in) fail(ErrorKind::invalid_argument, "truncated representation table");
    std::uint64_t count = 0;
    for (std::uint32_t b = 0; b < length; ++b) count = (count << 8) | magnitude[b];
    table.append(key, count);
  }
  return table;
}

RepresentationTable convolve(const RepresentationTable& lhs,
                             const RepresentationTable& rhs,
                             const ComputeOptions& options) {
  require(lhs.degree() == rhs.degree(), "degree mismatch in convolution");
  RepresentationTable out(lhs.degree());
  if (lhs.empty() || rhs.empty()) return out;
  require_counts_fit(lhs, rhs);
  const ExactCount worst = ExactCount(lhs.size()) * rhs.size() *
                           RepresentationTable::bytes_per_entry(lhs.degree());
  if (worst > options.memory_budget_bytes)
    fail(ErrorKind::resource_exceeded,
         "representation table would exceed the memory budget");

  const auto [lists, shifts] = arrange(lhs, rhs);
  const Partition part = partition(*lists, *shifts, resolve_threads(options));
  std::vector<RepresentationTable> pieces(part.chunks,
                                          RepresentationTable(lhs.degree()));
  detail::ProgressTicker ticker(options, "convolve", part.chunks);
  detail::parallel_for(part.chunks, resolve_threads(options), [&](std::size_t c) {
    const std::int64_t lo = part.first + static_cast<std::int64_t>(c) * part.width;
    merge_range(*lists, *shifts, lo, lo + part.width,
                [&](std::span<const std::int64_t> key, std::uint64_t count) {
                  pieces[c].append(key, count);
                });
    ticker.advance();
  });
  for (const auto& piece : pieces)
    for (std::size_t i = 0; i < piece.size(); ++i)
      out.append(piece.key(i), piece.count(i));
  return out;
}

ExactCount convolution_sum_of_squares(const RepresentationTable& lhs,
                                      const RepresentationTable& rhs,
                                      const ComputeOptions& options) {
  require(lhs.degree() == rhs.degree(), "degree mismatch in convolution");
  if (lhs.empty() || rhs.empty()) return 0;
  require_counts_fit(lhs, rhs);
  const auto [lists, shifts] = arrange(lhs, rhs);
  const Partition part = partition(*lists, *shifts, resolve_threads(options));
  // Every aggregated count is at most the product of totals (< 2^64), so a
  // chunk's sum of squares is below 2^128.
  std::vector<u128> sums(part.chunks, 0);
  detail::ProgressTicker ticker(options, "mean value", part.chunks);
  detail::parallel_for(part.chunks, resolve_threads(options), [&](std::size_t c) {
    const std::int64_t lo = part.first + static_cast<std::int64_t>(c) * part.width;
    u128 sum = 0;
    merge_range(*lists, *shifts, lo, lo + part.width,
                [&](std::span<const std::int64_t>, std::uint64_t count) {
                  sum += static_cast<u128>(count) * count;
                });
    sums[c] = sum;
    ticker.advance();
  });
  ExactCount total = 0;
  for (const auto s : sums) total += to_exact(s);
  return total;
}

}  // namespace vmvt
