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

#ifndef VMVT_DETAIL_PARALLEL_HPP
#define VMVT_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "vmvt/options.hpp"

namespace vmvt::detail {

/// Rate-limited progress sink. Safe to call from worker threads.
class ProgressTicker {
 public:
  ProgressTicker(const ComputeOptions& options, std::string label,
                 std::size_t total)
      : sink_(options.progress),
        label_(std::move(label)),
        total_(total),
        last_(std::chrono::steady_clock::now()) {}

  void advance(std::size_t steps = 1) {
    const std::size_t done = done_.fetch_add(steps) + steps;
    if (!sink_) return;
    const auto now = std::chrono::steady_clock::now();
    std::lock_guard lock(mutex_);
    if (now - last_ < std::chrono::seconds(5)) return;
    last_ = now;
    sink_(label_ + ": " + std::to_string(done) + "/" + std::to_string(total_));
  }

 private:
  std::function<void(const std::string&)> sink_;
  std::string label_;
  std::size_t total_;
  std::atomic<std::size_t> done_{0};
  std::mutex mutex_;
  std::chrono::steady_clock::time_point last_;
};

/// Calls fn(i) for every i in [0, count) on up to `threads` workers. Work
/// items are claimed dynamically, so callers must write results into slot i
/// and reduce in index order afterwards.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace vmvt::detail

#endif  // VMVT_DETAIL_PARALLEL_HPP
