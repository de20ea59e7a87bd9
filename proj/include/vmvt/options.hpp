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

#ifndef VMVT_OPTIONS_HPP
#define VMVT_OPTIONS_HPP

#include <cstdint>
#include <functional>
#include <string>

namespace vmvt {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{4} << 30;

/// Execution knobs shared by every heavy computation. None of them affects
/// results: outputs are identical for any thread count.
struct ComputeOptions {
  unsigned threads = 0;  // 0 selects the hardware concurrency
  std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
  // Receives human-readable progress lines, rate limited to one per 5 s.
  std::function<void(const std::string&)> progress;
};

unsigned resolve_threads(const ComputeOptions& options) noexcept;

}  // namespace vmvt

#endif  // VMVT_OPTIONS_HPP
