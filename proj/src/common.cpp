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

#include <thread>

#include "vmvt/error.hpp"
#include "vmvt/options.hpp"

namespace vmvt {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::resource_exceeded: return "resource_exceeded";
    case ErrorKind::invariant_violation: return "invariant_violation";
    case ErrorKind::not_prime: return "not_prime";
    case ErrorKind::residues_not_distinct: return "residues_not_distinct";
    case ErrorKind::invalid_degree: return "invalid_degree";
  }
  return "unknown";
}

unsigned resolve_threads(const ComputeOptions& options) noexcept {
  if (options.threads > 0) return options.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace vmvt
