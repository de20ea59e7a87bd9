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

#ifndef VMVT_TESTS_SUPPORT_HPP
#define VMVT_TESTS_SUPPORT_HPP

#include <optional>

#include "vmvt/error.hpp"

namespace vmvt::testing {

// Kind of the vmvt::Error thrown by fn, or nothing if it returns normally.
template <typename F>
std::optional<ErrorKind> thrown_kind(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace vmvt::testing

#endif  // VMVT_TESTS_SUPPORT_HPP
