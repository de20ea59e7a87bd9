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

#ifndef VMVT_ERROR_HPP
#define VMVT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vmvt {

enum class ErrorKind {
  invalid_argument,
  resource_exceeded,
  invariant_violation,
  not_prime,
  residues_not_distinct,
  invalid_degree,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind decides the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::invalid_argument, what);
}

}  // namespace vmvt

#endif  // VMVT_ERROR_HPP
