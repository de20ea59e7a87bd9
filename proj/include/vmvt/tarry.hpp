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

#ifndef VMVT_TARRY_HPP
#define VMVT_TARRY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "vmvt/options.hpp"

namespace vmvt {

/// h blocks of s positive integers whose power sums agree in every order
/// 1..k and differ pairwise in order k+1.
struct TarryWitness {
  int k = 1;
  int h = 2;
  int s = 1;
  std::vector<std::vector<std::int64_t>> blocks;

  friend bool operator==(const TarryWitness&, const TarryWitness&) = default;
};

/// Checks both clauses in exact arithmetic; malformed witnesses are false.
bool verify_witness(const TarryWitness& w);

/// Exhaustive search over blocks with entries in [1, height]. Returns the
/// lexicographically smallest witness (blocks sorted, each block sorted),
/// or nothing when none exists at this height.
std::optional<TarryWitness> search_witness(int k, int h, int s, std::int64_t height,
                                           const ComputeOptions& options = {});

/// Witness file: header line "k h s", then one block per line with entries
/// separated by single spaces.
void write_witness(std::ostream& out, const TarryWitness& w);
TarryWitness read_witness(std::istream& in);

}  // namespace vmvt

#endif  // VMVT_TARRY_HPP
