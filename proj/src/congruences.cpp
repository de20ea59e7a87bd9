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

#include "vmvt/congruences.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "vmvt/detail/parallel.hpp"
#include "vmvt/error.hpp"

namespace vmvt {
namespace {

// Tuples x mod p^levels satisfying, for each listed equation j,
//   sum_i (x_i - eta)^j == target_j  (mod p^{exponent_j}),
// with every x_i == fixed_residue (mod p) when set and the x_i pairwise
// distinct mod p^distinct_level. Counted by lifting one p-adic digit of every
// coordinate per level; a tuple survives level l only if each congruence
// holds modulo p^{min(exponent_j, l)}, which is necessary for the final one.
struct LiftProblem {
  int k = 1;
  std::uint64_t p = 3;
  int levels = 1;
  std::uint64_t eta = 0;
  std::vector<int> exponents;
  std::vector<u128> targets;  // reduced mod p^levels
  std::optional<std::uint64_t> fixed_residue;
  int distinct_level = 1;
};

class LiftCounter {
 public:
  explicit LiftCounter(const LiftProblem& problem) : pr_(problem) {
    powers_.push_back(1);
    for (int l = 1; l <= pr_.levels; ++l) powers_.push_back(powers_.back() * pr_.p);
  }

  std::uint64_t count(const ComputeOptions& options) const {
    const auto roots = level_one();
    std::vector<std::uint64_t> partial(roots.size(), 0);
    detail::ProgressTicker ticker(options, "congruence lift", roots.size());
    detail::parallel_for(roots.size(), resolve_threads(options), [&](std::size_t i) {
      std::vector<u128> x = roots[i];
      partial[i] = descend(x, 1);
      ticker.advance();
    });
    std::uint64_t total = 0;
    for (const auto c : partial) total += c;
    return total;
  }

 private:
  std::vector<std::vector<u128>> level_one() const {
    std::vector<std::vector<u128>> out;
    std::vector<u128> x(static_cast<std::size_t>(pr_.k), 0);
    for (;;) {
      if (admissible(x, 1)) out.push_back(x);
      std::size_t d = 0;
      for (; d < x.size(); ++d) {
        if (++x[d] < pr_.p) break;
        x[d] = 0;
      }
      if (d == x.size()) break;
    }
    return out;
  }

  std::uint64_t descend(std::vector<u128>& x, int level) const {
    if (level == pr_.levels) return 1;
    const u128 step = powers_[level];
    const std::vector<u128> base = x;
    std::vector<std::uint64_t> digit(x.size(), 0);
    std::uint64_t found = 0;
    for (;;) {
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = base[i] + digit[i] * step;
      if (admissible(x, level + 1)) found += descend(x, level + 1);
      std::size_t d = 0;
      for (; d < digit.size(); ++d) {
        if (++digit[d] < pr_.p) break;
        digit[d] = 0;
      }
      if (d == digit.size()) break;
    }
    x = base;
    return found;
  }

  bool admissible(const std::vector<u128>& x, int level) const {
    if (level == 1 && pr_.fixed_residue) {
      for (const auto v : x)
        if (v % pr_.p != *pr_.fixed_residue) return false;
    }
    if (level == pr_.distinct_level) {
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
          if (x[i] == x[j]) return false;
    }
    const u128 full = powers_[pr_.levels];
    std::vector<u128> shifted(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      shifted[i] = (x[i] + full - pr_.eta % full) % full;
    std::vector<u128> power(x.size(), 1);
    int degree = 0;
    for (std::size_t e = 0; e < pr_.exponents.size(); ++e) {
      // equations are listed for j = 1, 2, ...
      const int j = static_cast<int>(e) + 1;
      u128 sum = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (int d = degree; d < j; ++d) power[i] = power[i] * shifted[i] % full;
        sum = (sum + power[i]) % full;
      }
      degree = j;
      const u128 modulus = powers_[std::min(pr_.exponents[e], level)];
      if (sum % modulus != pr_.targets[e] % modulus) return false;
    }
    return true;
  }

  const LiftProblem& pr_;
  std::vector<u128> powers_;
};

std::vector<u128> targets_for(const std::vector<std::int64_t>& y, std::uint64_t eta,
                              int equations, u128 modulus) {
  std::vector<u128> out;
  for (int j = 1; j <= equations; ++j) {
    u128 sum = 0;
    for (const auto v : y) {
      const auto m = static_cast<__int128>(modulus);
      __int128 r = (static_cast<__int128>(v) - static_cast<__int128>(eta)) % m;
      if (r < 0) r += m;
      u128 pw = 1;
      for (int d = 0; d < j; ++d) pw = pw * static_cast<u128>(r) % modulus;
      sum = (sum + pw) % modulus;
    }
    out.push_back(sum);
  }
  return out;
}

std::uint64_t residue(std::int64_t v, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  const std::int64_t r = v % mm;
  return static_cast<std::uint64_t>(r < 0 ? r + mm : r);
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p))
    fail(ErrorKind::not_prime, std::to_string(p) + " is not an odd prime");
}

void require_distinct(const std::vector<std::int64_t>& y, std::uint64_t m) {
  std::vector<std::uint64_t> r;
  for (const auto v : y) r.push_back(residue(v, m));
  std::sort(r.begin(), r.end());
  if (std::adjacent_find(r.begin(), r.end()) != r.end())
    fail(ErrorKind::residues_not_distinct,
         "y has repeated residues modulo " + std::to_string(m));
}

ExactCount factorial(int k) {
  ExactCount f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

ExactCount count_shallow(const CongruenceInstance& inst, int equations,
                         const ComputeOptions& options) {
  require(inst.k >= 1, "k must be at least 1");
  require_odd_prime(inst.p);
  require(inst.y.size() == static_cast<std::size_t>(inst.k), "y must have k entries");
  require(inst.eta < inst.p, "eta must lie in [0, p)");
  require(equations >= 1 && equations <= inst.k, "equations must lie in [1, k]");
  require_distinct(inst.y, inst.p);
  if (exact_pow(static_cast<std::int64_t>(inst.p), static_cast<unsigned>(inst.k)) >
      kMaxShallowModulus)
    fail(ErrorKind::resource_exceeded, "p^k exceeds 1e7");

  LiftProblem problem;
  problem.k = inst.k;
  problem.p = inst.p;
  problem.levels = inst.k;
  problem.eta = inst.eta;
  for (int j = 1; j <= equations; ++j) problem.exponents.push_back(j);
  u128 modulus = 1;
  for (int l = 0; l < inst.k; ++l) modulus *= inst.p;
  problem.targets = targets_for(inst.y, inst.eta, equations, modulus);
  problem.distinct_level = 1;
  return LiftCounter(problem).count(options);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool hensel_applies(int k, std::uint64_t p) noexcept {
  return p > static_cast<std::uint64_t>(k);
}

ExactCount hensel_bound(int k, std::uint64_t p) {
  return factorial(k) *
         exact_pow(static_cast<std::int64_t>(p), static_cast<unsigned>(k * (k - 1) / 2));
}

ExactCount deep_hensel_bound(int k, std::uint64_t p) {
  const auto e = static_cast<unsigned>(k * (k * (k - 1) / 2) + k * (k - 1) / 2);
  return factorial(k) * exact_pow(static_cast<std::int64_t>(p), e);
}

LiftCount count_congruence_solutions(const CongruenceInstance& inst,
                                     const ComputeOptions& options) {
  LiftCount out{count_shallow(inst, inst.k, options), hensel_bound(inst.k, inst.p)};
  if (hensel_applies(inst.k, inst.p) && out.count > out.bound)
    fail(ErrorKind::invariant_violation,
         "congruence count " + to_decimal(out.count) + " exceeds bound " +
             to_decimal(out.bound));
  return out;
}

ExactCount count_truncated_congruence_solutions(const CongruenceInstance& inst,
                                                int equations,
                                                const ComputeOptions& options) {
  return count_shallow(inst, equations, options);
}

LiftCount count_deep_congruence_solutions(const DeepCongruenceInstance& inst,
                                          const ComputeOptions& options) {
  require(inst.k >= 1, "k must be at least 1");
  require_odd_prime(inst.p);
  require(inst.y.size() == static_cast<std::size_t>(inst.k), "y must have k entries");
  require(inst.xi < inst.p && inst.eta < inst.p, "xi and eta must lie in [0, p)");
  if (inst.k >= 3 && inst.p > 3)
    fail(ErrorKind::resource_exceeded, "deep congruences need k <= 2 unless p = 3");
  if (exact_pow(static_cast<std::int64_t>(inst.p),
                static_cast<unsigned>(inst.k * inst.k)) > (ExactCount(1) << 40))
    fail(ErrorKind::resource_exceeded, "p^{k^2} exceeds 2^40");
  for (const auto v : inst.y)
    if (residue(v, inst.p) != inst.xi)
      fail(ErrorKind::invalid_argument, "every y_i must be congruent to xi mod p");
  require_distinct(inst.y, inst.p * inst.p);

  LiftProblem problem;
  problem.k = inst.k;
  problem.p = inst.p;
  problem.levels = inst.k * inst.k;
  problem.eta = inst.eta;
  for (int j = 1; j <= inst.k; ++j) problem.exponents.push_back(j * inst.k);
  u128 modulus = 1;
  for (int l = 0; l < problem.levels; ++l) modulus *= inst.p;
  problem.targets = targets_for(inst.y, inst.eta, inst.k, modulus);
  problem.fixed_residue = inst.xi;
  problem.distinct_level = inst.k == 1 ? 0 : 2;

  LiftCount out{LiftCounter(problem).count(options), deep_hensel_bound(inst.k, inst.p)};
  if (hensel_applies(inst.k, inst.p) && out.count > out.bound)
    fail(ErrorKind::invariant_violation,
         "deep congruence count " + to_decimal(out.count) + " exceeds bound " +
             to_decimal(out.bound));
  return out;
}

}  // namespace vmvt
