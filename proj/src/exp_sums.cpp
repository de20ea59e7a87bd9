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

#include "vmvt/exp_sums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "vmvt/detail/parallel.hpp"
#include "vmvt/error.hpp"
#include "vmvt/exact.hpp"

namespace vmvt {
namespace {

constexpr std::int64_t kBlock = std::int64_t{1} << 15;

// A double as the exact rational num/den with den a power of two.
struct Dyadic {
  ExactCount num;
  ExactCount den;
};

Dyadic to_dyadic(double value) {
  require(std::isfinite(value), "phase must be finite");
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  Dyadic d{ExactCount(static_cast<std::int64_t>(std::ldexp(mantissa, 53))), 1};
  const int shift = exponent - 53;
  if (shift >= 0) d.num <<= shift; else d.den <<= -shift;
  return d;
}

ExactCount floor_div(const ExactCount& a, const ExactCount& b) {
  ExactCount q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Convergent {
  ExactCount a;
  ExactCount q;
};

// Continued-fraction convergents of num/den with denominator <= limit.
std::vector<Convergent> convergents(Dyadic x, std::uint64_t limit) {
  std::vector<Convergent> out;
  ExactCount h2 = 0, h1 = 1, k2 = 1, k1 = 0;
  for (;;) {
    const ExactCount partial = floor_div(x.num, x.den);
    const ExactCount h = partial * h1 + h2;
    const ExactCount k = partial * k1 + k2;
    if (k > limit) break;
    out.push_back({h, k});
    const ExactCount rem = x.num - partial * x.den;
    if (rem == 0) break;
    h2 = h1; h1 = h;
    k2 = k1; k1 = k;
    x = {x.den, rem};
  }
  return out;
}

// Deterministic blocked compensated sum of term(x) over x in [1, X].
template <class Term>
ComplexValue blocked_sum(std::int64_t X, const ComputeOptions& options, Term&& term) {
  if (X <= 0) return {0.0, 0.0};
  const auto blocks = static_cast<std::size_t>((X + kBlock - 1) / kBlock);
  std::vector<ComplexValue> partial(blocks);
  detail::ProgressTicker ticker(options, "exponential sum", blocks);
  detail::parallel_for(blocks, resolve_threads(options), [&](std::size_t b) {
    detail::CompensatedComplexSum sum;
    const std::int64_t first = static_cast<std::int64_t>(b) * kBlock + 1;
    const std::int64_t last = std::min(X, first + kBlock - 1);
    for (std::int64_t x = first; x <= last; ++x) sum.add(term(x));
    partial[b] = sum.value();
    ticker.advance();
  });
  detail::CompensatedComplexSum total;
  for (const auto& z : partial) total.add(z);
  return total.value();
}

u128 mul_mod(u128 a, u128 b, u128 m) { return (a * b) % m; }

}  // namespace

PhaseVector::PhaseVector(std::vector<double> alpha) {
  require(!alpha.empty(), "phase vector must have at least one coefficient");
  fixed_.reserve(alpha.size());
  alpha_.reserve(alpha.size());
  for (const double a : alpha) {
    require(std::isfinite(a), "phase coefficients must be finite");
    fixed_.push_back(detail::to_phase(a));
    alpha_.push_back(detail::to_unit(fixed_.back()));
  }
}

ComplexValue eval_f(const PhaseVector& alpha, std::int64_t X,
                    const ComputeOptions& options) {
  require(X >= 1, "X must be at least 1");
  const auto coefficients = alpha.fixed();
  return blocked_sum(X, options, [&](std::int64_t x) {
    const auto theta = detail::polynomial_phase(coefficients, static_cast<std::uint64_t>(x));
    return detail::unit_root(detail::centered(theta));
  });
}

ComplexValue eval_f(const RationalPhase& alpha, std::int64_t X,
                    const ComputeOptions& options) {
  require(X >= 1, "X must be at least 1");
  require(!alpha.numerators.empty(), "phase vector must have at least one coefficient");
  require(alpha.denominator >= 1 &&
              alpha.denominator <= (std::uint64_t{1} << 62),
          "denominator out of range");
  const u128 q = alpha.denominator;
  std::vector<u128> residues;
  for (const auto a : alpha.numerators) {
    const std::int64_t r = a % static_cast<std::int64_t>(alpha.denominator);
    residues.push_back(static_cast<u128>(r < 0 ? r + static_cast<std::int64_t>(q) : r));
  }
  return blocked_sum(X, options, [&](std::int64_t x) {
    const u128 xr = static_cast<u128>(x) % q;
    u128 acc = 0;
    for (std::size_t j = residues.size(); j-- > 0;)
      acc = mul_mod((acc + residues[j]) % q, xr, q);
    // centre the residue in (-q/2, q/2] before dividing
    const double turns = 2 * acc > q
                             ? -static_cast<double>(q - acc) / static_cast<double>(q)
                             : static_cast<double>(acc) / static_cast<double>(q);
    return detail::unit_root(turns);
  });
}

ComplexValue eval_g(double beta, int k, std::int64_t X, const ComputeOptions& options) {
  require(k >= 1, "k must be at least 1");
  std::vector<double> alpha(static_cast<std::size_t>(k), 0.0);
  alpha.back() = beta;
  return eval_f(PhaseVector(std::move(alpha)), X, options);
}

RationalApprox dirichlet_approx(double alpha, std::uint64_t Q) {
  require(Q >= 1, "Q must be at least 1");
  require(std::fabs(alpha) < 0x1p62, "alpha out of range");
  const Dyadic x = to_dyadic(alpha);
  const auto list = convergents(x, Q);
  // The first convergent floor(alpha)/1 always qualifies.
  const Convergent& best = list.back();
  const ExactCount gap = abs(best.q * x.num - best.a * x.den);
  // Convergents are best approximations of the second kind, so the last
  // one with q <= Q beats every other denominator up to Q.
  if (gap * Q >= x.den && gap != 0)
    fail(ErrorKind::invariant_violation, "Dirichlet bound not met");
  RationalApprox out;
  out.a = best.a.convert_to<std::int64_t>();
  out.q = best.q.convert_to<std::uint64_t>();
  out.err = boost::multiprecision::cpp_rational(gap, x.den).convert_to<double>();
  return out;
}

bool is_minor_arc(double beta, int k, std::int64_t X) {
  require(k >= 2, "minor arcs need k >= 2");
  require(X >= 1, "X must be at least 1");
  const Dyadic x = to_dyadic(beta);
  const ExactCount scale = exact_pow(X, static_cast<unsigned>(k - 1));
  for (const auto& c : convergents(x, static_cast<std::uint64_t>(X))) {
    // |q beta - a| <= X^{1-k}  <=>  |q num - a den| X^{k-1} <= den
    if (abs(c.q * x.num - c.a * x.den) * scale <= x.den) return false;
  }
  return true;
}

BoundEnvelope weyl_envelope(std::uint64_t q, int k, std::int64_t X, double epsilon) {
  require(q >= 1 && k >= 1 && X >= 1, "q, k, X must be positive");
  const double x = static_cast<double>(X);
  const double base = 1.0 / static_cast<double>(q) + 1.0 / x +
                      static_cast<double>(q) * std::pow(x, -k);
  return {"weyl", std::pow(x, 1.0 + epsilon) * std::pow(base, std::ldexp(1.0, 1 - k)),
          epsilon};
}

double vinogradov_sigma(int k) {
  if (k < 3) fail(ErrorKind::invalid_degree, "sigma(k) needs k >= 3");
  return 1.0 / (2.0 * (k - 1) * (k - 2));
}

BoundEnvelope vinogradov_envelope(std::uint64_t q, int j, int k, std::int64_t X,
                                  double epsilon) {
  const double sigma = vinogradov_sigma(k);
  require(j >= 2 && j <= k, "need 2 <= j <= k");
  require(q >= 1 && X >= 1, "q and X must be positive");
  const double x = static_cast<double>(X);
  const double base = 1.0 / static_cast<double>(q) + 1.0 / x +
                      static_cast<double>(q) * std::pow(x, -j);
  return {"vinogradov", std::pow(x, 1.0 + epsilon) * std::pow(base, sigma), epsilon};
}

EquidistributionMin equidistribution_min(const PhaseVector& alpha, std::int64_t N,
                                         const ComputeOptions& options) {
  require(N >= 1, "N must be at least 1");
  require(N <= kMaxEquidistributionN, "N is capped at 1e8");
  const auto coefficients = alpha.fixed();
  const auto blocks = static_cast<std::size_t>((N + kBlock - 1) / kBlock);
  struct Best {
    std::int64_t n;
    detail::Phase distance;
  };
  std::vector<Best> partial(blocks);
  detail::ProgressTicker ticker(options, "equidistribution", blocks);
  detail::parallel_for(blocks, resolve_threads(options), [&](std::size_t b) {
    const std::int64_t first = static_cast<std::int64_t>(b) * kBlock + 1;
    const std::int64_t last = std::min(N, first + kBlock - 1);
    Best best{first, ~detail::Phase{0}};
    for (std::int64_t n = first; n <= last; ++n) {
      const auto d = detail::distance_to_integer(
          detail::polynomial_phase(coefficients, static_cast<std::uint64_t>(n)));
      if (d < best.distance) best = {n, d};
    }
    partial[b] = best;
    ticker.advance();
  });
  Best best = partial.front();
  for (const auto& p : partial)
    if (p.distance < best.distance) best = p;
  return {best.n, detail::to_unit(best.distance)};
}

}  // namespace vmvt
