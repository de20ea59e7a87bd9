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

#include "vmvt/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "vmvt/detail/fixed_phase.hpp"
#include "vmvt/error.hpp"

namespace vmvt {
namespace {

// B_2, B_4, ..., B_16
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6,
    -3617.0 / 510};

}  // namespace

double log_gamma(double x) {
  require(x > 0 && std::isfinite(x), "log_gamma needs a positive argument");
  double shift = 0.0;
  while (x < 15.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  double series = 0.0;
  double power = x;  // x^{2m-1}
  for (std::size_t m = 1; m <= kBernoulli.size(); ++m) {
    series += kBernoulli[m - 1] / (2.0 * m * (2.0 * m - 1) * power);
    power *= x * x;
  }
  return shift + (x - 0.5) * std::log(x) - x +
         0.5 * std::log(2 * std::numbers::pi) + series;
}

double gamma_fn(double x) { return std::exp(log_gamma(x)); }

double euler_gamma() {
  constexpr int n = 10000;
  detail::CompensatedSum harmonic;
  for (int i = n; i >= 1; --i) harmonic.add(1.0 / i);
  const double nn = n;
  return harmonic.value() - std::log(nn) - 1 / (2 * nn) + 1 / (12 * nn * nn) -
         1 / (120 * std::pow(nn, 4)) + 1 / (252 * std::pow(nn, 6));
}

double euler_gamma_brent_mcmillan(int n) {
  // gamma = A/B - log n + O(e^{-4n}),
  // A = sum_k (n^k/k!)^2 H_k, B = sum_k (n^k/k!)^2.
  double term = 1.0;
  double harmonic = 0.0;
  double a = 0.0, b = 1.0;
  for (int k = 1; k < 40 * n; ++k) {
    term *= static_cast<double>(n) / k;
    harmonic += 1.0 / k;
    const double weight = term * term;
    a += weight * harmonic;
    b += weight;
    if (weight < 1e-30 * b && k > n) break;
  }
  return a / b - std::log(static_cast<double>(n));
}

double zeta_log_derivative_at_2() {
  // f(x) = log x / x^2 written as x^{-m}(c + d log x).
  struct Term {
    double m, c, d;
    double at(double x) const { return std::pow(x, -m) * (c + d * std::log(x)); }
    Term derivative() const { return {m + 1, d - m * c, -m * d}; }
  };
  constexpr int n = 200;
  detail::CompensatedSum sum;
  for (int i = n - 1; i >= 2; --i) sum.add(std::log(i) / (static_cast<double>(i) * i));
  const double x = n;
  const Term f{2, 0, 1};
  // sum_{i>=n} f(i) = int_n^inf f + f(n)/2 - sum_j B_{2j}/(2j)! f^{(2j-1)}(n)
  double tail = (std::log(x) + 1) / x + f.at(x) / 2;
  Term d = f.derivative();
  double factorial = 2.0;
  for (std::size_t j = 1; j <= 5; ++j) {
    tail -= kBernoulli[j - 1] / factorial * d.at(x);
    d = d.derivative().derivative();
    factorial *= (2.0 * j + 1) * (2.0 * j + 2);
  }
  sum.add(tail);
  const double zeta_prime = -sum.value();
  const double zeta = std::numbers::pi * std::numbers::pi / 6;
  return zeta_prime / zeta;
}

double zeta_log_derivative_at_2_von_mangoldt(std::int64_t limit) {
  require(limit >= 100, "sieve limit too small");
  const auto n = static_cast<std::size_t>(limit);
  std::vector<bool> composite(n + 1, false);
  detail::CompensatedSum sum;
  detail::CompensatedSum psi;
  for (std::size_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (std::size_t m = p * p; m <= n && p <= n / p; m += p) composite[m] = true;
    const double log_p = std::log(static_cast<double>(p));
    for (std::size_t pk = p; pk <= n; pk *= p) {
      const double v = static_cast<double>(pk);
      sum.add(log_p / (v * v));
      psi.add(log_p);
      if (pk > n / p) break;
    }
  }
  const double x = static_cast<double>(limit);
  // sum_{m>x} Lambda(m)/m^2 = -psi(x)/x^2 + 2 int_x^inf psi(t)/t^3 dt
  sum.add(2.0 / x - psi.value() / (x * x));
  return -sum.value();
}

}  // namespace vmvt
