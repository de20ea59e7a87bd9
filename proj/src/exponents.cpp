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

#include "vmvt/exponents.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>

#include "vmvt/error.hpp"
#include "vmvt/exp_sums.hpp"
#include "vmvt/mean_values.hpp"
#include "vmvt/special_functions.hpp"

namespace vmvt {
namespace {

// Published small-k tables.
const std::map<int, double> kClassicalH = {{3, 8}, {4, 23}, {5, 55}, {6, 120}};
const std::map<int, double> kD = {{4, 8}, {5, 10}, {6, 17}, {7, 20}};
const std::map<int, double> kClassicalGtilde = {
    {3, 8},   {4, 16},  {5, 32},  {6, 56},  {7, 112},
    {8, 224}, {9, 365}, {10, 497}, {11, 627}, {12, 771}};
const std::map<int, double> kGtilde = {
    {3, 8},  {4, 16},  {5, 28},  {6, 43},  {7, 61},
    {8, 83}, {9, 107}, {10, 134}, {11, 165}, {12, 199}};

constexpr const char* kClassicalStatus = "classical status of the main conjecture";
constexpr const char* kCongruencingStatus = "main conjecture after efficient congruencing";
constexpr const char* kClassicalWaring = "classical status of the asymptotic formula in Waring's problem";
constexpr const char* kCongruencingWaring = "asymptotic formula in Waring's problem after efficient congruencing";

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view to_string(ExponentKind kind) noexcept {
  switch (kind) {
    case ExponentKind::permissible: return "permissible";
    case ExponentKind::conjectured: return "conjectured";
    case ExponentKind::threshold: return "threshold";
  }
  return "unknown";
}

double classical_delta(int s, int k, int r) {
  require(k >= 2, "k must be at least 2");
  require(r >= 1, "r must be at least 1");
  require(s >= r * k, "classical exponent needs s >= r k");
  return 0.5 * k * k * std::pow(1.0 - 1.0 / k, r);
}

double conjectured_exponent(double s, int k) {
  require(k >= 1 && s > 0, "s and k must be positive");
  return std::max(s, 2 * s - k * (k + 1) / 2.0);
}

double gtilde_cubic_root() {
  auto cubic = [](double x) { return (6 * x + 3) * x * x - 1; };
  double lo = 0.4, hi = 0.5;  // cubic(0.4) < 0 < cubic(0.5)
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    (cubic(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double gtilde_constant() {
  const double xi = gtilde_cubic_root();
  return (5 + 6 * xi - 3 * xi * xi) / (2 + 6 * xi);
}

std::optional<double> c_alpha_bound(double alpha) {
  if (alpha < 5.0 / 8 || alpha > 1.0) return std::nullopt;
  return (2 - 3 * alpha + std::pow(2 * alpha - 1, 1.5)) / (3 * alpha);
}

std::vector<ExponentRecord> ledger(int k) {
  require(k >= 2, "the ledger covers k >= 2");
  using K = ExponentKind;
  std::vector<ExponentRecord> out;
  const double kk = k;
  const double critical_s = kk * (kk + 1) / 2;

  if (auto it = kClassicalH.find(k); it != kClassicalH.end()) {
    out.push_back({"H_classical", k, {}, it->second, K::threshold, kClassicalStatus, true, false});
  } else if (k >= 3) {
    out.push_back({"H_classical", k, {}, kk * kk * (std::log(kk) + 2 * std::log(std::log(kk))),
                   K::threshold, kClassicalStatus, false, true});
  }
  if (k >= 3)
    out.push_back({"H", k, {}, kk * (kk - 1), K::threshold, kCongruencingStatus, false, false});

  if (auto it = kD.find(k); it != kD.end()) {
    out.push_back({"D", k, {}, it->second, K::threshold, kCongruencingStatus, true, false});
  } else if (k > 7) {
    out.push_back({"D", k, {}, critical_s - kk / 3, K::threshold, kCongruencingStatus, false, true});
  }

  if (auto it = kClassicalGtilde.find(k); it != kClassicalGtilde.end()) {
    out.push_back({"Gtilde_classical", k, {}, it->second, K::threshold, kClassicalWaring, true, false});
  } else if (k > 12) {
    out.push_back({"Gtilde_classical", k, {}, kk * kk * std::log(kk), K::threshold,
                   kClassicalWaring, false, true});
  }
  if (auto it = kGtilde.find(k); it != kGtilde.end()) {
    out.push_back({"Gtilde", k, {}, it->second, K::threshold, kCongruencingWaring, true, false});
  } else if (k > 12) {
    out.push_back({"Gtilde", k, {}, gtilde_constant() * kk * kk, K::threshold,
                   kCongruencingWaring, false, true});
  }

  out.push_back({"sigma_weyl", k, {}, std::ldexp(1.0, 1 - k), K::permissible,
                 "Weyl's inequality on the minor arcs", false, false});
  if (k >= 3) {
    out.push_back({"sigma", k, {}, vinogradov_sigma(k), K::permissible,
                   "Weyl-type bound from the mean value theorem", false, false});
    out.push_back({"tau", k, {}, 1.0 / (4.0 * (kk - 1) * (kk - 2)), K::permissible,
                   "polynomial equidistribution modulo one", false, false});
  }
  out.push_back({"Delta_critical", k, critical_s, (1.5 - std::numbers::sqrt2) * kk * kk,
                 K::permissible, "permissible exponent at the critical s", false, true});
  out.push_back({"J_exponent_critical", k, critical_s, conjectured_exponent(critical_s, k),
                 K::conjectured, "main conjecture", false, false});
  out.push_back({"C_general", k, {}, 1.0 / 3, K::permissible,
                 "large-k defect C(s) in the main conjecture", false, true});
  for (const double alpha : {5.0 / 8, 3.0 / 4, 7.0 / 8, 1.0})
    out.push_back({"C_alpha", k, alpha * kk * kk, *c_alpha_bound(alpha), K::permissible,
                   "large-k defect C(alpha k^2)", false, true});
  return out;
}

void write_ledger_csv(std::ostream& out, std::span<const ExponentRecord> records) {
  out << "source,k,s,kind,value,citation\n";
  for (const auto& r : records) {
    out << r.source << ',' << (r.k ? std::to_string(*r.k) : "") << ','
        << (r.s ? format_double(*r.s) : "") << ',' << to_string(r.kind) << ','
        << format_double(r.value) << ',' << r.citation << '\n';
  }
}

J32Constants j32_constants() {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return {18 / pi2,
          3 / pi2 * (12 * euler_gamma() - 6 * zeta_log_derivative_at_2() - 5)};
}

std::vector<J32Row> compare_asymptotic_j32(std::span<const std::int64_t> X_list,
                                           const ComputeOptions& options) {
  const auto c = j32_constants();
  std::vector<J32Row> rows;
  for (const auto X : X_list) {
    const ExactCount exact = count_mean_value({3, 2, X}, Strategy::meet_in_middle, options);
    const double x = static_cast<double>(X);
    const double predicted = c.c1 * x * x * x * std::log(x) + c.c2 * x * x * x;
    rows.push_back({X, exact, predicted, (to_double(exact) - predicted) / predicted,
                    X >= kJ32AsymptoticFloor});
  }
  return rows;
}

}  // namespace vmvt
