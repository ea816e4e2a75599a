// Copyright 2026 The spheredpp authors
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

#include "spheredpp/stats.hpp"

#include <algorithm>
#include <cmath>

#include "spheredpp/errors.hpp"
#include "spheredpp/special_functions.hpp"

namespace spheredpp {

namespace {

// Series expansion of P(a, x), good for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - ln_gamma(a));
}

// Continued fraction for Q(a, x), good for x >= a + 1 (modified Lentz).
double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - ln_gamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw domain_error("gamma_q requires a > 0, x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

ChiSquareResult chi_square_test(std::span<const double> observed,
                                std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.size() < 2) {
    throw domain_error("chi-square needs matching cell arrays of size >= 2");
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(expected[i] > 0.0)) throw domain_error("expected counts must be positive");
    const double diff = observed[i] - expected[i];
    stat += diff * diff / expected[i];
  }
  const int dof = static_cast<int>(observed.size()) - 1;
  return {stat, dof, gamma_q(0.5 * dof, 0.5 * stat)};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw domain_error("KS test needs at least two samples per side");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  const double lambda = (ne + 0.12 + 0.11 / ne) * d;
  // Asymptotic Kolmogorov tail sum.
  double p = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    p += 2.0 * sign * term;
    sign = -sign;
    if (term < 1e-10) break;
  }
  p = std::clamp(p, 0.0, 1.0);
  return {d, p};
}

double mean(std::span<const double> xs) {
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
  const double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

double welch_t_pvalue_greater(std::span<const double> a,
                              std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw domain_error("t-test needs at least two samples per side");
  }
  const double ma = mean(a), mb = mean(b);
  const double va = sample_stddev(a), vb = sample_stddev(b);
  const double sa2 = va * va / a.size();
  const double sb2 = vb * vb / b.size();
  const double t = (ma - mb) / std::sqrt(sa2 + sb2);
  const double df = (sa2 + sb2) * (sa2 + sb2) /
                    (sa2 * sa2 / (a.size() - 1) + sb2 * sb2 / (b.size() - 1));
  // Student tail via the regularized incomplete beta.
  const double x = df / (df + t * t);
  const double tail =
      0.5 * regularized_incomplete_beta(x, {0.5 * df, 0.5});
  return t > 0.0 ? tail : 1.0 - tail;
}

}  // namespace spheredpp
