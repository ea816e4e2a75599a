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

#ifndef SPHEREDPP_STATS_HPP
#define SPHEREDPP_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace spheredpp {

/// Upper regularized incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

struct ChiSquareResult {
  double statistic;
  int dof;
  double p_value;
};

/// Pearson chi-square of observed counts against expected counts
/// (dof = cells - 1).
ChiSquareResult chi_square_test(std::span<const double> observed,
                                std::span<const double> expected);

struct KsResult {
  double statistic;
  double p_value;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// One-sided Welch t-test p-value for the alternative mean(a) > mean(b).
double welch_t_pvalue_greater(std::span<const double> a,
                              std::span<const double> b);

double mean(std::span<const double> xs);
double sample_stddev(std::span<const double> xs);

}  // namespace spheredpp

#endif  // SPHEREDPP_STATS_HPP
