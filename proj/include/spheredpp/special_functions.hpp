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

#ifndef SPHEREDPP_SPECIAL_FUNCTIONS_HPP
#define SPHEREDPP_SPECIAL_FUNCTIONS_HPP

namespace spheredpp {

/// Positive shape parameters of the beta family.
struct BetaParams {
  double a;
  double b;
};

/// ln Gamma(x) for x > 0, accurate to at least 13 significant digits.
double ln_gamma(double x);

/// ln B(a, b); evaluated in log space so large shapes cannot overflow.
double ln_beta(double a, double b);

/// Complete beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
double beta(const BetaParams& p);

/// Lower incomplete beta B_x(a, b) = int_0^x t^(a-1) (1-t)^(b-1) dt.
double incomplete_beta(double x, const BetaParams& p);

/// Regularized incomplete beta I_x(a, b) = B_x(a, b) / B(a, b).
double regularized_incomplete_beta(double x, const BetaParams& p);

/// ln I_x(a, b), with full relative accuracy even where I_x underflows the
/// linear scale.
double log_regularized_incomplete_beta(double x, const BetaParams& p);

/// Solves I_x(a, b) = y for x in [0, 1]; strictly monotone in y.
double inverse_regularized_incomplete_beta(double y, const BetaParams& p);

/// Same inverse, taking ln y; exact route for arguments far below the
/// linear-scale floor.
double inverse_regularized_incomplete_beta_from_log(double log_y,
                                                    const BetaParams& p);

/// Returns log x where I_x(a, b) = exp(log_y). Keeps the solution
/// representable when x itself would be denormal.
double log_inverse_regularized_incomplete_beta(double log_y,
                                               const BetaParams& p);

/// d B_s(d,d) sqrt(1 - I_s(d,d)^(1/d)) - s^d (1-s)^d. Nonnegative on [0,1],
/// zero exactly at the endpoints.
double beta_inequality_residual(double s, int d);

/// Auxiliary function whose nonnegativity on (0,1) underpins the beta
/// inequality:
///   d B_s(d,d) + s^d (1-s)^d (d - 2ds - sqrt(d^2 (1-2s)^2 + 1 + 2d)).
double beta_inequality_auxiliary(double s, int d);

}  // namespace spheredpp

#endif  // SPHEREDPP_SPECIAL_FUNCTIONS_HPP
