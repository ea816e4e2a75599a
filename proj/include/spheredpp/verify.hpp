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

#ifndef SPHEREDPP_VERIFY_HPP
#define SPHEREDPP_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace spheredpp {

/// One line of a verification suite: `name status value tolerance`.
/// `value` is the worst margin observed by the check and `tolerance` the
/// threshold it was held against; the direction (upper or lower bound) is
/// folded into `pass`.
struct CheckResult {
  std::string name;
  bool pass;
  double value;
  double tolerance;
};

/// Hooks for fault-injection in tests; default-constructed hooks verify the
/// real implementation.
struct VerifyHooks {
  /// Overrides the radial profile g_d(t) used by the geometry ODE and
  /// monotonicity checks.
  std::function<double(double, int)> radial_forward;
};

std::vector<CheckResult> verify_beta_suite();
std::vector<CheckResult> verify_geometry_suite(const VerifyHooks& hooks = {});
std::vector<CheckResult> verify_kernel_suite();
std::vector<CheckResult> verify_sampler_suite();
std::vector<CheckResult> verify_energy_suite();

/// Runs the suite by name ("beta", "geometry", "kernel", "sampler",
/// "energy" or "all").
std::vector<CheckResult> verify_suite(const std::string& name);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace spheredpp

#endif  // SPHEREDPP_VERIFY_HPP
