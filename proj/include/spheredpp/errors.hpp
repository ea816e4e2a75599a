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

#ifndef SPHEREDPP_ERRORS_HPP
#define SPHEREDPP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spheredpp {

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a removable-only singularity (poles of the stereographic
/// chart, zero vector of a radial map).
class singularity_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A factorization lost positive-definiteness beyond the configured slack.
class degeneracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejection sampling exhausted its per-point proposal budget.
class rejection_budget_error : public std::runtime_error {
 public:
  rejection_budget_error(std::size_t step, long budget)
      : std::runtime_error("rejection budget (" + std::to_string(budget) +
                           ") exhausted at point index " +
                           std::to_string(step)),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// A Monte-Carlo run aborted mid-way; carries the replicates finished so far.
class mc_abort_error : public std::runtime_error {
 public:
  mc_abort_error(const std::string& what, std::vector<double> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const std::vector<double>& partial_results() const noexcept {
    return partial_;
  }

 private:
  std::vector<double> partial_;
};

}  // namespace spheredpp

#endif  // SPHEREDPP_ERRORS_HPP
