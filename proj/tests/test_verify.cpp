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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spheredpp/errors.hpp"
#include "spheredpp/sphere_geometry.hpp"
#include "spheredpp/verify.hpp"

using namespace spheredpp;

TEST_CASE("every verification suite passes") {
  for (const char* suite : {"beta", "geometry", "kernel", "sampler", "energy"}) {
    CAPTURE(suite);
    const auto results = verify_suite(suite);
    REQUIRE(!results.empty());
    for (const auto& r : results) {
      CAPTURE(r.name);
      CAPTURE(r.value);
      CAPTURE(r.tolerance);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("the aggregate suite concatenates all module suites") {
  const auto all = verify_suite("all");
  std::size_t total = 0;
  for (const char* suite : {"beta", "geometry", "kernel", "sampler", "energy"}) {
    total += verify_suite(suite).size();
  }
  CHECK(all.size() == total);
  CHECK(all_passed(all));
  CHECK_THROWS_AS(verify_suite("bogus"), domain_error);
}

TEST_CASE("a perturbed radial profile fails the geometry suite") {
  VerifyHooks hooks;
  hooks.radial_forward = [](double t, int d) {
    return RadialMap(d).forward(t) * (1.0 + 0.02 * std::sin(3.0 * t));
  };
  const auto results = verify_geometry_suite(hooks);
  CHECK_FALSE(all_passed(results));
  bool ode_failed = false;
  for (const auto& r : results) {
    if (r.name == "geometry.radial_ode_residual") ode_failed = !r.pass;
  }
  CHECK(ode_failed);
}
