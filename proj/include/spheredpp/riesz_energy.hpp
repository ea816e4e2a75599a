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

#ifndef SPHEREDPP_RIESZ_ENERGY_HPP
#define SPHEREDPP_RIESZ_ENERGY_HPP

#include <span>
#include <vector>

#include "spheredpp/dpp_sampler.hpp"
#include "spheredpp/ensemble_kernel.hpp"
#include "spheredpp/sphere_geometry.hpp"

namespace spheredpp {

/// Riesz exponent paired with the ensemble dimension; the bound formulas
/// need 0 < s < 2d, plain energy evaluation allows any s > 0.
struct EnergySpec {
  double s;
  int d;
};

/// sum_{i != j} |x_i - x_j|^(-s), compensated summation over ordered pairs.
/// Throws if two points come closer than 1e-14.
double riesz_energy(std::span<const SpherePoint> points, double s);

/// Continuous s-energy of the normalized uniform measure on S^n:
/// V_s(S^n) = 2^(n-s-1) Gamma((n+1)/2) Gamma((n-s)/2) / (sqrt(pi)
/// Gamma(n - s/2)), for 0 < s < n.
double continuous_energy(double s, int n);

/// Upper bound for the expected s-energy of the ensemble at window
/// parameter tau, valid for 0 < tau < 1 - 1/sqrt(d) (so d >= 2):
///   N^2 V_s(S^(2d)) - N^2 Vol(S^(2d-1)) / ((2d - s) Vol(S^(2d)))
///     (1 - tau^2/4)^(d-1) tau^(2d-s)
///     (1 - tau^2 (1+tau^2)^2 / (1 - (1/sqrt(d) + tau)^2))^L
///     (1 - e^(-1 + 1/(2d)) / (2 sqrt(1 - 1/(2d)))).
double expected_energy_bound(const EnsembleParams& params, double s, double tau);

/// The tau maximizing the subtracted term (so minimizing expected_energy_bound) over the
/// admissible window.
double optimal_bound_tau(const EnsembleParams& params, double s);

/// Maximizer of C -> C^(d - s/2) e^(-dC/(d-1)): C = d - 1 - (d-1) s / (2d).
/// Returns 0 at d = 1, where the downstream coefficient degenerates.
double optimal_rate_constant(int d, double s);

/// Coefficient of N^(1 + s/(2d)) in the second-order energy expansion of
/// this ensemble; requires d >= 2.
double ensemble_energy_coefficient(int d, double s);

/// Coefficient of N^(1 + s/dim) for the harmonic ensemble on S^dim.
double harmonic_energy_coefficient(int dim, double s);

/// Coefficient of the 2-energy expansion from the projective construction
/// on odd-dimensional spheres, for comparison tables.
double projective_two_energy_coefficient(int d);

/// Bound summary evaluated once per (params, s); tau is the optimizer.
struct BoundReport {
  double v_s;
  double expected_energy_bound;
  double ensemble_coefficient;
  double harmonic_coefficient;
  double tau;
  double rate_constant;
};

BoundReport make_bound_report(const EnsembleParams& params, double s);

/// Monte-Carlo estimate of the expected s-energy over independent draws.
struct McEnergy {
  double mean;
  double std_error;
  std::vector<double> replicates;
};

/// Runs `replicates` independent draws with seeds derived from
/// (config.seed, replicate index); deterministic for fixed (seed,
/// replicates) regardless of thread count. threads = 0 picks the hardware
/// concurrency. Sampler failures abort with mc_abort_error carrying the
/// finished replicates.
McEnergy expected_energy_mc(const SamplerConfig& config, double s,
                            int replicates, int threads = 0);

/// Derived per-replicate seed, shared by the sampler-facing entry points.
std::uint64_t derive_replicate_seed(std::uint64_t seed, int replicate);

}  // namespace spheredpp

#endif  // SPHEREDPP_RIESZ_ENERGY_HPP
