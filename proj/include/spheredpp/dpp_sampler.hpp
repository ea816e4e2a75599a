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

#ifndef SPHEREDPP_DPP_SAMPLER_HPP
#define SPHEREDPP_DPP_SAMPLER_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "spheredpp/ensemble_kernel.hpp"
#include "spheredpp/rng.hpp"
#include "spheredpp/sphere_geometry.hpp"
#include "spheredpp/stats.hpp"

namespace spheredpp {

struct SamplerConfig {
  EnsembleParams params;
  std::uint64_t seed = 0;
  long max_rejections_per_point = 10'000'000;
};

/// One exact draw of the ensemble: N unit points plus provenance.
struct Configuration {
  EnsembleParams params;
  std::uint64_t seed = 0;
  long rejection_count = 0;
  std::vector<SpherePoint> points;
};

/// Incremental state of the sequential conditional sampler: the accepted
/// points and the Cholesky factor of their kernel Gram matrix, kept in the
/// scale-free normalization G_ij = K(x_i, x_j) / K(x, x) so every entry has
/// modulus at most one regardless of L.
class SchurState {
 public:
  explicit SchurState(EnsembleParams params);

  const Kernel& kernel() const { return kernel_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<SpherePoint>& points() const { return points_; }

  /// K_k(x, x) / K(x, x) in [0, 1]: one minus the squared norm of the
  /// forward-substitution solve against the cross-kernel vector.
  double normalized_conditional(const PlaneCoords& x) const;
  double normalized_conditional(const SpherePoint& x) const;

  /// Accepts a point, extending the triangular factor by one row. Falls back
  /// to a full refactorization when the new pivot drops below 1e-8 of the
  /// unit diagonal and throws degeneracy_error if that does not recover it.
  void accept(const SpherePoint& p);

 private:
  std::vector<std::complex<double>> cross_vector(const PlaneCoords& x) const;
  double forward_solve(std::vector<std::complex<double>>& y) const;
  void refactorize();

  Kernel kernel_;
  std::vector<SpherePoint> points_;
  std::vector<PlaneCoords> coords_;
  // Row-major lower triangular factor of the normalized Gram matrix.
  std::vector<std::complex<double>> chol_;
};

/// Conditional intensity K_k(x, x) given the accepted points of state; lies
/// in [0, K(x, x)] and vanishes at already-accepted points.
double conditional_intensity(const SpherePoint& x, const SchurState& state);

/// Exact sampler: sequential conditional sampling with uniform-proposal
/// rejection (the diagonal envelope is exact because the kernel is a
/// homogeneous projection). Identical seeds give bit-identical output.
Configuration sample(const SamplerConfig& config);

/// Reference sampler for d = 1: generalized eigenvalues of a complex
/// Gaussian matrix pencil pushed to S^2 by inverse stereographic projection.
Configuration eigenvalue_sampler_d1(int n, std::uint64_t seed);

/// Uniform point on S^(2d) from 2d+1 normalized Gaussians; redraws inside
/// the pole clamp |p_last| > 1 - 1e-10.
SpherePoint uniform_sphere_point(Rng& rng, int d);

/// Index of p in an equal-volume partition of S^(2d): slabs of the last
/// coordinate, refined by the sign quadrant of (p_1, p_2) when the cell
/// count is divisible by four.
int equal_area_cell_index(const SpherePoint& p, int d, int cells);

/// Pooled chi-square of per-cell counts against the uniform expectation over
/// an equal-volume partition. Requires at least 100 configurations.
ChiSquareResult intensity_uniformity_test(std::span<const Configuration> configs,
                                          int cells);

}  // namespace spheredpp

#endif  // SPHEREDPP_DPP_SAMPLER_HPP
