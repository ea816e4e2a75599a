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

#ifndef SPHEREDPP_ENSEMBLE_KERNEL_HPP
#define SPHEREDPP_ENSEMBLE_KERNEL_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "spheredpp/sphere_geometry.hpp"

namespace spheredpp {

/// Parameters of the N-point ensemble on S^(2d): N = C(d + L, d).
struct EnsembleParams {
  int d;
  long L;
  std::int64_t N;
};

/// Builds params with an overflow-checked integer binomial.
EnsembleParams make_params(int d, long L);

/// Exponent vector (alpha_1, ..., alpha_d) with |alpha| <= L.
struct MultiIndex {
  std::vector<long> alpha;
};

/// All C(d+L, d) multi-indices in graded lexicographic order.
std::vector<MultiIndex> enumerate_multi_indices(int d, long L);

/// Kernel value K = exp(log_modulus + i phase); phase in (-pi, pi].
struct KernelValue {
  double log_modulus;
  double phase;

  std::complex<double> to_complex() const {
    const double mod = std::exp(log_modulus);
    return {mod * std::cos(phase), mod * std::sin(phase)};
  }
};

/// Plane coordinates of a sphere point under the homogenized chart, with the
/// log factor the kernel keeps reusing. Cached per configuration point; must
/// match recomputation bit for bit.
struct PlaneCoords {
  PlanePoint z;
  double log_one_plus_norm_sq;
};

/// Closed-form kernel of the homogeneous projection ensemble on S^(2d),
/// evaluated entirely in log-modulus/phase form: the (1 + <z,w>)^L factor
/// overflows the linear scale long before the degrees used in the energy
/// experiments.
///
/// The Hermitian inner product is conjugate-linear in its second argument.
class Kernel {
 public:
  explicit Kernel(EnsembleParams params);

  const EnsembleParams& params() const { return params_; }

  /// ln K(p, p); constant over the sphere, equal to ln(N / Vol(S^(2d))).
  double log_diagonal() const { return log_diag_; }

  PlaneCoords plane_coords(const SpherePoint& p) const;

  KernelValue sphere(const SpherePoint& p, const SpherePoint& q) const;
  KernelValue sphere(const PlaneCoords& p, const PlaneCoords& q) const;

  /// Kernel of the weighted polynomial space on C^d that the sphere process
  /// pushes forward.
  KernelValue plane(const PlanePoint& z, const PlanePoint& w) const;

  /// (|K(p,q)| / K(p,p))^2 in [0, 1]; equals 1 at p = q.
  double normalized_sq(const SpherePoint& p, const SpherePoint& q) const;
  double normalized_sq(const PlaneCoords& p, const PlaneCoords& q) const;

  /// Lower bound max{(1 - |phi(p) - phi(q)|^2)^L, 0} for normalized_sq,
  /// with phi the upper-hemisphere contraction.
  double normalized_sq_lower_bound(const SpherePoint& p,
                                   const SpherePoint& q) const;

 private:
  EnsembleParams params_;
  RadialMap radial_;
  double log_diag_;
};

}  // namespace spheredpp

#endif  // SPHEREDPP_ENSEMBLE_KERNEL_HPP
