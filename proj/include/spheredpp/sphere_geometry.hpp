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

#ifndef SPHEREDPP_SPHERE_GEOMETRY_HPP
#define SPHEREDPP_SPHERE_GEOMETRY_HPP

#include <memory>
#include <vector>

namespace spheredpp {

/// Point on S^(2d) embedded in R^(2d+1); coords.size() == 2d + 1 and the
/// Euclidean norm is 1 within 1e-12.
struct SpherePoint {
  std::vector<double> coords;

  int ambient_dim() const { return static_cast<int>(coords.size()); }
  double last() const { return coords.back(); }
};

/// Point of C^d identified with R^(2d): (Re z1, Im z1, ..., Re zd, Im zd).
struct PlanePoint {
  std::vector<double> coords;

  int real_dim() const { return static_cast<int>(coords.size()); }
};

double norm(const SpherePoint& p);
double norm(const PlanePoint& y);
double chordal_distance(const SpherePoint& p, const SpherePoint& q);

/// Arc-length parameterized point on the geodesic from p to q, t in [0, 1].
SpherePoint slerp(const SpherePoint& p, const SpherePoint& q, double t);

/// Validates the unit-norm invariant (1e-12) and the odd ambient dimension.
SpherePoint make_sphere_point(std::vector<double> coords);

/// Stereographic projection from the north pole (0, ..., 0, 1).
/// Throws singularity_error when p.last() >= 1 - 1e-12.
PlanePoint stereographic(const SpherePoint& p);

/// Inverse stereographic projection; the origin maps to the south pole.
SpherePoint stereographic_inverse(const PlanePoint& y);

/// Jacobian determinant of the stereographic projection at p:
/// (1 - p_last)^(-2d).
double jacobian_stereographic(const SpherePoint& p);

/// Surface volume of the unit sphere S^n.
double sphere_volume(int n);

/// Lower bound for the volume of the spherical cap of radius pi/2 + r in
/// S^(n+1): Vol(S^(n+1)) (1 - e^(-r^2 n / 2) sqrt(1 + 1/n) / 2).
double cap_volume_lower_bound(double r, int n);

/// Volume of { p in S^(2d) : p_last <= eps } computed by adaptive
/// quadrature of the slice profile, relative error <= 1e-10.
double sublevel_volume(double eps, int d);

/// The radial reweighting of the plane that makes the pushed-forward point
/// process homogeneous on S^(2d). For d = 1 it is the identity.
///
/// forward(t) solves the defining relation
///   I_{g^2/(1+g^2)}(d, d) = (t^2/(1+t^2))^d
/// for g, and inverse(s) evaluates the closed form in the opposite
/// direction. enable_cache() installs a monotone cubic interpolant of
/// forward() on t in [1e-3, 1e3] (1e4 knots, slopes from the exact ODE);
/// the cache is immutable once built and agrees with the exact path to
/// 1e-9 relative.
class RadialMap {
 public:
  explicit RadialMap(int d);

  int dim() const { return d_; }

  /// g_d(t) for t > 0; strictly increasing, g(0+) = 0, g(t) -> infinity.
  double forward(double t) const;

  /// Inverse map; satisfies forward(inverse(s)) = s.
  double inverse(double s) const;

  /// Analytic derivative of the inverse map (no finite differences).
  double inverse_derivative(double s) const;

  /// Applies x -> forward(|x|) x / |x| componentwise in R^(2d).
  PlanePoint apply(const PlanePoint& x) const;

  /// Applies y -> inverse(|y|) y / |y|.
  PlanePoint apply_inverse(const PlanePoint& y) const;

  /// Builds the interpolation cache; call before any parallel use.
  void enable_cache();
  bool cache_enabled() const { return cache_ != nullptr; }

  /// Exact evaluation through the generic beta solve, bypassing both the
  /// cache and the d = 1 closed form; the reference path for tests.
  double forward_exact(double t) const;

 private:
  int d_;
  struct Cache;
  std::shared_ptr<const Cache> cache_;
};

/// Transports a plane point onto the sphere through the homogenized chart:
/// inverse stereographic of the radially reweighted point. z = 0 extends by
/// continuity to the south pole.
SpherePoint push_to_sphere(const PlanePoint& z, int d);

/// Contraction of S^(2d) into its open upper half used by the kernel lower
/// bound: normalize (w, 1) where w is the radially unweighted chart image
/// of p. The south pole maps to (0, ..., 0, 1).
SpherePoint upper_hemisphere_map(const SpherePoint& p, int d);

/// Jacobian determinant of the inverse radial reweighting at y != 0:
/// inverse'(|y|) * (inverse(|y|)/|y|)^(2d-1).
double jacobian_radial_inverse(const PlanePoint& y, int d);

/// Norms of the derivative of upper_hemisphere_map along the two invariant
/// directions at p (p != both poles). tangential applies to the 2d-1
/// directions orthogonal to the pole axis, radial to the remaining one;
/// tangential >= radial everywhere, and their max is the operator norm.
struct MapDerivativeNorms {
  double tangential;
  double radial;
};
MapDerivativeNorms upper_map_derivative_norms(const SpherePoint& p, int d);

}  // namespace spheredpp

#endif  // SPHEREDPP_SPHERE_GEOMETRY_HPP
