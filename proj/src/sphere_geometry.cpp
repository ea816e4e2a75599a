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

#include "spheredpp/sphere_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spheredpp/errors.hpp"
#include "spheredpp/quadrature.hpp"
#include "spheredpp/special_functions.hpp"

namespace spheredpp {

namespace {

constexpr double kPoleGap = 1e-12;
const double kLnHalf = std::log(0.5);

int plane_dim_to_d(const PlanePoint& y) {
  const int n = y.real_dim();
  if (n < 2 || n % 2 != 0) throw domain_error("plane point must live in R^(2d)");
  return n / 2;
}

int sphere_dim_to_d(const SpherePoint& p) {
  const int n = p.ambient_dim();
  if (n < 3 || n % 2 == 0) {
    throw domain_error("sphere point must live in R^(2d+1)");
  }
  return (n - 1) / 2;
}

double squared_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double c : v) acc += c * c;
  return acc;
}

}  // namespace

double norm(const SpherePoint& p) { return std::sqrt(squared_norm(p.coords)); }

double norm(const PlanePoint& y) { return std::sqrt(squared_norm(y.coords)); }

double chordal_distance(const SpherePoint& p, const SpherePoint& q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const double diff = p.coords[i] - q.coords[i];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

SpherePoint slerp(const SpherePoint& p, const SpherePoint& q, double t) {
  double dot = 0.0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    dot += p.coords[i] * q.coords[i];
  }
  dot = std::clamp(dot, -1.0, 1.0);
  const double omega = std::acos(dot);
  SpherePoint out;
  out.coords.resize(p.coords.size());
  if (omega < 1e-12) {
    out = p;
    return out;
  }
  const double sin_omega = std::sin(omega);
  const double wp = std::sin((1.0 - t) * omega) / sin_omega;
  const double wq = std::sin(t * omega) / sin_omega;
  double n2 = 0.0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    out.coords[i] = wp * p.coords[i] + wq * q.coords[i];
    n2 += out.coords[i] * out.coords[i];
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (double& c : out.coords) c *= inv;
  return out;
}

SpherePoint make_sphere_point(std::vector<double> coords) {
  SpherePoint p{std::move(coords)};
  sphere_dim_to_d(p);
  if (std::abs(norm(p) - 1.0) > 1e-12) {
    throw domain_error("sphere point is not unit norm");
  }
  return p;
}

PlanePoint stereographic(const SpherePoint& p) {
  const int d = sphere_dim_to_d(p);
  const double last = p.last();
  if (last >= 1.0 - kPoleGap) {
    throw singularity_error("stereographic projection undefined at the north pole");
  }
  PlanePoint y;
  y.coords.resize(2 * d);
  const double scale = 1.0 / (1.0 - last);
  for (int i = 0; i < 2 * d; ++i) y.coords[i] = p.coords[i] * scale;
  return y;
}

SpherePoint stereographic_inverse(const PlanePoint& y) {
  const int d = plane_dim_to_d(y);
  const double n2 = squared_norm(y.coords);
  SpherePoint p;
  p.coords.resize(2 * d + 1);
  const double denom = n2 + 1.0;
  for (int i = 0; i < 2 * d; ++i) p.coords[i] = 2.0 * y.coords[i] / denom;
  p.coords[2 * d] = (n2 - 1.0) / denom;
  return p;
}

double jacobian_stereographic(const SpherePoint& p) {
  const int d = sphere_dim_to_d(p);
  const double last = p.last();
  if (last >= 1.0 - kPoleGap) {
    throw singularity_error("stereographic Jacobian undefined at the north pole");
  }
  return std::exp(-2.0 * d * std::log1p(-last));
}

double sphere_volume(int n) {
  if (n < 1) throw domain_error("sphere dimension must be >= 1");
  const double half = 0.5 * (n + 1);
  return std::exp(std::numbers::ln2 + half * std::log(std::numbers::pi) -
                  ln_gamma(half));
}

double cap_volume_lower_bound(double r, int n) {
  if (!(r > 0.0)) throw domain_error("cap offset r must be positive");
  if (n < 1) throw domain_error("n must be >= 1");
  const double decay =
      std::exp(-0.5 * r * r * n) * std::sqrt(1.0 + 1.0 / n) / 2.0;
  return sphere_volume(n + 1) * (1.0 - decay);
}

double sublevel_volume(double eps, int d) {
  // eps = 1 is the full-sphere limit; kept valid so the cap chain covers
  // d = 1 where the comparison point is 1/sqrt(d) = 1.
  if (!(eps > -1.0 && eps <= 1.0)) {
    throw domain_error("eps must lie in (-1, 1]");
  }
  if (d < 1) throw domain_error("d must be a positive integer");
  const auto profile = [d](double t) {
    return std::pow(1.0 - t * t, d - 1);
  };
  const double slice = integrate_adaptive(profile, -1.0, eps, 1e-12);
  return sphere_volume(2 * d - 1) * slice;
}

// ----------------------------------------------------------------------------
// RadialMap
// ----------------------------------------------------------------------------

namespace {

double radial_forward_exact(double t, int d) {
  if (!(t > 0.0)) throw domain_error("radial map requires t > 0");
  const BetaParams dd{static_cast<double>(d), static_cast<double>(d)};
  const double log_y = d * (2.0 * std::log(t) - std::log1p(t * t));
  if (log_y <= kLnHalf) {
    const double xi = log_inverse_regularized_incomplete_beta(log_y, dd);
    return std::exp(0.5 * (xi - std::log1p(-std::exp(xi))));
  }
  // Solve for the complement; keeps 1 - x accurate when x -> 1.
  const double u = 1.0 / (1.0 + t * t);
  const double ybar = -std::expm1(static_cast<double>(d) * std::log1p(-u));
  const double xiw =
      log_inverse_regularized_incomplete_beta(std::log(ybar), dd);
  const double w = std::exp(xiw);
  return std::exp(0.5 * (std::log1p(-w) - xiw));
}

// ln I_{s^2/(1+s^2)}(d, d), stable across the whole range of s.
double log_i_of_radius(double s, int d) {
  const BetaParams dd{static_cast<double>(d), static_cast<double>(d)};
  if (s <= 1.0) {
    const double u = s * s / (1.0 + s * s);
    return log_regularized_incomplete_beta(u, dd);
  }
  const double v = 1.0 / (1.0 + s * s);
  const double comp = regularized_incomplete_beta(v, dd);
  return std::log1p(-comp);
}

double radial_inverse_exact(double s, int d) {
  if (!(s > 0.0)) throw domain_error("radial map inverse requires s > 0");
  const double log_i = log_i_of_radius(s, d);
  const double log_root = log_i / d;                  // ln I^(1/d)
  const double one_minus_root = -std::expm1(log_root);
  return std::exp(0.5 * (log_root - std::log(one_minus_root)));
}

double radial_inverse_derivative_exact(double s, int d) {
  if (!(s > 0.0)) throw domain_error("radial map inverse requires s > 0");
  const double dd = static_cast<double>(d);
  const double log_i = log_i_of_radius(s, d);
  const double log_root = log_i / dd;
  const double one_minus_root = -std::expm1(log_root);

  const double log_u = 2.0 * std::log(s) - std::log1p(s * s);
  const double log_v = -std::log1p(s * s);
  const double log_dens =
      (dd - 1.0) * (log_u + log_v) - ln_beta(dd, dd);       // ln I'(u)
  const double log_du =
      std::numbers::ln2 + std::log(s) - 2.0 * std::log1p(s * s);

  // A = I^(1/d); A' = (A / (d I)) I'(u) u'(s).
  const double log_droot =
      log_root - std::log(dd) - log_i + log_dens + log_du;
  return std::exp(log_droot - std::numbers::ln2 -
                  1.5 * std::log(one_minus_root) - 0.5 * log_root);
}

}  // namespace

struct RadialMap::Cache {
  double lo;    // ln t at the first knot
  double step;  // knot spacing in ln t
  std::vector<double> value;  // ln g at knots
  std::vector<double> slope;  // d(ln g)/d(ln t) at knots
};

RadialMap::RadialMap(int d) : d_(d) {
  if (d < 1) throw domain_error("radial map dimension must be >= 1");
}

double RadialMap::forward_exact(double t) const {
  return radial_forward_exact(t, d_);
}

double RadialMap::forward(double t) const {
  if (d_ == 1) {
    // The defining relation collapses to the identity at d = 1.
    if (!(t > 0.0)) throw domain_error("radial map requires t > 0");
    return t;
  }
  if (cache_) {
    const double lx = std::log(t > 0.0 ? t : 0.0);
    const auto& c = *cache_;
    const double hi = c.lo + c.step * (c.value.size() - 1);
    if (lx >= c.lo && lx <= hi) {
      const double pos = (lx - c.lo) / c.step;
      std::size_t i = std::min(static_cast<std::size_t>(pos),
                               c.value.size() - 2);
      const double u = (lx - (c.lo + c.step * i)) / c.step;
      const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
      const double h10 = u * (1.0 - u) * (1.0 - u);
      const double h01 = u * u * (3.0 - 2.0 * u);
      const double h11 = u * u * (u - 1.0);
      const double val = h00 * c.value[i] + h10 * c.step * c.slope[i] +
                         h01 * c.value[i + 1] + h11 * c.step * c.slope[i + 1];
      return std::exp(val);
    }
  }
  return forward_exact(t);
}

double RadialMap::inverse(double s) const {
  if (d_ == 1) {
    if (!(s > 0.0)) throw domain_error("radial map inverse requires s > 0");
    return s;
  }
  return radial_inverse_exact(s, d_);
}

double RadialMap::inverse_derivative(double s) const {
  if (d_ == 1) {
    if (!(s > 0.0)) throw domain_error("radial map inverse requires s > 0");
    return 1.0;
  }
  return radial_inverse_derivative_exact(s, d_);
}

void RadialMap::enable_cache() {
  if (cache_) return;
  constexpr std::size_t n = 10000;
  auto cache = std::make_shared<Cache>();
  cache->lo = std::log(1e-3);
  const double hi = std::log(1e3);
  cache->step = (hi - cache->lo) / static_cast<double>(n - 1);
  cache->value.resize(n);
  cache->slope.resize(n);
  const double dd = static_cast<double>(d_);
  const double log_db = std::log(dd) + ln_beta(dd, dd);
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = cache->lo + cache->step * i;
    const double t = std::exp(lx);
    const double g = forward_exact(t);
    const double lg = std::log(g);
    // d(ln g)/d(ln t) = t g'(t) / g with g' from the defining ODE.
    const double log_g2p1 = (g > 1.0)
                                ? 2.0 * lg + std::log1p(1.0 / (g * g))
                                : std::log1p(g * g);
    const double log_dg = log_db + (2.0 * dd - 1.0) * lx -
                          (dd + 1.0) * std::log1p(t * t) +
                          2.0 * dd * log_g2p1 - (2.0 * dd - 1.0) * lg;
    cache->value[i] = lg;
    cache->slope[i] = std::exp(log_dg + lx - lg);
  }
  // Monotone safeguard: clamp slopes against the secants (Fritsch-Carlson).
  for (std::size_t i = 0; i < n; ++i) {
    double limit = std::numeric_limits<double>::infinity();
    if (i > 0) {
      limit = std::min(limit,
                       3.0 * (cache->value[i] - cache->value[i - 1]) /
                           cache->step);
    }
    if (i + 1 < n) {
      limit = std::min(limit,
                       3.0 * (cache->value[i + 1] - cache->value[i]) /
                           cache->step);
    }
    cache->slope[i] = std::clamp(cache->slope[i], 0.0, limit);
  }
  cache_ = std::move(cache);
}

PlanePoint RadialMap::apply(const PlanePoint& x) const {
  const int d = plane_dim_to_d(x);
  if (d != d_) throw domain_error("plane point dimension mismatch");
  const double r = norm(x);
  if (!(r > 0.0)) {
    throw singularity_error("radial map undefined at the origin");
  }
  const double scale = forward(r) / r;
  PlanePoint out = x;
  for (double& c : out.coords) c *= scale;
  return out;
}

PlanePoint RadialMap::apply_inverse(const PlanePoint& y) const {
  const int d = plane_dim_to_d(y);
  if (d != d_) throw domain_error("plane point dimension mismatch");
  const double r = norm(y);
  if (!(r > 0.0)) {
    throw singularity_error("radial map inverse undefined at the origin");
  }
  const double scale = inverse(r) / r;
  PlanePoint out = y;
  for (double& c : out.coords) c *= scale;
  return out;
}

SpherePoint push_to_sphere(const PlanePoint& z, int d) {
  if (plane_dim_to_d(z) != d) throw domain_error("plane point dimension mismatch");
  const double r = norm(z);
  if (r == 0.0) {
    SpherePoint south;
    south.coords.assign(2 * d + 1, 0.0);
    south.coords.back() = -1.0;
    return south;
  }
  return stereographic_inverse(RadialMap(d).apply(z));
}

SpherePoint upper_hemisphere_map(const SpherePoint& p, int d) {
  if (sphere_dim_to_d(p) != d) throw domain_error("sphere point dimension mismatch");
  const PlanePoint y = stereographic(p);
  const double r = norm(y);
  std::vector<double> w(2 * d, 0.0);
  if (r > 0.0) {
    const double scale = RadialMap(d).inverse(r) / r;
    for (int i = 0; i < 2 * d; ++i) w[i] = y.coords[i] * scale;
  }
  double n2 = 1.0;
  for (double c : w) n2 += c * c;
  const double inv = 1.0 / std::sqrt(n2);
  SpherePoint out;
  out.coords.resize(2 * d + 1);
  for (int i = 0; i < 2 * d; ++i) out.coords[i] = w[i] * inv;
  out.coords[2 * d] = inv;
  return out;
}

double jacobian_radial_inverse(const PlanePoint& y, int d) {
  if (plane_dim_to_d(y) != d) throw domain_error("plane point dimension mismatch");
  const double r = norm(y);
  if (!(r > 0.0)) {
    throw singularity_error("radial Jacobian undefined at the origin");
  }
  const RadialMap map(d);
  const double ratio_log = std::log(map.inverse(r)) - std::log(r);
  return map.inverse_derivative(r) * std::exp((2.0 * d - 1.0) * ratio_log);
}

MapDerivativeNorms upper_map_derivative_norms(const SpherePoint& p, int d) {
  if (sphere_dim_to_d(p) != d) throw domain_error("sphere point dimension mismatch");
  const double last = p.last();
  if (std::abs(last) >= 1.0 - kPoleGap) {
    throw singularity_error("derivative norms undefined at the poles");
  }
  const double r = std::sqrt((1.0 + last) / (1.0 - last));
  const RadialMap map(d);
  const double ginv = map.inverse(r);
  const double dginv = map.inverse_derivative(r);
  const double one_plus_g2 = 1.0 + ginv * ginv;
  MapDerivativeNorms out;
  out.tangential =
      (ginv / std::hypot(1.0, ginv)) / std::sqrt(1.0 - last * last);
  out.radial = dginv / (one_plus_g2 * (1.0 - last));
  return out;
}

}  // namespace spheredpp
