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

#include "spheredpp/ensemble_kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "spheredpp/errors.hpp"
#include "spheredpp/special_functions.hpp"

namespace spheredpp {

namespace {

std::int64_t checked_binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (long i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step.
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw domain_error("binomial coefficient overflows 64-bit integer");
    }
    result = result * factor / static_cast<std::uint64_t>(i);
  }
  if (result > static_cast<std::uint64_t>(
                   std::numeric_limits<std::int64_t>::max())) {
    throw domain_error("binomial coefficient overflows 64-bit integer");
  }
  return static_cast<std::int64_t>(result);
}

// Wraps an angle into (-pi, pi].
double wrap_phase(double phi) {
  double w = std::remainder(phi, 2.0 * std::numbers::pi);
  if (w <= -std::numbers::pi) w = std::numbers::pi;
  return w;
}

// <z, w> = sum_j z_j conj(w_j) on the (Re, Im) interleaved layout.
std::complex<double> hermitian_inner(const PlanePoint& z, const PlanePoint& w) {
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j + 1 < z.real_dim(); j += 2) {
    const std::complex<double> zj{z.coords[j], z.coords[j + 1]};
    const std::complex<double> wj{w.coords[j], w.coords[j + 1]};
    acc += zj * std::conj(wj);
  }
  return acc;
}

}  // namespace

EnsembleParams make_params(int d, long L) {
  if (d < 1) throw domain_error("ensemble dimension d must be >= 1");
  if (L < 0) throw domain_error("degree L must be >= 0");
  return {d, L, checked_binomial(d + L, d)};
}

std::vector<MultiIndex> enumerate_multi_indices(int d, long L) {
  if (d < 1) throw domain_error("d must be >= 1");
  if (L < 0) throw domain_error("L must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(checked_binomial(d + L, d)));
  std::vector<long> alpha(d, 0);
  // Graded order outermost, lexicographic within a degree.
  for (long deg = 0; deg <= L; ++deg) {
    // Enumerate alpha with |alpha| = deg in lexicographic order.
    auto rec = [&](auto&& self, int pos, long rem) -> void {
      if (pos == d - 1) {
        alpha[pos] = rem;
        out.push_back({alpha});
        return;
      }
      for (long v = 0; v <= rem; ++v) {
        alpha[pos] = v;
        self(self, pos + 1, rem - v);
      }
    };
    rec(rec, 0, deg);
  }
  return out;
}

Kernel::Kernel(EnsembleParams params)
    : params_(params), radial_(params.d) {
  const double log_vol = std::log(sphere_volume(2 * params_.d));
  log_diag_ = std::log(static_cast<double>(params_.N)) - log_vol;
}

PlaneCoords Kernel::plane_coords(const SpherePoint& p) const {
  PlaneCoords pc;
  pc.z = radial_.apply_inverse(stereographic(p));
  double n2 = 0.0;
  for (double c : pc.z.coords) n2 += c * c;
  pc.log_one_plus_norm_sq = std::log1p(n2);
  return pc;
}

KernelValue Kernel::sphere(const SpherePoint& p, const SpherePoint& q) const {
  return sphere(plane_coords(p), plane_coords(q));
}

KernelValue Kernel::sphere(const PlaneCoords& p, const PlaneCoords& q) const {
  const std::complex<double> ip =
      1.0 + hermitian_inner(p.z, q.z);
  const double L = static_cast<double>(params_.L);
  KernelValue out;
  if (ip == std::complex<double>{0.0, 0.0}) {
    out.log_modulus = -std::numeric_limits<double>::infinity();
    out.phase = 0.0;
    return out;
  }
  out.log_modulus =
      log_diag_ + L * std::log(std::abs(ip)) -
      0.5 * L * (p.log_one_plus_norm_sq + q.log_one_plus_norm_sq);
  out.phase = wrap_phase(L * std::arg(ip));
  return out;
}

KernelValue Kernel::plane(const PlanePoint& z, const PlanePoint& w) const {
  if (z.real_dim() != 2 * params_.d || w.real_dim() != 2 * params_.d) {
    throw domain_error("plane point dimension mismatch");
  }
  double zn = 0.0, wn = 0.0;
  for (double c : z.coords) zn += c * c;
  for (double c : w.coords) wn += c * c;
  const std::complex<double> ip = 1.0 + hermitian_inner(z, w);
  const double L = static_cast<double>(params_.L);
  const double d = static_cast<double>(params_.d);
  const double log_front = std::log(static_cast<double>(params_.N)) +
                           ln_gamma(d + 1.0) -
                           d * std::log(std::numbers::pi);
  KernelValue out;
  if (ip == std::complex<double>{0.0, 0.0}) {
    out.log_modulus = -std::numeric_limits<double>::infinity();
    out.phase = 0.0;
    return out;
  }
  out.log_modulus = log_front + L * std::log(std::abs(ip)) -
                    0.5 * (d + L + 1.0) *
                        (std::log1p(zn) + std::log1p(wn));
  out.phase = wrap_phase(L * std::arg(ip));
  return out;
}

double Kernel::normalized_sq(const SpherePoint& p, const SpherePoint& q) const {
  return normalized_sq(plane_coords(p), plane_coords(q));
}

double Kernel::normalized_sq(const PlaneCoords& p, const PlaneCoords& q) const {
  const KernelValue k = sphere(p, q);
  const double v = std::exp(2.0 * (k.log_modulus - log_diag_));
  return v < 1.0 ? v : 1.0;
}

double Kernel::normalized_sq_lower_bound(const SpherePoint& p,
                                         const SpherePoint& q) const {
  const SpherePoint fp = upper_hemisphere_map(p, params_.d);
  const SpherePoint fq = upper_hemisphere_map(q, params_.d);
  const double dist = chordal_distance(fp, fq);
  const double base = 1.0 - dist * dist;
  if (base <= 0.0) return 0.0;
  return std::exp(static_cast<double>(params_.L) * std::log(base));
}

}  // namespace spheredpp
