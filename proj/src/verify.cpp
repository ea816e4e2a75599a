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

#include "spheredpp/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "spheredpp/dpp_sampler.hpp"
#include "spheredpp/ensemble_kernel.hpp"
#include "spheredpp/errors.hpp"
#include "spheredpp/quadrature.hpp"
#include "spheredpp/riesz_energy.hpp"
#include "spheredpp/rng.hpp"
#include "spheredpp/special_functions.hpp"
#include "spheredpp/sphere_geometry.hpp"
#include "spheredpp/stats.hpp"

namespace spheredpp {

namespace {

CheckResult at_most(std::string name, double value, double tolerance) {
  return {std::move(name), value <= tolerance, value, tolerance};
}

CheckResult at_least(std::string name, double value, double bound) {
  return {std::move(name), value >= bound, value, bound};
}

SpherePoint random_point_below(Rng& rng, int d, double eps_cap) {
  for (;;) {
    SpherePoint p = uniform_sphere_point(rng, d);
    if (p.last() <= eps_cap) return p;
  }
}

SpherePoint random_point_near(Rng& rng, const SpherePoint& p, double tau) {
  const int d = (p.ambient_dim() - 1) / 2;
  for (;;) {
    const SpherePoint dir = uniform_sphere_point(rng, d);
    const double step = tau * rng.uniform01();
    const SpherePoint q = slerp(p, dir, step);
    if (chordal_distance(p, q) <= tau && chordal_distance(p, q) > 1e-12) {
      return q;
    }
  }
}

double default_radial_forward(double t, int d) {
  return RadialMap(d).forward(t);
}

}  // namespace

// ---------------------------------------------------------------------------
// beta
// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_beta_suite() {
  std::vector<CheckResult> out;

  {  // reflection identity on a 1e3 grid of x for assorted shapes
    const BetaParams shapes[] = {{1, 1},     {2, 2},     {5, 5},
                                 {12, 12},   {3.5, 2.2}, {2.2, 3.5}};
    double worst = 0.0;
    for (const auto& p : shapes) {
      for (int i = 1; i < 1000; ++i) {
        const double x = i / 1000.0;
        const double lhs = regularized_incomplete_beta(x, p) +
                           regularized_incomplete_beta(1.0 - x, {p.b, p.a});
        worst = std::max(worst, std::abs(lhs - 1.0));
      }
    }
    out.push_back(at_most("beta.reflection_identity", worst, 1e-12));
  }

  {  // inverse round trip over [1e-6, 1 - 1e-6]
    double worst = 0.0;
    for (int d = 1; d <= 12; ++d) {
      const BetaParams p{static_cast<double>(d), static_cast<double>(d)};
      for (int i = 0; i < 400; ++i) {
        // log-spaced toward both endpoints plus a uniform sweep
        const double frac = i / 399.0;
        const double x =
            (i % 2 == 0) ? std::exp(std::log(1e-6) * (1.0 - frac))
                         : 1.0 - std::exp(std::log(1e-6) * frac);
        const double xc = std::clamp(x, 1e-6, 1.0 - 1e-6);
        // Through the log-space pair: the linear-scale y saturates at 1 for
        // x -> 1 once d >= 2, losing the tail information a double cannot
        // hold.
        const double log_y = log_regularized_incomplete_beta(xc, p);
        const double back =
            inverse_regularized_incomplete_beta_from_log(log_y, p);
        worst = std::max(worst, std::abs(back - xc));
      }
    }
    out.push_back(at_most("beta.inverse_round_trip", worst, 1e-10));
  }

  {  // sharp inequality residual on the full grid
    double min_resid = std::numeric_limits<double>::infinity();
    double min_rel = std::numeric_limits<double>::infinity();
    for (int d = 1; d <= 12; ++d) {
      for (int i = 1; i <= 999; ++i) {
        const double s = i / 1000.0;
        const double r = beta_inequality_residual(s, d);
        min_resid = std::min(min_resid, r);
        const double scale =
            std::exp(d * (std::log(s) + std::log1p(-s)));
        min_rel = std::min(min_rel, r / scale);
      }
    }
    out.push_back(at_least("beta.residual_nonnegative", min_resid, -1e-12));
    out.push_back(at_least("beta.residual_interior_positive", min_rel, 1e-10));
    double endpoints = 0.0;
    for (int d = 1; d <= 12; ++d) {
      endpoints = std::max(endpoints,
                           std::abs(beta_inequality_residual(0.0, d)));
      endpoints = std::max(endpoints,
                           std::abs(beta_inequality_residual(1.0, d)));
    }
    out.push_back(at_most("beta.residual_zero_at_endpoints", endpoints, 0.0));
  }

  {  // auxiliary inequality function on the same grid
    double min_aux = std::numeric_limits<double>::infinity();
    for (int d = 1; d <= 12; ++d) {
      for (int i = 1; i <= 999; ++i) {
        min_aux = std::min(min_aux, beta_inequality_auxiliary(i / 1000.0, d));
      }
    }
    out.push_back(at_least("beta.auxiliary_nonnegative", min_aux, -1e-12));
  }

  {  // continued fraction against direct quadrature of the integrand
    Rng rng(0xBE7A5EEDULL);
    double worst = 0.0;
    for (int c = 0; c < 60; ++c) {
      const double a = 1.0 + 11.0 * rng.uniform01();
      const double b = 1.0 + 11.0 * rng.uniform01();
      const double x = 0.02 + 0.96 * rng.uniform01();
      const auto integrand = [a, b](double t) {
        return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0);
      };
      const double quad = integrate_adaptive(integrand, 0.0, x, 1e-14);
      const double val = incomplete_beta(x, {a, b});
      worst = std::max(worst, std::abs(val - quad) / quad);
    }
    out.push_back(at_most("beta.quadrature_agreement", worst, 1e-12));
  }

  return out;
}

// ---------------------------------------------------------------------------
// geometry
// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_geometry_suite(const VerifyHooks& hooks) {
  std::vector<CheckResult> out;
  const auto g_eval = hooks.radial_forward
                          ? hooks.radial_forward
                          : std::function<double(double, int)>(
                                default_radial_forward);

  {  // stereographic round trips
    Rng rng(17);
    double worst = 0.0;
    for (int d = 1; d <= 4; ++d) {
      for (int c = 0; c < 200; ++c) {
        const SpherePoint p = uniform_sphere_point(rng, d);
        const SpherePoint back = stereographic_inverse(stereographic(p));
        worst = std::max(worst, chordal_distance(p, back));
      }
    }
    out.push_back(at_most("geometry.stereographic_round_trip", worst, 1e-9));
  }

  {  // radial map round trips over log-uniform radii
    Rng rng(29);
    double worst = 0.0;
    for (int d = 1; d <= 6; ++d) {
      const RadialMap map(d);
      for (int c = 0; c < 120; ++c) {
        PlanePoint x;
        x.coords.resize(2 * d);
        double n2 = 0.0;
        for (double& v : x.coords) {
          v = rng.normal();
          n2 += v * v;
        }
        const double radius =
            std::exp(std::log(1e-3) + rng.uniform01() * std::log(1e6));
        const double scale = radius / std::sqrt(n2);
        for (double& v : x.coords) v *= scale;
        const PlanePoint back = map.apply_inverse(map.apply(x));
        double err = 0.0;
        for (int i = 0; i < 2 * d; ++i) {
          err = std::max(err, std::abs(back.coords[i] - x.coords[i]));
        }
        worst = std::max(worst, err / radius);
      }
    }
    out.push_back(at_most("geometry.radial_round_trip", worst, 1e-9));
  }

  {  // strict monotonicity of the radial profile
    double min_gap = std::numeric_limits<double>::infinity();
    for (int d = 1; d <= 6; ++d) {
      double prev = g_eval(1e-3, d);
      for (int i = 1; i < 1000; ++i) {
        const double t = std::exp(std::log(1e-3) + i * std::log(1e6) / 999.0);
        const double g = g_eval(t, d);
        min_gap = std::min(min_gap, g - prev);
        prev = g;
      }
    }
    out.push_back(at_least("geometry.radial_profile_increasing", min_gap, 0.0));
  }

  {  // defining ODE residual with central-difference derivative
    double worst = 0.0;
    for (int d = 1; d <= 6; ++d) {
      const double dB =
          d * std::exp(ln_beta(static_cast<double>(d), static_cast<double>(d)));
      for (int i = 0; i <= 160; ++i) {
        const double t = 0.05 + (20.0 - 0.05) * i / 160.0;
        const double h = 1e-6 * std::max(t, 1.0);
        const double g = g_eval(t, d);
        const double dg = (g_eval(t + h, d) - g_eval(t - h, d)) / (2.0 * h);
        const double lhs = dg * std::pow(g, 2.0 * d - 1.0) /
                           std::pow(g * g + 1.0, 2.0 * d);
        const double rhs = dB * std::pow(t, 2.0 * d - 1.0) /
                           std::pow(1.0 + t * t, d + 1.0);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    out.push_back(at_most("geometry.radial_ode_residual", worst, 1e-6));
  }

  {  // derivative-norm ordering matches the beta inequality sign, and both hold
    int disagreements = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (int d = 1; d <= 6; ++d) {
      for (int i = 1; i < 200; ++i) {
        const double last = -1.0 + 2.0 * i / 200.0;
        SpherePoint p;
        p.coords.assign(2 * d + 1, 0.0);
        p.coords[0] = std::sqrt(1.0 - last * last);
        p.coords[2 * d] = last;
        const auto norms = upper_map_derivative_norms(p, d);
        const bool claim1 = norms.tangential >= norms.radial - 1e-12;
        const double resid =
            beta_inequality_residual(0.5 * (1.0 + last), d);
        const bool claim2 = resid >= -1e-12;
        if (claim1 != claim2) ++disagreements;
        min_margin = std::min(min_margin, norms.tangential - norms.radial);
      }
    }
    out.push_back(at_most("geometry.derivative_ordering_equivalence",
                          static_cast<double>(disagreements), 0.0));
    out.push_back(
        at_least("geometry.tangential_dominates_radial", min_margin, -1e-12));
  }

  {  // operator norm envelope along geodesics below the cap
    Rng rng(41);
    const double eps = 0.3, tau = 0.2;
    const double envelope = 1.0 / std::sqrt(1.0 - (tau + eps) * (tau + eps));
    double worst = 0.0;
    for (int d = 1; d <= 3; ++d) {
      for (int c = 0; c < 30; ++c) {
        const SpherePoint p = random_point_below(rng, d, eps);
        const SpherePoint q = random_point_near(rng, p, tau);
        for (int i = 0; i <= 100; ++i) {
          const SpherePoint x = slerp(p, q, i / 100.0);
          const auto norms = upper_map_derivative_norms(x, d);
          worst = std::max(worst,
                           std::max(norms.tangential, norms.radial) / envelope);
        }
      }
    }
    out.push_back(at_most("geometry.geodesic_envelope", worst, 1.0 + 1e-9));
  }

  {  // displacement chain bound through the derivative supremum
    Rng rng(43);
    double worst = 0.0;
    for (int d = 1; d <= 3; ++d) {
      for (int c = 0; c < 50; ++c) {
        const SpherePoint p = random_point_below(rng, d, 0.5);
        const SpherePoint q = random_point_near(rng, p, 0.6);
        double sup = 0.0;
        for (int i = 0; i <= 200; ++i) {
          const auto norms =
              upper_map_derivative_norms(slerp(p, q, i / 200.0), d);
          sup = std::max(sup, std::max(norms.tangential, norms.radial));
        }
        const double dist = chordal_distance(p, q);
        const double lhs = chordal_distance(upper_hemisphere_map(p, d),
                                            upper_hemisphere_map(q, d));
        const double rhs = (dist + dist * dist * dist) * sup;
        worst = std::max(worst, lhs / rhs);
      }
    }
    out.push_back(at_most("geometry.displacement_chain", worst, 1.0 + 1e-9));
  }

  {  // sub-level volume dominates the closed-form cap bound
    double min_margin = std::numeric_limits<double>::infinity();
    for (int d = 1; d <= 10; ++d) {
      const double r = 1.0 / std::sqrt(static_cast<double>(d));
      const double w = sublevel_volume(r, d);
      const double bound = cap_volume_lower_bound(r, 2 * d - 1);
      min_margin = std::min(min_margin, w - bound);
    }
    out.push_back(at_least("geometry.sublevel_cap_bound", min_margin, 0.0));
  }

  {  // interpolation cache against the exact path
    Rng rng(47);
    double worst = 0.0;
    for (int d : {2, 4}) {
      RadialMap cached(d);
      cached.enable_cache();
      const RadialMap exact(d);
      for (int c = 0; c < 500; ++c) {
        const double t =
            std::exp(std::log(1e-3) + rng.uniform01() * std::log(1e6));
        const double a = cached.forward(t);
        const double b = exact.forward_exact(t);
        worst = std::max(worst, std::abs(a - b) / b);
      }
    }
    out.push_back(at_most("geometry.cache_agreement", worst, 1e-9));
  }

  return out;
}

// ---------------------------------------------------------------------------
// kernel
// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_kernel_suite() {
  std::vector<CheckResult> out;

  {  // homogeneity of the diagonal
    Rng rng(53);
    double worst = 0.0;
    for (int d = 1; d <= 3; ++d) {
      for (long L = 1; L <= 6; ++L) {
        const Kernel kernel(make_params(d, L));
        const double expected = kernel.log_diagonal();
        for (int c = 0; c < 1000; ++c) {
          const SpherePoint p = uniform_sphere_point(rng, d);
          const KernelValue k = kernel.sphere(p, p);
          worst = std::max(worst, std::abs(std::expm1(k.log_modulus - expected)));
          worst = std::max(worst, std::abs(k.phase));
        }
      }
    }
    out.push_back(at_most("kernel.homogeneous_diagonal", worst, 1e-8));
  }

  {  // Hermitian symmetry and the Cauchy-Schwarz envelope
    Rng rng(59);
    double worst_sym = 0.0;
    double worst_cs = 0.0;
    for (int d = 1; d <= 3; ++d) {
      const Kernel kernel(make_params(d, 4));
      for (int c = 0; c < 300; ++c) {
        const SpherePoint p = uniform_sphere_point(rng, d);
        const SpherePoint q = uniform_sphere_point(rng, d);
        const KernelValue kpq = kernel.sphere(p, q);
        const KernelValue kqp = kernel.sphere(q, p);
        worst_sym = std::max(worst_sym,
                             std::abs(kpq.log_modulus - kqp.log_modulus));
        worst_sym = std::max(worst_sym,
                             std::abs(std::polar(1.0, kpq.phase) -
                                      std::polar(1.0, -kqp.phase)));
        worst_cs = std::max(worst_cs, kpq.log_modulus - kernel.log_diagonal());
      }
    }
    out.push_back(at_most("kernel.hermitian_symmetry", worst_sym, 1e-10));
    out.push_back(at_most("kernel.cauchy_schwarz", worst_cs, 1e-12));
  }

  {  // Gram positive semidefiniteness on random plane points
    Rng rng(61);
    const Kernel kernel(make_params(2, 3));
    const int m = 12;
    Eigen::MatrixXcd gram(m, m);
    std::vector<PlanePoint> pts(m);
    for (int i = 0; i < m; ++i) {
      pts[i].coords.resize(4);
      for (double& v : pts[i].coords) v = 1.2 * rng.normal();
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        gram(i, j) = kernel.plane(pts[i], pts[j]).to_complex();
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
    const double min_eig = eig.eigenvalues().minCoeff();
    const double trace = gram.trace().real();
    out.push_back(
        at_least("kernel.gram_positive_semidefinite", min_eig, -1e-10 * trace));
  }

  {  // plane kernel equals the explicit weighted monomial sum
    Rng rng(67);
    double worst = 0.0;
    for (int d = 1; d <= 3; ++d) {
      for (long L = 1; L <= 5; ++L) {
        const EnsembleParams params = make_params(d, L);
        const Kernel kernel(params);
        const auto indices = enumerate_multi_indices(d, L);
        const double front = params.N *
                             std::exp(ln_gamma(d + 1.0)) /
                             std::pow(std::numbers::pi, d);
        for (int c = 0; c < 10; ++c) {
          PlanePoint z, w;
          z.coords.resize(2 * d);
          w.coords.resize(2 * d);
          for (double& v : z.coords) v = 0.7 * rng.normal();
          for (double& v : w.coords) v = 0.7 * rng.normal();
          std::complex<double> acc{0.0, 0.0};
          for (const auto& idx : indices) {
            double log_coef = ln_gamma(L + 1.0);
            long total = 0;
            std::complex<double> mono{1.0, 0.0};
            for (int j = 0; j < d; ++j) {
              const long a = idx.alpha[j];
              total += a;
              log_coef -= ln_gamma(a + 1.0);
              const std::complex<double> zj{z.coords[2 * j],
                                            z.coords[2 * j + 1]};
              const std::complex<double> wj{w.coords[2 * j],
                                            w.coords[2 * j + 1]};
              for (long rep = 0; rep < a; ++rep) {
                mono *= zj * std::conj(wj);
              }
            }
            log_coef -= ln_gamma(L - total + 1.0);
            acc += std::exp(log_coef) * mono;
          }
          double zn = 0.0, wn = 0.0;
          for (double v : z.coords) zn += v * v;
          for (double v : w.coords) wn += v * v;
          const double weight =
              std::exp(-0.5 * (d + L + 1.0) *
                       (std::log1p(zn) + std::log1p(wn)));
          const std::complex<double> explicit_sum = front * acc * weight;
          const std::complex<double> direct =
              kernel.plane(z, w).to_complex();
          worst = std::max(worst, std::abs(explicit_sum - direct) /
                                      std::abs(direct));
        }
      }
    }
    out.push_back(at_most("kernel.monomial_sum_agreement", worst, 1e-10));
  }

  {  // d = 1 reduction to the isotropic closed form
    Rng rng(71);
    double worst = 0.0;
    for (long L : {1L, 3L, 9L}) {
      const EnsembleParams params = make_params(1, L);
      const Kernel kernel(params);
      for (int c = 0; c < 334; ++c) {
        const SpherePoint p = uniform_sphere_point(rng, 1);
        const SpherePoint q = uniform_sphere_point(rng, 1);
        double dot = 0.0;
        for (int i = 0; i < 3; ++i) dot += p.coords[i] * q.coords[i];
        const double expected =
            std::log(params.N / (4.0 * std::numbers::pi)) +
            0.5 * (params.N - 1.0) * std::log(0.5 * (1.0 + dot));
        const KernelValue k = kernel.sphere(p, q);
        worst = std::max(worst, std::abs(std::expm1(k.log_modulus - expected)));
      }
    }
    out.push_back(at_most("kernel.isotropic_reduction_d1", worst, 1e-10));
  }

  {  // contraction lower bound stays below the normalized kernel
    Rng rng(73);
    double worst = -std::numeric_limits<double>::infinity();
    const EnsembleParams cases[] = {make_params(1, 5), make_params(2, 3),
                                    make_params(3, 2)};
    for (const auto& params : cases) {
      const Kernel kernel(params);
      for (int c = 0; c < 3334; ++c) {
        const SpherePoint p = uniform_sphere_point(rng, params.d);
        const SpherePoint q = uniform_sphere_point(rng, params.d);
        const double bound = kernel.normalized_sq_lower_bound(p, q);
        const double ratio = kernel.normalized_sq(p, q);
        worst = std::max(worst, bound - ratio);
      }
    }
    out.push_back(at_most("kernel.contraction_lower_bound", worst, 1e-12));
  }

  return out;
}

// ---------------------------------------------------------------------------
// sampler
// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_sampler_suite() {
  std::vector<CheckResult> out;

  {  // bit-identical reruns
    const SamplerConfig config{make_params(2, 3), 123456789ULL};
    const Configuration a = sample(config);
    const Configuration b = sample(config);
    double diff = 0.0;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      for (int j = 0; j < 5; ++j) {
        if (a.points[i].coords[j] != b.points[i].coords[j]) diff += 1.0;
      }
    }
    if (a.rejection_count != b.rejection_count) diff += 1.0;
    out.push_back(at_most("sampler.deterministic_rerun", diff, 0.0));
  }

  {  // pooled one-point intensity is uniform over an equal-volume partition
    std::vector<Configuration> configs;
    configs.reserve(200);
    for (int r = 0; r < 200; ++r) {
      SamplerConfig config{make_params(2, 4), 0x5EEDULL};
      config.seed = derive_replicate_seed(config.seed, r);
      configs.push_back(sample(config));
    }
    const auto test = intensity_uniformity_test(configs, 32);
    out.push_back(at_least("sampler.intensity_uniformity_p", test.p_value, 1e-3));
  }

  {  // Monte-Carlo trace of the conditional kernel equals N - k
    const EnsembleParams params = make_params(2, 2);
    SchurState state(params);
    Rng rng(0xACCE57ULL);
    for (int k = 0; k < 3; ++k) state.accept(uniform_sphere_point(rng, 2));
    double acc = 0.0;
    const int samples = 40000;
    for (int i = 0; i < samples; ++i) {
      acc += state.normalized_conditional(uniform_sphere_point(rng, 2));
    }
    const double estimate = acc / samples * static_cast<double>(params.N);
    const double target = static_cast<double>(params.N - 3);
    out.push_back(at_most("sampler.conditional_trace",
                          std::abs(estimate - target) / target, 0.02));
  }

  {  // nearest-neighbour repulsion against matched binomial points
    for (int d = 1; d <= 2; ++d) {
      const EnsembleParams params =
          d == 1 ? make_params(1, 49) : make_params(2, 8);
      const int reps = 150;
      std::vector<double> dpp_nn, iid_nn;
      Rng iid_rng(0x11DULL + d);
      for (int r = 0; r < reps; ++r) {
        SamplerConfig config{params, 0xD15ULL + d};
        config.seed = derive_replicate_seed(config.seed, r);
        const Configuration draw = sample(config);
        double acc = 0.0;
        for (std::size_t i = 0; i < draw.points.size(); ++i) {
          double best = std::numeric_limits<double>::infinity();
          for (std::size_t j = 0; j < draw.points.size(); ++j) {
            if (i == j) continue;
            best = std::min(best,
                            chordal_distance(draw.points[i], draw.points[j]));
          }
          acc += best;
        }
        dpp_nn.push_back(acc / draw.points.size());

        std::vector<SpherePoint> iid(params.N);
        for (auto& p : iid) p = uniform_sphere_point(iid_rng, d);
        acc = 0.0;
        for (std::size_t i = 0; i < iid.size(); ++i) {
          double best = std::numeric_limits<double>::infinity();
          for (std::size_t j = 0; j < iid.size(); ++j) {
            if (i == j) continue;
            best = std::min(best, chordal_distance(iid[i], iid[j]));
          }
          acc += best;
        }
        iid_nn.push_back(acc / iid.size());
      }
      const double p = welch_t_pvalue_greater(dpp_nn, iid_nn);
      out.push_back(at_most("sampler.repulsion_d" + std::to_string(d), p, 0.01));
    }
  }

  {  // d = 1 law agreement between the two samplers (2-energy statistic)
    const int n = 16, reps = 300;
    std::vector<double> schur_e, eig_e;
    for (int r = 0; r < reps; ++r) {
      SamplerConfig config{make_params(1, n - 1), 0xABCDULL};
      config.seed = derive_replicate_seed(config.seed, r);
      schur_e.push_back(riesz_energy(sample(config).points, 2.0));
      const Configuration eig =
          eigenvalue_sampler_d1(n, derive_replicate_seed(0xDCBAULL, r));
      eig_e.push_back(riesz_energy(eig.points, 2.0));
    }
    const auto ks = ks_two_sample(schur_e, eig_e);
    out.push_back(at_least("sampler.two_sampler_ks_p", ks.p_value, 0.01));
  }

  return out;
}

// ---------------------------------------------------------------------------
// energy
// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_energy_suite() {
  std::vector<CheckResult> out;

  {  // invariance under a random orthogonal transformation
    Rng rng(79);
    const int d = 2;
    std::vector<SpherePoint> pts(20);
    for (auto& p : pts) p = uniform_sphere_point(rng, d);
    Eigen::MatrixXd gauss(5, 5);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) gauss(i, j) = rng.normal();
    }
    const Eigen::MatrixXd q =
        Eigen::HouseholderQR<Eigen::MatrixXd>(gauss).householderQ();
    std::vector<SpherePoint> rotated(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Eigen::VectorXd v(5);
      for (int j = 0; j < 5; ++j) v(j) = pts[i].coords[j];
      const Eigen::VectorXd w = q * v;
      rotated[i].coords.assign(w.data(), w.data() + 5);
    }
    const double e0 = riesz_energy(pts, 1.5);
    const double e1 = riesz_energy(rotated, 1.5);
    out.push_back(at_most("energy.rotation_invariance",
                          std::abs(e1 - e0) / e0, 1e-10));
  }

  {  // energy decreases as a pair separates
    double prev = std::numeric_limits<double>::infinity();
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 20; ++i) {
      const double theta = 0.1 + (std::numbers::pi - 0.2) * i / 20.0;
      std::vector<SpherePoint> pts(2);
      pts[0].coords = {0.0, 0.0, 1.0};
      pts[1].coords = {std::sin(theta), 0.0, std::cos(theta)};
      const double e = riesz_energy(pts, 1.0);
      if (i > 1) worst = std::max(worst, e - prev);
      prev = e;
    }
    out.push_back(at_most("energy.pair_separation_monotone", worst, 0.0));
  }

  {  // continuous energy against plain pair Monte-Carlo
    double worst = 0.0;
    const struct {
      int n;
      double s;
    } cases[] = {{2, 1.0}, {4, 2.0}};
    for (const auto& c : cases) {
      Rng rng(0xE5E5ULL + c.n);
      const int pairs = 2'000'000;
      double acc = 0.0;
      const int d = c.n / 2;
      for (int i = 0; i < pairs; ++i) {
        const SpherePoint p = uniform_sphere_point(rng, d);
        const SpherePoint q = uniform_sphere_point(rng, d);
        acc += std::pow(chordal_distance(p, q), -c.s);
      }
      const double mc = acc / pairs;
      const double exact = continuous_energy(c.s, c.n);
      worst = std::max(worst, std::abs(mc - exact) / exact);
    }
    out.push_back(at_most("energy.continuous_energy_mc", worst, 0.01));
  }

  {  // bound below the trivial level and minimized by the optimizer tau
    const EnsembleParams params = make_params(2, 8);
    const double s = 1.0;
    const double trivial =
        static_cast<double>(params.N) * params.N * continuous_energy(s, 4);
    const double tau_star = optimal_bound_tau(params, s);
    const double best = expected_energy_bound(params, s, tau_star);
    double min_gap = std::numeric_limits<double>::infinity();
    const double window = 1.0 - 1.0 / std::sqrt(2.0);
    for (int i = 1; i < 200; ++i) {
      const double tau = window * i / 200.0;
      double bound;
      try {
        bound = expected_energy_bound(params, s, tau);
      } catch (const domain_error&) {
        continue;
      }
      min_gap = std::min(min_gap, bound - best);
    }
    out.push_back(at_least("energy.optimal_bound_tau", min_gap, -1e-9 * trivial));
    out.push_back(at_most("energy.bound_below_trivial", best, trivial));
  }

  {  // coefficient positivity and the even-dimension comparison
    double min_coef = std::numeric_limits<double>::infinity();
    for (int d = 2; d <= 8; ++d) {
      for (double frac : {0.25, 0.5, 0.9}) {
        min_coef = std::min(min_coef,
                            ensemble_energy_coefficient(d, frac * 2.0 * d));
        min_coef = std::min(
            min_coef, harmonic_energy_coefficient(2 * d, frac * 2.0 * d));
      }
    }
    for (int d = 1; d <= 8; ++d) {
      min_coef = std::min(min_coef, projective_two_energy_coefficient(d));
    }
    out.push_back(at_least("energy.coefficients_positive", min_coef, 0.0));
    const double harmonic = harmonic_energy_coefficient(8, 6.0);
    const double ensemble = ensemble_energy_coefficient(4, 6.0);
    out.push_back(
        at_least("energy.harmonic_dominates_s8", harmonic - ensemble, 0.0));
  }

  {  // coefficient equals the rate-optimized closed form
    const int d = 3;
    const double s = 2.0;
    const double c = optimal_rate_constant(d, s);
    const double cap =
        1.0 - std::exp(-1.0 + 1.0 / (2.0 * d)) /
                  (2.0 * std::sqrt(1.0 - 1.0 / (2.0 * d)));
    const double route = sphere_volume(2 * d - 1) /
                         (sphere_volume(2 * d) * (2.0 * d - s) *
                          std::pow(std::tgamma(d + 1.0), 1.0 - s / (2.0 * d))) *
                         std::pow(c, d - 0.5 * s) *
                         std::exp(-d * c / (d - 1.0)) * cap;
    const double direct = ensemble_energy_coefficient(d, s);
    out.push_back(at_most("energy.coefficient_route_consistency",
                          std::abs(direct - route) / direct, 1e-10));
  }

  {  // second transcription of the projective 2-energy coefficient
    double worst = 0.0;
    for (int d = 1; d <= 5; ++d) {
      const double q = 2.0 / (2.0 * d + 1.0);
      const double alt = std::pow(3.0, 1.0 - q) *
                         std::pow(2.0 * d - 1.0, 1.0 - q) * (2.0 * d + 1.0) *
                         std::pow(std::tgamma(d - 0.5), 2.0 - q) /
                         (std::pow(2.0, 4.0 - q) *
                          std::pow(std::tgamma(d + 1.0), 2.0 - 2.0 * q));
      const double direct = projective_two_energy_coefficient(d);
      worst = std::max(worst, std::abs(alt - direct) / direct);
    }
    out.push_back(at_most("energy.projective_transcription", worst, 1e-12));
  }

  return out;
}

std::vector<CheckResult> verify_suite(const std::string& name) {
  if (name == "beta") return verify_beta_suite();
  if (name == "geometry") return verify_geometry_suite();
  if (name == "kernel") return verify_kernel_suite();
  if (name == "sampler") return verify_sampler_suite();
  if (name == "energy") return verify_energy_suite();
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const char* suite : {"beta", "geometry", "kernel", "sampler", "energy"}) {
      auto part = verify_suite(suite);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw domain_error("unknown verification suite: " + name);
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace spheredpp
