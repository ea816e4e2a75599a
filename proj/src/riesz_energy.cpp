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

#include "spheredpp/riesz_energy.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "spheredpp/errors.hpp"
#include "spheredpp/special_functions.hpp"
#include "spheredpp/stats.hpp"

namespace spheredpp {

namespace {

void check_energy_window(int d, double s) {
  if (!(s > 0.0 && s < 2.0 * d)) {
    throw domain_error("energy exponent must satisfy 0 < s < 2d");
  }
}

// 1 - e^(-1 + 1/(2d)) / (2 sqrt(1 - 1/(2d))), the cap-volume factor shared
// by the bound formulas.
double cap_factor(int d) {
  const double inv2d = 1.0 / (2.0 * d);
  return 1.0 - std::exp(-1.0 + inv2d) / (2.0 * std::sqrt(1.0 - inv2d));
}

}  // namespace

double riesz_energy(std::span<const SpherePoint> points, double s) {
  if (!(s > 0.0)) throw domain_error("energy exponent must be positive");
  const std::size_t n = points.size();
  double sum = 0.0;
  double comp = 0.0;  // Kahan correction
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = chordal_distance(points[i], points[j]);
      if (dist <= 1e-14) {
        throw domain_error("coincident points in energy evaluation");
      }
      const double term = std::exp(-s * std::log(dist));
      const double y = term - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  return 2.0 * sum;
}

double continuous_energy(double s, int n) {
  if (n < 1) throw domain_error("sphere dimension must be >= 1");
  if (!(s > 0.0 && s < n)) {
    throw domain_error("continuous energy requires 0 < s < n");
  }
  const double nd = static_cast<double>(n);
  return std::exp((nd - s - 1.0) * std::numbers::ln2 +
                  ln_gamma(0.5 * (nd + 1.0)) + ln_gamma(0.5 * (nd - s)) -
                  0.5 * std::log(std::numbers::pi) -
                  ln_gamma(nd - 0.5 * s));
}

double expected_energy_bound(const EnsembleParams& params, double s, double tau) {
  const int d = params.d;
  check_energy_window(d, s);
  const double window = 1.0 - 1.0 / std::sqrt(static_cast<double>(d));
  if (!(tau > 0.0 && tau < window)) {
    throw domain_error("tau must satisfy 0 < tau < 1 - 1/sqrt(d)");
  }
  const double tau2 = tau * tau;
  const double shrink = 1.0 / std::sqrt(static_cast<double>(d)) + tau;
  const double ratio = tau2 * (1.0 + tau2) * (1.0 + tau2) /
                       (1.0 - shrink * shrink);
  if (!(ratio < 1.0)) {
    throw domain_error("tau admissibility: the degree factor must stay positive");
  }
  const double n = static_cast<double>(params.N);
  const double v_s = continuous_energy(s, 2 * d);
  const double front = n * n * sphere_volume(2 * d - 1) /
                       ((2.0 * d - s) * sphere_volume(2 * d));
  const double subtracted =
      front * std::pow(1.0 - 0.25 * tau2, d - 1) *
      std::pow(tau, 2.0 * d - s) *
      std::exp(static_cast<double>(params.L) * std::log1p(-ratio)) *
      cap_factor(d);
  return n * n * v_s - subtracted;
}

double optimal_bound_tau(const EnsembleParams& params, double s) {
  const int d = params.d;
  check_energy_window(d, s);
  const double window = 1.0 - 1.0 / std::sqrt(static_cast<double>(d));
  if (!(window > 0.0)) {
    throw domain_error("tau window is empty at d = 1");
  }
  // The subtracted term vanishes at both window ends; scan then refine.
  auto subtracted = [&](double tau) -> double {
    const double tau2 = tau * tau;
    const double shrink = 1.0 / std::sqrt(static_cast<double>(d)) + tau;
    const double ratio = tau2 * (1.0 + tau2) * (1.0 + tau2) /
                         (1.0 - shrink * shrink);
    if (!(ratio < 1.0)) return -1.0;
    return std::pow(1.0 - 0.25 * tau2, d - 1) *
           std::pow(tau, 2.0 * d - s) *
           std::exp(static_cast<double>(params.L) * std::log1p(-ratio));
  };
  const int grid = 4000;
  double best_tau = window * 0.5;
  double best = -1.0;
  for (int i = 1; i < grid; ++i) {
    const double tau = window * i / grid;
    const double value = subtracted(tau);
    if (value > best) {
      best = value;
      best_tau = tau;
    }
  }
  double lo = std::max(best_tau - window / grid, window / grid * 0.5);
  double hi = std::min(best_tau + window / grid, window * (1.0 - 1e-9));
  constexpr double kGolden = 0.61803398874989485;
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = subtracted(x1);
  double f2 = subtracted(x2);
  for (int it = 0; it < 120; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = subtracted(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = subtracted(x1);
    }
  }
  return 0.5 * (lo + hi);
}

double optimal_rate_constant(int d, double s) {
  check_energy_window(d, s);
  return (d - 1.0) * (1.0 - s / (2.0 * d));
}

double ensemble_energy_coefficient(int d, double s) {
  if (d < 2) {
    throw domain_error("the second-order coefficient needs d >= 2");
  }
  check_energy_window(d, s);
  const double dd = static_cast<double>(d);
  const double expo = dd - 0.5 * s;
  const double base = (2.0 * dd - s) * (1.0 - 1.0 / dd) /
                      (2.0 * std::numbers::e);
  const double log_fact_power =
      (1.0 - s / (2.0 * dd)) * ln_gamma(dd + 1.0);
  return sphere_volume(2 * d - 1) * std::exp(expo * std::log(base)) /
         ((2.0 * dd - s) * sphere_volume(2 * d) * std::exp(log_fact_power)) *
         cap_factor(d);
}

double harmonic_energy_coefficient(int dim, double s) {
  if (dim < 1) throw domain_error("dimension must be >= 1");
  if (!(s > 0.0 && s < dim)) {
    throw domain_error("harmonic coefficient requires 0 < s < dim");
  }
  const double d = static_cast<double>(dim);
  const double log_num = (s - s / d) * std::numbers::ln2 +
                         std::log(continuous_energy(s, dim)) + std::log(d) +
                         ln_gamma(1.0 + 0.5 * d) + ln_gamma(0.5 * (1.0 + s)) +
                         ln_gamma(d - 0.5 * s);
  const double log_den = 0.5 * std::log(std::numbers::pi) +
                         ln_gamma(1.0 + 0.5 * s) +
                         ln_gamma(1.0 + 0.5 * (s + d)) +
                         (1.0 - s / d) * ln_gamma(d + 1.0);
  return std::exp(log_num - log_den);
}

double projective_two_energy_coefficient(int d) {
  if (d < 1) throw domain_error("d must be >= 1");
  const double dd = static_cast<double>(d);
  const double q = 2.0 / (2.0 * dd + 1.0);
  const double log_num = (1.0 - q) * std::log(3.0) +
                         (1.0 - q) * std::log(2.0 * dd - 1.0) +
                         std::log(2.0 * dd + 1.0) +
                         (2.0 - q) * ln_gamma(dd - 0.5);
  const double log_den = (4.0 - q) * std::numbers::ln2 +
                         (2.0 - 2.0 * q) * ln_gamma(dd + 1.0);
  return std::exp(log_num - log_den);
}

BoundReport make_bound_report(const EnsembleParams& params, double s) {
  if (params.d < 2) {
    throw domain_error("bound report needs d >= 2; the tau window is empty at d = 1");
  }
  check_energy_window(params.d, s);
  BoundReport report;
  report.v_s = continuous_energy(s, 2 * params.d);
  report.tau = optimal_bound_tau(params, s);
  report.expected_energy_bound = expected_energy_bound(params, s, report.tau);
  report.ensemble_coefficient = ensemble_energy_coefficient(params.d, s);
  report.harmonic_coefficient = harmonic_energy_coefficient(2 * params.d, s);
  report.rate_constant = optimal_rate_constant(params.d, s);
  return report;
}

std::uint64_t derive_replicate_seed(std::uint64_t seed, int replicate) {
  std::uint64_t state =
      seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(replicate) + 0x51ED2701ULL));
  return detail::splitmix64(state);
}

McEnergy expected_energy_mc(const SamplerConfig& config, double s,
                            int replicates, int threads) {
  if (replicates < 2) {
    throw domain_error("at least two replicates are needed for a std error");
  }
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, 32);
  }
  threads = std::min(threads, replicates);

  std::vector<double> energies(replicates,
                               std::numeric_limits<double>::quiet_NaN());
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  auto worker = [&](int tid) {
    for (int r = tid; r < replicates; r += threads) {
      if (failed.load(std::memory_order_relaxed)) return;
      try {
        SamplerConfig local = config;
        local.seed = derive_replicate_seed(config.seed, r);
        const Configuration draw = sample(local);
        energies[r] = riesz_energy(draw.points, s);
      } catch (const std::exception& e) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true)) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          first_error = e.what();
        }
        return;
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  if (failed.load()) {
    std::vector<double> partial;
    for (double e : energies) {
      if (!std::isnan(e)) partial.push_back(e);
    }
    throw mc_abort_error("sampler failed during Monte-Carlo run: " + first_error,
                         std::move(partial));
  }

  McEnergy out;
  out.replicates = std::move(energies);
  out.mean = mean(out.replicates);
  out.std_error = sample_stddev(out.replicates) /
                  std::sqrt(static_cast<double>(replicates));
  return out;
}

}  // namespace spheredpp
