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

#include "spheredpp/dpp_sampler.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "spheredpp/errors.hpp"
#include "spheredpp/special_functions.hpp"

namespace spheredpp {

namespace {

constexpr double kPivotFloor = 1e-8;  // relative to the unit diagonal
constexpr double kPoleClamp = 1.0 - 1e-10;

std::size_t tri_index(std::size_t row, std::size_t col) {
  return row * (row + 1) / 2 + col;
}

}  // namespace

SchurState::SchurState(EnsembleParams params) : kernel_(params) {}

std::vector<std::complex<double>> SchurState::cross_vector(
    const PlaneCoords& x) const {
  std::vector<std::complex<double>> khat(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const KernelValue k = kernel_.sphere(x, coords_[i]);
    const double mod = std::exp(k.log_modulus - kernel_.log_diagonal());
    khat[i] = {mod * std::cos(k.phase), mod * std::sin(k.phase)};
  }
  return khat;
}

// Forward substitution L y = khat in place; returns |y|^2.
double SchurState::forward_solve(std::vector<std::complex<double>>& y) const {
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::complex<double> acc = y[i];
    for (std::size_t j = 0; j < i; ++j) {
      acc -= chol_[tri_index(i, j)] * y[j];
    }
    y[i] = acc / chol_[tri_index(i, i)];
    norm_sq += std::norm(y[i]);
  }
  return norm_sq;
}

double SchurState::normalized_conditional(const PlaneCoords& x) const {
  if (points_.empty()) return 1.0;
  std::vector<std::complex<double>> y = cross_vector(x);
  return 1.0 - forward_solve(y);
}

double SchurState::normalized_conditional(const SpherePoint& x) const {
  return normalized_conditional(kernel_.plane_coords(x));
}

void SchurState::accept(const SpherePoint& p) {
  const PlaneCoords pc = kernel_.plane_coords(p);
  std::vector<std::complex<double>> y = cross_vector(pc);
  const double pivot_sq = 1.0 - forward_solve(y);

  points_.push_back(p);
  coords_.push_back(pc);
  for (const auto& value : y) chol_.push_back(std::conj(value));
  chol_.push_back(std::sqrt(std::max(pivot_sq, 0.0)));

  if (pivot_sq < kPivotFloor) refactorize();
}

void SchurState::refactorize() {
  const std::size_t k = points_.size();
  std::vector<std::complex<double>> gram(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (i == j) {
        gram[i * k + j] = 1.0;
        continue;
      }
      const KernelValue kv = kernel_.sphere(coords_[i], coords_[j]);
      const double mod = std::exp(kv.log_modulus - kernel_.log_diagonal());
      gram[i * k + j] = {mod * std::cos(kv.phase), mod * std::sin(kv.phase)};
    }
  }
  std::vector<std::complex<double>> fac(chol_.size());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      std::complex<double> acc = gram[i * k + j];
      for (std::size_t m = 0; m < j; ++m) {
        acc -= fac[tri_index(i, m)] * std::conj(fac[tri_index(j, m)]);
      }
      if (i == j) {
        const double pivot_sq = acc.real();
        if (pivot_sq < kPivotFloor) {
          throw degeneracy_error(
              "kernel Gram matrix lost positive-definiteness beyond 1e-8 of "
              "the diagonal");
        }
        fac[tri_index(i, j)] = std::sqrt(pivot_sq);
      } else {
        fac[tri_index(i, j)] = acc / fac[tri_index(j, j)].real();
      }
    }
  }
  chol_ = std::move(fac);
}

double conditional_intensity(const SpherePoint& x, const SchurState& state) {
  return std::exp(state.kernel().log_diagonal()) *
         state.normalized_conditional(x);
}

SpherePoint uniform_sphere_point(Rng& rng, int d) {
  const int n = 2 * d + 1;
  SpherePoint p;
  p.coords.resize(n);
  for (;;) {
    double norm_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      p.coords[i] = rng.normal();
      norm_sq += p.coords[i] * p.coords[i];
    }
    if (norm_sq < 1e-280) continue;
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (int i = 0; i < n; ++i) p.coords[i] *= inv;
    if (std::abs(p.coords[n - 1]) > kPoleClamp) continue;
    return p;
  }
}

Configuration sample(const SamplerConfig& config) {
  if (config.max_rejections_per_point < 1) {
    throw domain_error("rejection budget must be >= 1");
  }
  const auto& params = config.params;
  SchurState state(params);
  Rng rng(config.seed);
  long rejections = 0;
  for (std::int64_t k = 0; k < params.N; ++k) {
    long tries = 0;
    for (;;) {
      if (tries >= config.max_rejections_per_point) {
        throw rejection_budget_error(static_cast<std::size_t>(k),
                                     config.max_rejections_per_point);
      }
      const SpherePoint p = uniform_sphere_point(rng, params.d);
      const double cond =
          std::clamp(state.normalized_conditional(p), 0.0, 1.0);
      if (rng.uniform01() < cond) {
        state.accept(p);
        break;
      }
      ++tries;
      ++rejections;
    }
  }
  Configuration out;
  out.params = params;
  out.seed = config.seed;
  out.rejection_count = rejections;
  out.points = state.points();
  return out;
}

Configuration eigenvalue_sampler_d1(int n, std::uint64_t seed) {
  if (n < 1) throw domain_error("n must be >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < 10; ++attempt) {
    Eigen::MatrixXcd a(n, n), b(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        a(i, j) = rng.complex_gaussian();
        b(i, j) = rng.complex_gaussian();
      }
    }
    const Eigen::MatrixXcd pencil = a.partialPivLu().solve(b);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(pencil, false);
    if (solver.info() != Eigen::Success) continue;
    bool finite = true;
    for (int i = 0; i < n && finite; ++i) {
      const auto lambda = solver.eigenvalues()(i);
      finite = std::isfinite(lambda.real()) && std::isfinite(lambda.imag());
    }
    if (!finite) continue;

    Configuration out;
    out.params = make_params(1, n - 1);
    out.seed = seed;
    out.rejection_count = 0;
    out.points.reserve(n);
    for (int i = 0; i < n; ++i) {
      const auto lambda = solver.eigenvalues()(i);
      PlanePoint z;
      z.coords = {lambda.real(), lambda.imag()};
      out.points.push_back(stereographic_inverse(z));
    }
    return out;
  }
  throw degeneracy_error("generalized eigenvalue solve failed 10 times");
}

int equal_area_cell_index(const SpherePoint& p, int d, int cells) {
  if (cells < 2) throw domain_error("cell count must be >= 2");
  const bool quadrants = cells % 4 == 0 && cells >= 8;
  const int bands = quadrants ? cells / 4 : cells;
  const double u = 0.5 * (1.0 + p.last());
  const double frac = regularized_incomplete_beta(
      std::clamp(u, 0.0, 1.0),
      {static_cast<double>(d), static_cast<double>(d)});
  int band = static_cast<int>(frac * bands);
  band = std::clamp(band, 0, bands - 1);
  if (!quadrants) return band;
  const int quadrant =
      (p.coords[0] >= 0.0 ? 1 : 0) + (p.coords[1] >= 0.0 ? 2 : 0);
  return quadrant * bands + band;
}

ChiSquareResult intensity_uniformity_test(
    std::span<const Configuration> configs, int cells) {
  if (configs.size() < 100) {
    throw domain_error("uniformity test needs at least 100 configurations");
  }
  const int d = configs.front().params.d;
  std::vector<double> counts(cells, 0.0);
  double total = 0.0;
  for (const auto& config : configs) {
    if (config.params.d != d) {
      throw domain_error("configurations mix different dimensions");
    }
    for (const auto& p : config.points) {
      counts[equal_area_cell_index(p, d, cells)] += 1.0;
      total += 1.0;
    }
  }
  const std::vector<double> expected(cells, total / cells);
  return chi_square_test(counts, expected);
}

}  // namespace spheredpp
