# Copyright 2026 The spheredpp authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the python bindings; runs as a plain script under ctest."""

import math

import numpy as np

import spheredpp as sp


def test_special_functions():
    assert abs(sp.ln_gamma(10.0) - math.log(362880.0)) < 1e-12
    assert abs(sp.beta(2.0, 2.0) - 1.0 / 6.0) < 1e-14
    assert abs(sp.regularized_incomplete_beta(0.5, 3.0, 3.0) - 0.5) < 1e-13
    y = sp.regularized_incomplete_beta(0.2, 4.0, 4.0)
    assert abs(sp.inverse_regularized_incomplete_beta(y, 4.0, 4.0) - 0.2) < 1e-10
    assert sp.beta_inequality_residual(0.5, 3) > 0.0
    assert sp.beta_inequality_residual(0.0, 3) == 0.0
    try:
        sp.ln_gamma(-1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_geometry():
    m = sp.RadialMap(1)
    for t in (0.01, 0.5, 3.0, 100.0):
        assert abs(m.forward(t) - t) < 1e-10
    m2 = sp.RadialMap(2)
    assert abs(m2.inverse(m2.forward(1.3)) - 1.3) < 1e-9
    assert abs(sp.sphere_volume(2) - 4 * math.pi) < 1e-12
    south = sp.push_to_sphere([0.0, 0.0, 0.0, 0.0], 2)
    assert south[-1] == -1.0
    p = sp.stereographic_inverse([0.3, -0.4])
    assert abs(sum(c * c for c in p) - 1.0) < 1e-12
    back = sp.stereographic(p)
    assert abs(back[0] - 0.3) < 1e-12 and abs(back[1] + 0.4) < 1e-12


def test_kernel_and_sampler():
    params = sp.make_params(2, 3)
    assert params.N == 10
    assert sp.multi_index_count(2, 3) == 10
    kernel = sp.Kernel(params)

    pts, rejections = sp.sample(2, 3, seed=42)
    assert pts.shape == (10, 5)
    assert rejections >= 0
    norms = np.linalg.norm(pts, axis=1)
    assert np.max(np.abs(norms - 1.0)) < 1e-12

    # homogeneous diagonal across sampled points
    for row in pts:
        log_mod, phase = kernel.sphere(list(row), list(row))
        assert abs(log_mod - kernel.log_diagonal) < 1e-10
        assert abs(phase) < 1e-10

    pts2, _ = sp.sample(2, 3, seed=42)
    assert np.array_equal(pts, pts2)

    eig = sp.eigenvalue_sampler_d1(8, seed=3)
    assert eig.shape == (8, 3)


def test_energy():
    assert abs(sp.continuous_energy(1.0, 2) - 1.0) < 1e-13
    pts, _ = sp.sample(2, 3, seed=1)
    energy = sp.riesz_energy(pts, 1.0)
    assert energy > 0.0
    mc = sp.expected_energy_mc(2, 2, 1.0, replicates=12, seed=5)
    n = sp.make_params(2, 2).N
    assert mc["mean"] < n * n * sp.continuous_energy(1.0, 4)
    assert len(mc["replicates"]) == 12

    tau = sp.optimal_bound_tau(2, 8, 1.0)
    bound = sp.expected_energy_bound(2, 8, 1.0, tau)
    n = sp.make_params(2, 8).N
    assert bound < n * n * sp.continuous_energy(1.0, 4)
    assert sp.harmonic_energy_coefficient(8, 6.0) > sp.ensemble_energy_coefficient(4, 6.0)
    assert sp.projective_two_energy_coefficient(1) > 0.0


def test_sampler_diagnostics():
    pts, _ = sp.sample(2, 2, seed=9)
    kappa = sp.make_params(2, 2).N / sp.sphere_volume(4)
    empty = sp.conditional_intensity(list(pts[0]), pts[:0], 2, 2)
    assert abs(empty - kappa) < 1e-10
    taken = sp.conditional_intensity(list(pts[0]), pts[:1], 2, 2)
    assert taken <= 1e-8 * kappa

    configs = [sp.sample(1, 0, seed=s)[0] for s in range(150)]
    result = sp.intensity_uniformity_test(configs, 1, 0, cells=8)
    assert result["dof"] == 7
    assert result["p_value"] > 1e-5


def test_verify_binding():
    results = sp.verify_suite("beta")
    assert len(results) >= 5
    assert all(r["pass"] for r in results)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} smoke tests passed (spheredpp {sp.__version__})")


if __name__ == "__main__":
    main()
