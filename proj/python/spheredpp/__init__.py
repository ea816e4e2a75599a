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

"""Determinantal point processes on even-dimensional spheres.

Exact sampling of the homogeneous projection ensemble on S^(2d), the beta
special-function stack behind its radial reweighting, Riesz energy
estimation and the second-order energy bounds.
"""

from ._core import (  # noqa: F401
    DegeneracyError,
    DomainError,
    EnsembleParams,
    Kernel,
    RadialMap,
    __version__,
    beta,
    beta_inequality_auxiliary,
    beta_inequality_residual,
    cap_volume_lower_bound,
    conditional_intensity,
    continuous_energy,
    eigenvalue_sampler_d1,
    ensemble_energy_coefficient,
    expected_energy_mc,
    harmonic_energy_coefficient,
    incomplete_beta,
    intensity_uniformity_test,
    inverse_regularized_incomplete_beta,
    jacobian_radial_inverse,
    jacobian_stereographic,
    ln_gamma,
    make_params,
    multi_index_count,
    optimal_rate_constant,
    projective_two_energy_coefficient,
    push_to_sphere,
    regularized_incomplete_beta,
    riesz_energy,
    sample,
    sphere_volume,
    stereographic,
    stereographic_inverse,
    sublevel_volume,
    expected_energy_bound,
    optimal_bound_tau,
    upper_hemisphere_map,
    upper_map_derivative_norms,
    verify_suite,
)
