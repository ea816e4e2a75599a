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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spheredpp/dpp_sampler.hpp"
#include "spheredpp/ensemble_kernel.hpp"
#include "spheredpp/errors.hpp"
#include "spheredpp/riesz_energy.hpp"
#include "spheredpp/special_functions.hpp"
#include "spheredpp/sphere_geometry.hpp"
#include "spheredpp/verify.hpp"
#include "spheredpp/version.hpp"

namespace py = pybind11;

namespace {

py::array_t<double> points_to_array(const std::vector<spheredpp::SpherePoint>& pts) {
  if (pts.empty()) {
    return py::array_t<double>(std::vector<py::ssize_t>{0, 0});
  }
  const py::ssize_t n = static_cast<py::ssize_t>(pts.size());
  const py::ssize_t dim = static_cast<py::ssize_t>(pts.front().coords.size());
  py::array_t<double> out(std::vector<py::ssize_t>{n, dim});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i) {
    for (py::ssize_t j = 0; j < dim; ++j) {
      view(i, j) = pts[i].coords[j];
    }
  }
  return out;
}

std::vector<spheredpp::SpherePoint> array_to_points(
    const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
  if (arr.ndim() != 2) {
    throw spheredpp::domain_error("points array must be two-dimensional");
  }
  const auto view = arr.unchecked<2>();
  std::vector<spheredpp::SpherePoint> pts(view.shape(0));
  for (py::ssize_t i = 0; i < view.shape(0); ++i) {
    pts[i].coords.resize(view.shape(1));
    for (py::ssize_t j = 0; j < view.shape(1); ++j) {
      pts[i].coords[j] = view(i, j);
    }
  }
  return pts;
}

spheredpp::SpherePoint row_to_point(const std::vector<double>& coords) {
  return spheredpp::SpherePoint{coords};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Determinantal point processes on even-dimensional spheres";
  m.attr("__version__") = spheredpp::version_string;

  py::register_exception<spheredpp::domain_error>(m, "DomainError",
                                                  PyExc_ValueError);
  py::register_exception<spheredpp::degeneracy_error>(m, "DegeneracyError",
                                                      PyExc_RuntimeError);

  // special functions
  m.def("ln_gamma", &spheredpp::ln_gamma, py::arg("x"));
  m.def("beta", [](double a, double b) { return spheredpp::beta({a, b}); },
        py::arg("a"), py::arg("b"));
  m.def("incomplete_beta",
        [](double x, double a, double b) {
          return spheredpp::incomplete_beta(x, {a, b});
        },
        py::arg("x"), py::arg("a"), py::arg("b"));
  m.def("regularized_incomplete_beta",
        [](double x, double a, double b) {
          return spheredpp::regularized_incomplete_beta(x, {a, b});
        },
        py::arg("x"), py::arg("a"), py::arg("b"));
  m.def("inverse_regularized_incomplete_beta",
        [](double y, double a, double b) {
          return spheredpp::inverse_regularized_incomplete_beta(y, {a, b});
        },
        py::arg("y"), py::arg("a"), py::arg("b"));
  m.def("beta_inequality_residual", &spheredpp::beta_inequality_residual,
        py::arg("s"), py::arg("d"));
  m.def("beta_inequality_auxiliary", &spheredpp::beta_inequality_auxiliary,
        py::arg("s"), py::arg("d"));

  // geometry
  m.def("sphere_volume", &spheredpp::sphere_volume, py::arg("n"));
  m.def("cap_volume_lower_bound", &spheredpp::cap_volume_lower_bound,
        py::arg("r"), py::arg("n"));
  m.def("sublevel_volume", &spheredpp::sublevel_volume, py::arg("eps"),
        py::arg("d"));
  m.def("stereographic",
        [](const std::vector<double>& p) {
          return spheredpp::stereographic(row_to_point(p)).coords;
        },
        py::arg("p"));
  m.def("stereographic_inverse",
        [](const std::vector<double>& y) {
          return spheredpp::stereographic_inverse({y}).coords;
        },
        py::arg("y"));
  m.def("push_to_sphere",
        [](const std::vector<double>& z, int d) {
          return spheredpp::push_to_sphere({z}, d).coords;
        },
        py::arg("z"), py::arg("d"));
  m.def("upper_hemisphere_map",
        [](const std::vector<double>& p, int d) {
          return spheredpp::upper_hemisphere_map(row_to_point(p), d).coords;
        },
        py::arg("p"), py::arg("d"));
  m.def("jacobian_stereographic",
        [](const std::vector<double>& p) {
          return spheredpp::jacobian_stereographic(row_to_point(p));
        },
        py::arg("p"));
  m.def("jacobian_radial_inverse",
        [](const std::vector<double>& y, int d) {
          return spheredpp::jacobian_radial_inverse({y}, d);
        },
        py::arg("y"), py::arg("d"));
  m.def("upper_map_derivative_norms",
        [](const std::vector<double>& p, int d) {
          const auto norms =
              spheredpp::upper_map_derivative_norms(row_to_point(p), d);
          return std::make_pair(norms.tangential, norms.radial);
        },
        py::arg("p"), py::arg("d"));

  py::class_<spheredpp::RadialMap>(m, "RadialMap")
      .def(py::init<int>(), py::arg("d"))
      .def_property_readonly("d", &spheredpp::RadialMap::dim)
      .def("forward", &spheredpp::RadialMap::forward, py::arg("t"))
      .def("inverse", &spheredpp::RadialMap::inverse, py::arg("s"))
      .def("inverse_derivative", &spheredpp::RadialMap::inverse_derivative,
           py::arg("s"))
      .def("enable_cache", &spheredpp::RadialMap::enable_cache);

  // kernel
  py::class_<spheredpp::EnsembleParams>(m, "EnsembleParams")
      .def_readonly("d", &spheredpp::EnsembleParams::d)
      .def_readonly("L", &spheredpp::EnsembleParams::L)
      .def_readonly("N", &spheredpp::EnsembleParams::N)
      .def("__repr__", [](const spheredpp::EnsembleParams& p) {
        return "EnsembleParams(d=" + std::to_string(p.d) +
               ", L=" + std::to_string(p.L) + ", N=" + std::to_string(p.N) + ")";
      });
  m.def("make_params", &spheredpp::make_params, py::arg("d"), py::arg("L"));
  m.def("multi_index_count",
        [](int d, long L) { return spheredpp::enumerate_multi_indices(d, L).size(); },
        py::arg("d"), py::arg("L"));

  py::class_<spheredpp::Kernel>(m, "Kernel")
      .def(py::init<spheredpp::EnsembleParams>(), py::arg("params"))
      .def_property_readonly("log_diagonal", &spheredpp::Kernel::log_diagonal)
      .def("sphere",
           [](const spheredpp::Kernel& k, const std::vector<double>& p,
              const std::vector<double>& q) {
             const auto v = k.sphere(row_to_point(p), row_to_point(q));
             return std::make_pair(v.log_modulus, v.phase);
           },
           py::arg("p"), py::arg("q"),
           "Returns (log_modulus, phase) of K(p, q).")
      .def("normalized_sq",
           [](const spheredpp::Kernel& k, const std::vector<double>& p,
              const std::vector<double>& q) {
             return k.normalized_sq(row_to_point(p), row_to_point(q));
           },
           py::arg("p"), py::arg("q"))
      .def("normalized_sq_lower_bound",
           [](const spheredpp::Kernel& k, const std::vector<double>& p,
              const std::vector<double>& q) {
             return k.normalized_sq_lower_bound(row_to_point(p),
                                                row_to_point(q));
           },
           py::arg("p"), py::arg("q"));

  // sampler
  m.def("sample",
        [](int d, long L, std::uint64_t seed, long budget) {
          spheredpp::SamplerConfig config{spheredpp::make_params(d, L), seed,
                                          budget};
          const auto draw = spheredpp::sample(config);
          return py::make_tuple(points_to_array(draw.points),
                                draw.rejection_count);
        },
        py::arg("d"), py::arg("L"), py::arg("seed") = 0,
        py::arg("max_rejections_per_point") = 10'000'000,
        "Exact draw; returns (points array of shape (N, 2d+1), rejections).");
  m.def("eigenvalue_sampler_d1",
        [](int n, std::uint64_t seed) {
          return points_to_array(spheredpp::eigenvalue_sampler_d1(n, seed).points);
        },
        py::arg("n"), py::arg("seed") = 0);
  m.def("conditional_intensity",
        [](const std::vector<double>& x,
           const py::array_t<double, py::array::c_style | py::array::forcecast>&
               accepted,
           int d, long L) {
          spheredpp::SchurState state(spheredpp::make_params(d, L));
          for (const auto& p : array_to_points(accepted)) state.accept(p);
          return spheredpp::conditional_intensity(row_to_point(x), state);
        },
        py::arg("x"), py::arg("accepted"), py::arg("d"), py::arg("L"),
        "Conditional kernel diagonal given the accepted points.");
  m.def("intensity_uniformity_test",
        [](const std::vector<
               py::array_t<double, py::array::c_style | py::array::forcecast>>&
               configs,
           int d, long L, int cells) {
          const spheredpp::EnsembleParams params = spheredpp::make_params(d, L);
          std::vector<spheredpp::Configuration> wrapped(configs.size());
          for (std::size_t i = 0; i < configs.size(); ++i) {
            wrapped[i].params = params;
            wrapped[i].points = array_to_points(configs[i]);
          }
          const auto result =
              spheredpp::intensity_uniformity_test(wrapped, cells);
          py::dict out;
          out["statistic"] = result.statistic;
          out["dof"] = result.dof;
          out["p_value"] = result.p_value;
          return out;
        },
        py::arg("configs"), py::arg("d"), py::arg("L"), py::arg("cells") = 32,
        "Pooled chi-square of point counts over an equal-volume partition.");

  // energy
  m.def("riesz_energy",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>&
               pts,
           double s) { return spheredpp::riesz_energy(array_to_points(pts), s); },
        py::arg("points"), py::arg("s"));
  m.def("continuous_energy", &spheredpp::continuous_energy, py::arg("s"),
        py::arg("n"));
  m.def("expected_energy_bound",
        [](int d, long L, double s, double tau) {
          return spheredpp::expected_energy_bound(spheredpp::make_params(d, L), s, tau);
        },
        py::arg("d"), py::arg("L"), py::arg("s"), py::arg("tau"));
  m.def("optimal_bound_tau",
        [](int d, long L, double s) {
          return spheredpp::optimal_bound_tau(spheredpp::make_params(d, L), s);
        },
        py::arg("d"), py::arg("L"), py::arg("s"));
  m.def("optimal_rate_constant", &spheredpp::optimal_rate_constant,
        py::arg("d"), py::arg("s"));
  m.def("ensemble_energy_coefficient", &spheredpp::ensemble_energy_coefficient,
        py::arg("d"), py::arg("s"));
  m.def("harmonic_energy_coefficient", &spheredpp::harmonic_energy_coefficient,
        py::arg("dim"), py::arg("s"));
  m.def("projective_two_energy_coefficient",
        &spheredpp::projective_two_energy_coefficient, py::arg("d"));
  m.def("expected_energy_mc",
        [](int d, long L, double s, int replicates, std::uint64_t seed,
           int threads) {
          spheredpp::SamplerConfig config{spheredpp::make_params(d, L), seed};
          const auto mc =
              spheredpp::expected_energy_mc(config, s, replicates, threads);
          py::dict out;
          out["mean"] = mc.mean;
          out["stderr"] = mc.std_error;
          out["replicates"] = mc.replicates;
          return out;
        },
        py::arg("d"), py::arg("L"), py::arg("s"), py::arg("replicates"),
        py::arg("seed") = 0, py::arg("threads") = 0);

  // verification
  m.def("verify_suite",
        [](const std::string& name) {
          py::list out;
          for (const auto& r : spheredpp::verify_suite(name)) {
            py::dict item;
            item["name"] = r.name;
            item["pass"] = r.pass;
            item["value"] = r.value;
            item["tolerance"] = r.tolerance;
            out.append(item);
          }
          return out;
        },
        py::arg("name") = "all");
}
